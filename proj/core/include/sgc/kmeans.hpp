#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "sgc/graph.hpp"

namespace sgc {

struct KMeansOptions {
    int restarts = 10;
    int max_iter = 300;
    std::uint64_t seed = 0;
};

struct KMeansResult {
    ClusterAssignment assignment;
    Eigen::MatrixXd centroids;  // K x d
    double inertia = 0.0;
    int iterations = 0;         // of the winning restart
};

/// Lloyd iterations over `restarts` k-means++ initializations; the lowest
/// inertia wins (ties -> earliest restart). Nearest-centroid ties resolve to
/// the lowest centroid index; emptied clusters are re-seeded at the point
/// farthest from its assigned centroid.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, const KMeansOptions& opts = {});

/// Scales every nonzero row to unit Euclidean norm; zero rows stay zero.
Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& points);

}  // namespace sgc
