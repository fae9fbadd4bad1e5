#include "sgc/kmeans.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sgc/rng.hpp"

namespace sgc {

namespace {

// squared distances of every point to every centroid: |x|^2 - 2 x.c + |c|^2
Eigen::MatrixXd sq_dist(const Eigen::MatrixXd& pts, const Eigen::VectorXd& pts_sq,
                        const Eigen::MatrixXd& centroids) {
    Eigen::VectorXd c_sq = centroids.rowwise().squaredNorm();
    Eigen::MatrixXd d = (-2.0 * pts * centroids.transpose());
    d.colwise() += pts_sq;
    d.rowwise() += c_sq.transpose();
    return d.cwiseMax(0.0);
}

Eigen::MatrixXd plus_plus_init(const Eigen::MatrixXd& pts, int k, Rng& rng) {
    const int n = static_cast<int>(pts.rows());
    Eigen::MatrixXd centroids(k, pts.cols());
    centroids.row(0) = pts.row(static_cast<int>(rng.below(n)));
    Eigen::VectorXd best = (pts.rowwise() - centroids.row(0)).rowwise().squaredNorm();
    for (int c = 1; c < k; ++c) {
        const double total = best.sum();
        int pick = 0;
        if (total > 0.0) {
            double r = rng.uniform() * total;
            for (; pick < n - 1; ++pick) {
                r -= best[pick];
                if (r <= 0.0) break;
            }
        } else {
            pick = static_cast<int>(rng.below(n));
        }
        centroids.row(c) = pts.row(pick);
        best = best.cwiseMin((pts.rowwise() - centroids.row(c)).rowwise().squaredNorm());
    }
    return centroids;
}

struct RunResult {
    std::vector<int> labels;
    Eigen::MatrixXd centroids;
    double inertia;
    int iterations;
};

RunResult lloyd(const Eigen::MatrixXd& pts, const Eigen::VectorXd& pts_sq, int k,
                Eigen::MatrixXd centroids, int max_iter) {
    const int n = static_cast<int>(pts.rows());
    std::vector<int> labels(n, -1), prev(n, -2);
    std::vector<int> counts(k);
    int iter = 0;
    double inertia = 0.0;
    while (iter < max_iter) {
        ++iter;
        Eigen::MatrixXd d = sq_dist(pts, pts_sq, centroids);
        inertia = 0.0;
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            int arg = 0;
            double bestv = d(i, 0);
            for (int c = 1; c < k; ++c)
                if (d(i, c) < bestv) {  // strict: ties keep the lowest index
                    bestv = d(i, c);
                    arg = c;
                }
            labels[i] = arg;
            ++counts[arg];
            inertia += bestv;
        }
        // repair empty clusters at the farthest point from its centroid
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            int far = 0;
            double farv = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[labels[i]] <= 1) continue;
                const double v = d(i, labels[i]);
                if (v > farv) {
                    farv = v;
                    far = i;
                }
            }
            --counts[labels[far]];
            labels[far] = c;
            counts[c] = 1;
            centroids.row(c) = pts.row(far);
        }
        if (labels == prev) break;
        prev = labels;
        // centroid update
        centroids.setZero();
        for (int i = 0; i < n; ++i) centroids.row(labels[i]) += pts.row(i);
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0) centroids.row(c) /= counts[c];
    }
    // final inertia against the final centroids
    Eigen::MatrixXd d = sq_dist(pts, pts_sq, centroids);
    inertia = 0.0;
    for (int i = 0; i < n; ++i) inertia += d(i, labels[i]);
    return {std::move(labels), std::move(centroids), inertia, iter};
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, const KMeansOptions& opts) {
    const int n = static_cast<int>(points.rows());
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n < k) throw std::invalid_argument("fewer points than clusters");
    if (points.cols() < 1) throw std::invalid_argument("points need at least one dimension");

    const Eigen::VectorXd pts_sq = points.rowwise().squaredNorm();
    RunResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    const int restarts = std::max(1, opts.restarts);
    for (int r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(opts.seed, 0x6b6d6532ULL, static_cast<std::uint64_t>(r)));
        auto run = lloyd(points, pts_sq, k, plus_plus_init(points, k, rng), opts.max_iter);
        if (run.inertia < best.inertia) best = std::move(run);
    }

    KMeansResult out;
    out.assignment = ClusterAssignment(std::move(best.labels), k);
    out.centroids = std::move(best.centroids);
    out.inertia = best.inertia;
    out.iterations = best.iterations;
    return out;
}

Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& points) {
    Eigen::MatrixXd out = points;
    for (int i = 0; i < out.rows(); ++i) {
        const double nrm = out.row(i).norm();
        if (nrm > 0.0) out.row(i) /= nrm;
    }
    return out;
}

}  // namespace sgc
