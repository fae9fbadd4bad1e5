#pragma once

#include <Eigen/SparseCore>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgc {

struct EdgeRecord {
    int u = 0;
    int v = 0;
    std::optional<double> w;  // absent for unweighted input
};

struct Edge {
    int u;  // u < v
    int v;
    double w;  // strictly positive, 1 for unweighted graphs
};

/// Immutable undirected graph with symmetric positive weights and no
/// self-loops. Edges are stored canonically (u < v, sorted lexicographically).
class Graph {
public:
    Graph() = default;

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool weighted() const { return weighted_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Total edge weight (equals edge_count() for unweighted graphs).
    double total_weight() const { return total_weight_; }

    /// Weighted degree (strength) vector d = W 1.
    const std::vector<double>& strengths() const { return strengths_; }

    Eigen::SparseMatrix<double> adjacency() const;

    friend Graph build_graph(const std::vector<EdgeRecord>& records, std::optional<int> n);

private:
    int n_ = 0;
    bool weighted_ = false;
    double total_weight_ = 0.0;
    std::vector<Edge> edges_;
    std::vector<double> strengths_;
};

/// Validates and canonicalizes edge records. Throws std::invalid_argument on
/// self-loops, duplicate pairs, nonpositive/non-finite weights, or ids >= n.
Graph build_graph(const std::vector<EdgeRecord>& records, std::optional<int> n = std::nullopt);

/// L = D - A (weighted: S - W). Symmetric PSD, zero row sums.
Eigen::SparseMatrix<double> laplacian(const Graph& g);

enum class NormalizeMode { none, degree };

NormalizeMode parse_normalize_mode(const std::string& s);
std::string to_string(NormalizeMode m);

/// mode == none: the adjacency/weight matrix itself.
/// mode == degree: D^{-1/2} A D^{-1/2} (strengths for weighted graphs).
/// Throws std::invalid_argument if a node has zero degree under mode == degree.
Eigen::SparseMatrix<double> normalized_input(const Graph& g, NormalizeMode mode);

/// Laplacian of an arbitrary symmetric nonnegative matrix: diag(M 1) - M.
Eigen::SparseMatrix<double> laplacian_of(const Eigen::SparseMatrix<double>& m);

/// Maximal connected node sets, ordered by smallest member; each set sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct ClusterAssignment {
    std::vector<int> labels;  // values in [0, k)
    int k = 1;

    ClusterAssignment() = default;
    ClusterAssignment(std::vector<int> l, int k_);

    int size() const { return static_cast<int>(labels.size()); }
    /// Per-cluster node counts; throws if a cluster is empty.
    std::vector<int> cluster_sizes() const;
};

/// One inter-cluster block C_ij (i < j) reduced to what the statistics need:
/// per-row/column nonzero counts, the nonzero tally and the weight sum.
struct Interconnection {
    int i = 0;
    int j = 0;                    // i < j
    int ni = 0;                   // rows = nodes of cluster i
    int nj = 0;
    std::vector<int> row_counts;  // length ni, binarized
    std::vector<int> col_counts;  // length nj
    std::int64_t m = 0;           // number of inter-cluster edges
    double weight_sum = 0.0;

    /// Same block with the row/column roles swapped.
    Interconnection transposed() const;
};

/// Partition-induced view: per-cluster induced subgraphs (internal edges only,
/// locally reindexed) and the K(K-1)/2 interconnection blocks.
struct PartitionView {
    std::vector<Graph> subgraphs;
    std::vector<std::vector<int>> node_maps;   // local index -> original node id
    std::vector<std::int64_t> intra_edges;     // per-cluster edge counts
    std::vector<Interconnection> inter;        // empty when K < 2
};

/// Splits g along the assignment. Counts reconcile:
/// sum_k intra_edges[k] + sum_{i<j} inter.m == g.edge_count().
PartitionView extract_interconnections(const Graph& g, const ClusterAssignment& a);

}  // namespace sgc
