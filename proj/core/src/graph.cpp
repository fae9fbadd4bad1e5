#include "sgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sgc {

Graph build_graph(const std::vector<EdgeRecord>& records, std::optional<int> n) {
    Graph g;
    bool any_weight = false;
    int max_id = -1;
    for (const auto& r : records) {
        if (r.u < 0 || r.v < 0) throw std::invalid_argument("negative node id");
        if (r.u == r.v)
            throw std::invalid_argument("self-loop at node " + std::to_string(r.u));
        if (r.w) any_weight = true;
        max_id = std::max({max_id, r.u, r.v});
    }
    const int nn = n ? *n : max_id + 1;
    if (max_id >= nn)
        throw std::invalid_argument("node id " + std::to_string(max_id) +
                                    " out of range for n = " + std::to_string(nn));

    g.n_ = nn;
    g.weighted_ = any_weight;
    g.edges_.reserve(records.size());
    for (const auto& r : records) {
        const double w = r.w.value_or(1.0);
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("edge (" + std::to_string(r.u) + "," +
                                        std::to_string(r.v) + ") has nonpositive or non-finite weight");
        g.edges_.push_back({std::min(r.u, r.v), std::max(r.u, r.v), w});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(g.edges_[i].u) +
                                        "," + std::to_string(g.edges_[i].v) + ")");
    }

    g.strengths_.assign(nn, 0.0);
    for (const auto& e : g.edges_) {
        g.strengths_[e.u] += e.w;
        g.strengths_[e.v] += e.w;
        g.total_weight_ += e.w;
    }
    return g;
}

Eigen::SparseMatrix<double> Graph::adjacency() const {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(2 * edges_.size());
    for (const auto& e : edges_) {
        t.emplace_back(e.u, e.v, e.w);
        t.emplace_back(e.v, e.u, e.w);
    }
    Eigen::SparseMatrix<double> a(n_, n_);
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

Eigen::SparseMatrix<double> laplacian(const Graph& g) {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(2 * g.edge_count() + g.node_count());
    for (const auto& e : g.edges()) {
        t.emplace_back(e.u, e.v, -e.w);
        t.emplace_back(e.v, e.u, -e.w);
    }
    const auto& d = g.strengths();
    for (int i = 0; i < g.node_count(); ++i) t.emplace_back(i, i, d[i]);
    Eigen::SparseMatrix<double> l(g.node_count(), g.node_count());
    l.setFromTriplets(t.begin(), t.end());
    return l;
}

NormalizeMode parse_normalize_mode(const std::string& s) {
    if (s == "none") return NormalizeMode::none;
    if (s == "degree") return NormalizeMode::degree;
    throw std::invalid_argument("unknown normalize mode: " + s);
}

std::string to_string(NormalizeMode m) {
    return m == NormalizeMode::none ? "none" : "degree";
}

Eigen::SparseMatrix<double> normalized_input(const Graph& g, NormalizeMode mode) {
    if (mode == NormalizeMode::none) return g.adjacency();
    const auto& d = g.strengths();
    std::vector<double> inv_sqrt(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] > 0.0))
            throw std::invalid_argument("degree normalization requires positive degree; node " +
                                        std::to_string(i) + " has none");
        inv_sqrt[i] = 1.0 / std::sqrt(d[i]);
    }
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(2 * g.edge_count());
    for (const auto& e : g.edges()) {
        const double w = e.w * inv_sqrt[e.u] * inv_sqrt[e.v];
        t.emplace_back(e.u, e.v, w);
        t.emplace_back(e.v, e.u, w);
    }
    Eigen::SparseMatrix<double> m(g.node_count(), g.node_count());
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

Eigen::SparseMatrix<double> laplacian_of(const Eigen::SparseMatrix<double>& m) {
    Eigen::VectorXd row_sums = m * Eigen::VectorXd::Ones(m.cols());
    Eigen::SparseMatrix<double> l = -m;
    for (int i = 0; i < m.rows(); ++i) l.coeffRef(i, i) += row_sums[i];
    l.makeCompressed();
    return l;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int v : adj[u]) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

ClusterAssignment::ClusterAssignment(std::vector<int> l, int k_) : labels(std::move(l)), k(k_) {
    if (k < 1) throw std::invalid_argument("cluster count must be >= 1");
    for (int x : labels)
        if (x < 0 || x >= k) throw std::invalid_argument("label out of range");
}

std::vector<int> ClusterAssignment::cluster_sizes() const {
    std::vector<int> sizes(k, 0);
    for (int x : labels) ++sizes[x];
    for (int c = 0; c < k; ++c)
        if (sizes[c] == 0) throw std::invalid_argument("empty cluster " + std::to_string(c));
    return sizes;
}

Interconnection Interconnection::transposed() const {
    Interconnection t;
    t.i = j;
    t.j = i;
    t.ni = nj;
    t.nj = ni;
    t.row_counts = col_counts;
    t.col_counts = row_counts;
    t.m = m;
    t.weight_sum = weight_sum;
    return t;
}

PartitionView extract_interconnections(const Graph& g, const ClusterAssignment& a) {
    if (a.size() != g.node_count())
        throw std::invalid_argument("assignment length does not match node count");
    const int k = a.k;
    const auto sizes = a.cluster_sizes();

    PartitionView view;
    view.node_maps.resize(k);
    view.intra_edges.assign(k, 0);
    std::vector<int> local(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) {
        local[u] = static_cast<int>(view.node_maps[a.labels[u]].size());
        view.node_maps[a.labels[u]].push_back(u);
    }

    std::vector<std::vector<EdgeRecord>> intra(k);
    const auto pair_index = [k](int i, int j) {  // i < j
        return i * k - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<Interconnection> inter;
    if (k >= 2) {
        inter.resize(static_cast<std::size_t>(k) * (k - 1) / 2);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                auto& c = inter[pair_index(i, j)];
                c.i = i;
                c.j = j;
                c.ni = sizes[i];
                c.nj = sizes[j];
                c.row_counts.assign(sizes[i], 0);
                c.col_counts.assign(sizes[j], 0);
            }
    }

    for (const auto& e : g.edges()) {
        const int cu = a.labels[e.u], cv = a.labels[e.v];
        if (cu == cv) {
            intra[cu].push_back({local[e.u], local[e.v],
                                 g.weighted() ? std::optional<double>(e.w) : std::nullopt});
            ++view.intra_edges[cu];
        } else {
            const int i = std::min(cu, cv), j = std::max(cu, cv);
            auto& c = inter[pair_index(i, j)];
            const int r = cu == i ? local[e.u] : local[e.v];
            const int s = cu == i ? local[e.v] : local[e.u];
            ++c.row_counts[r];
            ++c.col_counts[s];
            ++c.m;
            c.weight_sum += e.w;
        }
    }

    view.subgraphs.reserve(k);
    for (int c = 0; c < k; ++c) view.subgraphs.push_back(build_graph(intra[c], sizes[c]));
    view.inter = std::move(inter);
    return view;
}

}  // namespace sgc
