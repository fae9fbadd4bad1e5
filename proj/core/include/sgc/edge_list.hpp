#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Parse failure with the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Edge list plus the id remap applied to make node ids contiguous.
/// node_ids[compact id] == original id; identity when input was contiguous.
struct EdgeListData {
    std::vector<EdgeRecord> records;  // compact ids
    std::vector<long long> node_ids;
    bool remapped = false;

    Graph to_graph() const { return build_graph(records, static_cast<int>(node_ids.size())); }
};

/// Format: one edge per line, "u v" or "u v w", '#' starts a comment line,
/// blank lines ignored, each undirected pair listed once.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

/// One integer per line, node order = id order.
std::vector<int> read_labels(std::istream& in);
std::vector<int> read_labels_file(const std::string& path);
void write_labels(std::ostream& out, const std::vector<int>& labels);

}  // namespace sgc
