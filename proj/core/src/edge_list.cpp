#include "sgc/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace sgc {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_ll(const std::string& tok, int line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, "expected integer node id, got '" + tok + "'");
    return v;
}

double parse_weight(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected numeric weight, got '" + tok + "'");
    }
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
    struct RawEdge {
        long long u, v;
        std::optional<double> w;
        int line;
    };
    std::vector<RawEdge> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError(lineno, "expected 'u v' or 'u v w'");
        RawEdge e{parse_ll(toks[0], lineno), parse_ll(toks[1], lineno), std::nullopt, lineno};
        if (e.u < 0 || e.v < 0) throw ParseError(lineno, "negative node id");
        if (toks.size() == 3) e.w = parse_weight(toks[2], lineno);
        raw.push_back(e);
    }

    std::map<long long, int> remap;
    for (const auto& e : raw) {
        remap.emplace(e.u, 0);
        remap.emplace(e.v, 0);
    }
    EdgeListData data;
    data.node_ids.reserve(remap.size());
    int next = 0;
    for (auto& [orig, compact] : remap) {
        compact = next++;
        data.node_ids.push_back(orig);
    }
    data.remapped = false;
    for (std::size_t i = 0; i < data.node_ids.size(); ++i)
        if (data.node_ids[i] != static_cast<long long>(i)) data.remapped = true;

    data.records.reserve(raw.size());
    for (const auto& e : raw) {
        if (e.u == e.v) throw ParseError(e.line, "self-loop");
        if (e.w && (!(e.w.value() > 0.0) || !std::isfinite(e.w.value())))
            throw ParseError(e.line, "weight must be positive and finite");
        data.records.push_back({remap[e.u], remap[e.v], e.w});
    }
    // duplicate detection with line attribution
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 0; i < data.records.size(); ++i) {
        auto key = std::minmax(data.records[i].u, data.records[i].v);
        auto [it, inserted] = seen.emplace(key, raw[i].line);
        if (!inserted) throw ParseError(raw[i].line, "duplicate edge");
    }
    return data;
}

EdgeListData read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    char buf[64];
    for (const auto& e : g.edges()) {
        if (g.weighted()) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.w);
        } else {
            std::snprintf(buf, sizeof buf, "%d %d\n", e.u, e.v);
        }
        out << buf;
    }
}

std::vector<int> read_labels(std::istream& in) {
    std::vector<int> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 1) throw ParseError(lineno, "expected one label per line");
        labels.push_back(static_cast<int>(parse_ll(toks[0], lineno)));
    }
    return labels;
}

std::vector<int> read_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_labels(in);
}

void write_labels(std::ostream& out, const std::vector<int>& labels) {
    for (int x : labels) out << x << '\n';
}

}  // namespace sgc
