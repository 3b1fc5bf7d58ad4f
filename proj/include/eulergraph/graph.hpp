#pragma once

// Immutable simple undirected graph plus the elementary predicates
// (connectivity, Eulerianness, regularity, bipartiteness) everything
// else builds on. Nodes are dense zero-based integers.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eulergraph/error.hpp"

namespace eg {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>; // always u < v

class Graph {
public:
    // Canonical construction: validates endpoints, rejects loops and
    // duplicate pairs, sorts adjacency and the edge list.
    static Graph build(int order, std::vector<Edge> edge_list) {
        if (order < 1) fail(Errc::BadParameters, "order must be >= 1");
        for (auto& [u, v] : edge_list) {
            if (u == v) fail(Errc::LoopEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (u < 0 || v < 0 || u >= order || v >= order)
                fail(Errc::NodeOutOfRange,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with order " + std::to_string(order));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
        if (dup != edge_list.end())
            fail(Errc::DuplicateEdge,
                 "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
        return Graph(order, std::move(edge_list));
    }

    int order() const { return p_; }
    int size() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(NodeId u, NodeId v) const {
        if (u == v) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Index of edge {u,v} in the canonical edge list, or -1.
    int edge_index(NodeId u, NodeId v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const { return p_ == other.p_ && edges_ == other.edges_; }

private:
    Graph(int order, std::vector<Edge> sorted_edges)
        : p_(order), edges_(std::move(sorted_edges)), adj_(static_cast<size_t>(order)) {
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int p_;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adj_;
};

inline Graph build_graph(int order, std::vector<Edge> edge_list) {
    return Graph::build(order, std::move(edge_list));
}

inline bool is_connected(const Graph& g) {
    const int p = g.order();
    std::vector<char> seen(static_cast<size_t>(p), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == p;
}

inline bool is_eulerian(const Graph& g) {
    for (NodeId v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return is_connected(g);
}

inline std::optional<int> regular_degree(const Graph& g) {
    int d = g.degree(0);
    for (NodeId v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

inline bool is_bipartite(const Graph& g) {
    const int p = g.order();
    std::vector<int> color(static_cast<size_t>(p), -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < p; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Edge-list text format: first line "p q", then q lines "u v",
// zero-based; lines starting with '#' are comments.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) fail(Errc::ParseError, "missing header line");
    std::istringstream hdr(line);
    long long p = 0, q = 0;
    if (!(hdr >> p >> q) || p < 1 || q < 0) fail(Errc::ParseError, "bad header line: " + line);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(q));
    for (long long i = 0; i < q; ++i) {
        if (!next_line()) fail(Errc::ParseError, "expected " + std::to_string(q) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) fail(Errc::ParseError, "bad edge line: " + line);
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return Graph::build(static_cast<int>(p), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace eg
