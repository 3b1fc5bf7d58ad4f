#pragma once

// Deterministic generators for the named graph families (cycles, parallel
// paths, cycle books, the triangle-of-squares, the smallest two-type (0,1)
// graph, hypercubes, path additions) plus tree planting and its inverse,
// the 2-core. Node ordering is deterministic: base structure first, added
// nodes in creation order.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulergraph/classify.hpp"
#include "eulergraph/graph.hpp"
#include "eulergraph/graph6.hpp"

namespace eg {

inline Graph cycle_graph(int n) {
    if (n < 3) fail(Errc::TooShort, "cycle needs length >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, std::move(edges));
}

// C_n with n = n1*n2, plus m new internally disjoint paths of length n2
// along each of the n1 consecutive segments (v_{k*n2}, v_{(k+1)*n2}).
// Yields an (n + m*n1*(n2-1), n*(m+1))-graph with degrees 2 and 2(m+1).
// For n1 = 2 both segments join the same node pair, which therefore
// receives 2m added paths.
inline Graph parallel_paths(int n1, int n2, int m) {
    if (n1 <= 1 || n2 <= 1 || m <= 0) fail(Errc::BadParameters, "need n1>1, n2>1, m>0");
    const int n = n1 * n2;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    int next = n;
    for (int k = 0; k < n1; ++k) {
        NodeId a = k * n2;
        NodeId b = ((k + 1) * n2) % n;
        for (int path = 0; path < m; ++path) {
            NodeId prev = a;
            for (int step = 0; step < n2 - 1; ++step) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, b);
        }
    }
    return Graph::build(next, std::move(edges));
}

// k cycles of length len sharing exactly one edge (0,1), otherwise
// disjoint: a (2 + k(len-2), 1 + k(len-1))-graph.
inline Graph book(int k, int len) {
    if (k < 2 || len < 3) fail(Errc::BadParameters, "need k>=2 cycles of length >=3");
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int page = 0; page < k; ++page) {
        NodeId prev = 0;
        for (int step = 0; step < len - 2; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::build(next, std::move(edges));
}

// Triangle 0,1,2 with a 4-cycle hung on each edge: the (9,12) non-bipartite
// Euler graph that decomposes into three 4-cycles or into a 3-cycle plus a
// 9-cycle.
inline Graph triangle_of_squares() {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    int next = 3;
    for (auto [a, b] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}) {
        edges.emplace_back(a, next);
        edges.emplace_back(next, next + 1);
        edges.emplace_back(next + 1, b);
        next += 2;
    }
    return Graph::build(next, std::move(edges));
}

// C5 on 0..4 plus two nodes each adjacent to the nonadjacent pair {0,2}:
// the smallest two-type (0,1) Euler graph, a (7,9)-graph. The class is
// re-checked at construction time.
inline Graph smallest_eps01() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(0, 5);
    edges.emplace_back(2, 5);
    edges.emplace_back(0, 6);
    edges.emplace_back(2, 6);
    Graph g = Graph::build(7, std::move(edges));
    if (epsilon_class(g) != EpsilonClass::two_type(0, 1))
        fail(Errc::ClassCheckFailed, "construction is not two-type (0,1)");
    return g;
}

inline Graph hypercube(int d) {
    if (d < 1) fail(Errc::BadParameters, "dimension must be >= 1");
    const int n = 1 << d;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (v < (v ^ (1 << b))) edges.emplace_back(v, v ^ (1 << b));
    return Graph::build(n, std::move(edges));
}

// Adds `count` internally disjoint paths of length `len` between u and v.
inline Graph path_addition(const Graph& base, NodeId u, NodeId v, int count, int len) {
    if (u == v) fail(Errc::BadParameters, "endpoints must differ");
    if (u < 0 || v < 0 || u >= base.order() || v >= base.order())
        fail(Errc::NodeOutOfRange, "endpoint outside base graph");
    if (count < 1 || len < 1) fail(Errc::BadParameters, "need count>=1 and len>=1");
    if (len == 1) {
        if (count != 1) fail(Errc::BadParameters, "multiple length-1 paths would be parallel edges");
        if (base.has_edge(u, v)) fail(Errc::WouldCreateMultiEdge, "edge already present");
    }
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    int next = base.order();
    for (int path = 0; path < count; ++path) {
        NodeId prev = u;
        for (int step = 0; step < len - 1; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::build(next, std::move(edges));
}

// A rooted tree to identify with a host node: parent-vector form, with
// parent[root] == -1.
struct PlantedTree {
    NodeId host = 0;
    std::vector<int> parent;
    int root = 0;
};

using PlantingPlan = std::vector<PlantedTree>;

inline Graph plant(const Graph& g, const PlantingPlan& plan) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    int next = g.order();
    for (const PlantedTree& t : plan) {
        if (t.host < 0 || t.host >= g.order()) fail(Errc::InvalidPlan, "host node out of range");
        const int tn = static_cast<int>(t.parent.size());
        if (tn < 1 || t.root < 0 || t.root >= tn || t.parent[t.root] != -1)
            fail(Errc::InvalidPlan, "root must exist and have parent -1");
        std::vector<NodeId> map(static_cast<size_t>(tn), -1);
        map[t.root] = t.host;
        for (int x = 0; x < tn; ++x) {
            if (x == t.root) continue;
            // every node must reach the root without a cycle
            int hops = 0, y = x;
            while (y != t.root) {
                if (t.parent[y] < 0 || t.parent[y] >= tn || ++hops > tn)
                    fail(Errc::InvalidPlan, "parent vector is not a rooted tree");
                y = t.parent[y];
            }
            map[x] = next++;
        }
        for (int x = 0; x < tn; ++x)
            if (x != t.root) edges.emplace_back(map[x], map[t.parent[x]]);
    }
    return Graph::build(next, std::move(edges));
}

// 2-core: repeatedly delete nodes of degree <= 1; survivors keep their
// relative order (so the core of planting onto a pendant-free graph is
// that graph itself). Empty when nothing survives.
inline std::optional<Graph> core_graph(const Graph& g) {
    std::vector<int> deg(static_cast<size_t>(g.order()));
    for (NodeId v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::vector<char> dead(static_cast<size_t>(g.order()), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v = 0; v < g.order(); ++v) {
            if (!dead[v] && deg[v] <= 1) {
                dead[v] = 1;
                changed = true;
                for (NodeId w : g.neighbors(v))
                    if (!dead[w]) --deg[w];
            }
        }
    }
    std::vector<NodeId> remap(static_cast<size_t>(g.order()), -1);
    NodeId next = 0;
    for (NodeId v = 0; v < g.order(); ++v)
        if (!dead[v]) remap[v] = next++;
    if (next == 0) return std::nullopt;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (!dead[u] && !dead[v]) edges.emplace_back(remap[u], remap[v]);
    return Graph::build(next, std::move(edges));
}

// Construction mini-language: "cycle n=5", "parallel-paths n1=2 n2=3 m=1",
// "book k=3 len=5", "triangle-of-squares", "smallest-eps01",
// "hypercube d=4", "path-addition base=<graph6> u=0 v=4 count=2 len=4".
struct ConstructionSpec {
    std::string name;
    std::map<std::string, std::string> args;

    static ConstructionSpec parse(const std::string& text) {
        std::istringstream in(text);
        ConstructionSpec spec;
        if (!(in >> spec.name)) fail(Errc::ParseError, "empty construction spec");
        std::string tok;
        while (in >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
                fail(Errc::ParseError, "expected key=value, got: " + tok);
            spec.args[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        return spec;
    }

    int get_int(const std::string& key) const {
        auto it = args.find(key);
        if (it == args.end()) fail(Errc::ParseError, "missing argument " + key);
        try {
            size_t used = 0;
            int v = std::stoi(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing junk");
            return v;
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad integer for " + key + ": " + it->second);
        }
    }
};

inline Graph construct_from_spec(const std::string& text) {
    ConstructionSpec s = ConstructionSpec::parse(text);
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        for (auto& [k, v] : s.args) {
            bool known = false;
            for (const char* key : keys)
                if (k == key) known = true;
            if (!known) fail(Errc::ParseError, "unknown argument " + k + " for " + s.name);
        }
    };
    if (s.name == "cycle") {
        expect_keys({"n"});
        return cycle_graph(s.get_int("n"));
    }
    if (s.name == "parallel-paths") {
        expect_keys({"n1", "n2", "m"});
        return parallel_paths(s.get_int("n1"), s.get_int("n2"), s.get_int("m"));
    }
    if (s.name == "book") {
        expect_keys({"k", "len"});
        return book(s.get_int("k"), s.get_int("len"));
    }
    if (s.name == "triangle-of-squares") {
        expect_keys({});
        return triangle_of_squares();
    }
    if (s.name == "smallest-eps01") {
        expect_keys({});
        return smallest_eps01();
    }
    if (s.name == "hypercube") {
        expect_keys({"d"});
        return hypercube(s.get_int("d"));
    }
    if (s.name == "path-addition") {
        expect_keys({"base", "u", "v", "count", "len"});
        auto it = s.args.find("base");
        if (it == s.args.end()) fail(Errc::ParseError, "missing argument base");
        Graph base = parse_graph6(it->second);
        return path_addition(base, s.get_int("u"), s.get_int("v"), s.get_int("count"), s.get_int("len"));
    }
    fail(Errc::ParseError, "unknown construction: " + s.name);
}

} // namespace eg
