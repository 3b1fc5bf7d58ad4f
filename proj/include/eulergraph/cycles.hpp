#pragma once

// Cycle machinery for Euler graphs: Hierholzer circuits, the deterministic
// peel decomposition, exhaustive simple-cycle and decomposition enumeration,
// per-edge cycle parities, and edge-disjoint path counting.
//
// The exhaustive enumerators use 64-bit node masks and therefore require
// order <= 64; everything here is exact, with hard caps instead of silent
// truncation on the exponential objects.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "eulergraph/graph.hpp"

namespace eg {

inline constexpr std::uint64_t kDefaultCycleCap = 1'000'000;
inline constexpr std::uint64_t kDefaultDecompCap = 100'000;

struct Cycle {
    // Canonical rotation: smallest node first, oriented toward its
    // smaller neighbor on the cycle.
    std::vector<NodeId> nodes;

    int length() const { return static_cast<int>(nodes.size()); }
    int residue() const { return length() % 4; }

    bool operator==(const Cycle& o) const { return nodes == o.nodes; }
    bool operator<(const Cycle& o) const { return nodes < o.nodes; }
};

using CycleDecomposition = std::vector<Cycle>; // edge-disjoint, union = edge set
using CycleSet = std::vector<Cycle>;           // all simple cycles, lex order

inline Cycle canonical_cycle(std::vector<NodeId> seq) {
    const size_t n = seq.size();
    size_t lo = 0;
    for (size_t i = 1; i < n; ++i)
        if (seq[i] < seq[lo]) lo = i;
    NodeId prev = seq[(lo + n - 1) % n];
    NodeId next = seq[(lo + 1) % n];
    std::vector<NodeId> out;
    out.reserve(n);
    if (next <= prev) {
        for (size_t i = 0; i < n; ++i) out.push_back(seq[(lo + i) % n]);
    } else {
        for (size_t i = 0; i < n; ++i) out.push_back(seq[(lo + n - i) % n]);
    }
    return Cycle{std::move(out)};
}

// Closed walk of length q using every edge exactly once, starting at the
// smallest node of positive degree. Deterministic: the walk always leaves
// along the smallest-index unused neighbor.
inline std::vector<NodeId> euler_circuit(const Graph& g) {
    if (!is_eulerian(g)) fail(Errc::NotEulerian, "euler_circuit requires an Euler graph");
    if (g.size() == 0) return {0};

    NodeId start = 0;
    while (g.degree(start) == 0) ++start;

    std::vector<char> used(static_cast<size_t>(g.size()), 0);
    std::vector<int> cursor(static_cast<size_t>(g.order()), 0);
    std::vector<NodeId> stack{start}, walk;
    walk.reserve(static_cast<size_t>(g.size()) + 1);
    while (!stack.empty()) {
        NodeId v = stack.back();
        auto nbrs = g.neighbors(v);
        int& c = cursor[v];
        while (c < static_cast<int>(nbrs.size()) && used[g.edge_index(v, nbrs[c])]) ++c;
        if (c == static_cast<int>(nbrs.size())) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            NodeId w = nbrs[c];
            used[g.edge_index(v, w)] = 1;
            stack.push_back(w);
        }
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

// Deterministic cycle decomposition: repeatedly walk from the smallest
// node with remaining degree, always taking the smallest unused neighbor,
// and close a cycle at the first node revisited by the current walk.
inline CycleDecomposition peel_decomposition(const Graph& g) {
    if (!is_eulerian(g)) fail(Errc::NotEulerian, "peel_decomposition requires an Euler graph");

    const int p = g.order();
    std::vector<char> removed(static_cast<size_t>(g.size()), 0);
    std::vector<char> on_walk_edge(static_cast<size_t>(g.size()), 0);
    std::vector<int> walk_pos(static_cast<size_t>(p), -1);
    std::vector<int> rem_deg(static_cast<size_t>(p), 0);
    for (NodeId v = 0; v < p; ++v) rem_deg[v] = g.degree(v);
    int edges_left = g.size();

    CycleDecomposition out;
    while (edges_left > 0) {
        NodeId start = 0;
        while (rem_deg[start] == 0) ++start;

        std::vector<NodeId> path;
        std::vector<int> path_edges;
        path.push_back(start);
        walk_pos[start] = 0;
        NodeId cur = start;
        for (;;) {
            NodeId next = -1;
            int eidx = -1;
            for (NodeId w : g.neighbors(cur)) {
                int e = g.edge_index(cur, w);
                if (!removed[e] && !on_walk_edge[e]) {
                    next = w;
                    eidx = e;
                    break;
                }
            }
            // an even graph never strands the walk before a revisit
            if (next == -1) fail(Errc::NotEulerian, "internal: walk stranded");
            if (walk_pos[next] >= 0) {
                int pos = walk_pos[next];
                std::vector<NodeId> cyc(path.begin() + pos, path.end());
                removed[eidx] = 1;
                --rem_deg[cur];
                --rem_deg[next];
                --edges_left;
                for (size_t i = static_cast<size_t>(pos); i < path_edges.size(); ++i) {
                    int e = path_edges[i];
                    removed[e] = 1;
                    --rem_deg[g.edges()[e].first];
                    --rem_deg[g.edges()[e].second];
                    --edges_left;
                }
                for (size_t i = 0; i < static_cast<size_t>(pos); ++i) on_walk_edge[path_edges[i]] = 0;
                for (NodeId v : path) walk_pos[v] = -1;
                out.push_back(canonical_cycle(std::move(cyc)));
                break;
            }
            on_walk_edge[eidx] = 1;
            path_edges.push_back(eidx);
            path.push_back(next);
            walk_pos[next] = static_cast<int>(path.size()) - 1;
            cur = next;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct MaskAdj {
    // neighbor bitmasks; requires order <= 64
    std::vector<std::uint64_t> adj;
    explicit MaskAdj(const Graph& g) : adj(static_cast<size_t>(g.order()), 0) {
        if (g.order() > 64) fail(Errc::Unsupported, "cycle enumeration limited to order <= 64");
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1ull << v;
            adj[v] |= 1ull << u;
        }
    }
};

// Invokes cb(path); cb may return void, or bool where false stops the
// whole enumeration early.
template <class F>
bool emit(F&& cb, const std::vector<NodeId>& path) {
    if constexpr (std::is_void_v<std::invoke_result_t<F&, const std::vector<NodeId>&>>) {
        cb(path);
        return true;
    } else {
        return cb(path);
    }
}

template <class F>
bool cycle_dfs(const MaskAdj& m, NodeId root, std::vector<NodeId>& path, std::uint64_t visited,
               std::uint64_t above_root, std::uint64_t cap, std::uint64_t& count, F&& cb) {
    NodeId v = path.back();
    // close back to the root: canonical iff second node < last node
    if (path.size() >= 3 && (m.adj[v] >> root & 1) && path[1] < v) {
        if (++count > cap) fail(Errc::CycleBudgetExceeded, "more than " + std::to_string(cap) + " cycles");
        if (!emit(cb, path)) return false;
    }
    std::uint64_t cand = m.adj[v] & ~visited & above_root;
    while (cand) {
        NodeId w = static_cast<NodeId>(std::countr_zero(cand));
        cand &= cand - 1;
        path.push_back(w);
        bool go = cycle_dfs(m, root, path, visited | (1ull << w), above_root, cap, count, cb);
        path.pop_back();
        if (!go) return false;
    }
    return true;
}

} // namespace detail

// Streams every simple cycle exactly once, in lexicographic order of the
// canonical node sequence. cb takes const std::vector<NodeId>& and may
// return bool (false = stop early).
template <class F>
void for_each_cycle(const Graph& g, std::uint64_t cap, F&& cb) {
    detail::MaskAdj m(g);
    std::uint64_t count = 0;
    std::vector<NodeId> path;
    path.reserve(static_cast<size_t>(g.order()));
    for (NodeId r = 0; r < g.order(); ++r) {
        path.assign(1, r);
        std::uint64_t above = (r == 63) ? 0 : ~((2ull << r) - 1);
        if (!detail::cycle_dfs(m, r, path, 1ull << r, above, cap, count, cb)) return;
    }
}

inline CycleSet enumerate_cycles(const Graph& g, std::uint64_t cap = kDefaultCycleCap) {
    CycleSet out;
    for_each_cycle(g, cap, [&](const std::vector<NodeId>& path) { out.push_back(Cycle{path}); });
    return out;
}

// Per-edge parity of the number of simple cycles through it, indexed like
// Graph::edges().
inline std::vector<std::uint8_t> edge_cycle_parities(const Graph& g, std::uint64_t cap = kDefaultCycleCap) {
    std::vector<std::uint8_t> parity(static_cast<size_t>(g.size()), 0);
    for_each_cycle(g, cap, [&](const std::vector<NodeId>& path) {
        for (size_t i = 0; i < path.size(); ++i) {
            NodeId a = path[i], b = path[(i + 1) % path.size()];
            parity[g.edge_index(a, b)] ^= 1;
        }
    });
    return parity;
}

namespace detail {

template <class F>
struct DecompState {
    const Graph& g;
    std::vector<std::uint64_t> radj; // remaining adjacency masks
    int edges_left;
    std::uint64_t cap;
    std::uint64_t count = 0;
    CycleDecomposition cycles;
    F& cb;

    DecompState(const Graph& g_, std::uint64_t cap_, F& cb_)
        : g(g_), radj(MaskAdj(g_).adj), edges_left(g_.size()), cap(cap_), cb(cb_) {}

    void cut(NodeId a, NodeId b) {
        radj[a] &= ~(1ull << b);
        radj[b] &= ~(1ull << a);
        --edges_left;
    }
    void restore(NodeId a, NodeId b) {
        radj[a] |= 1ull << b;
        radj[b] |= 1ull << a;
        ++edges_left;
    }

    bool leaf() {
        if (++count > cap)
            fail(Errc::DecompositionBudgetExceeded, "more than " + std::to_string(cap) + " decompositions");
        if constexpr (std::is_void_v<std::invoke_result_t<F&, const CycleDecomposition&>>) {
            cb(cycles);
            return true;
        } else {
            return cb(cycles);
        }
    }

    // Branch over every simple path target<-...-cur completing a cycle
    // through the pinned smallest uncovered edge (target, first).
    bool extend(std::vector<NodeId>& path, std::uint64_t visited, NodeId target, int from) {
        NodeId cur = path.back();
        if ((radj[cur] >> target & 1) && path.size() >= 3) {
            cut(cur, target);
            cycles.push_back(Cycle{path}); // already canonical, see below
            bool go = cover(from);
            cycles.pop_back();
            restore(cur, target);
            if (!go) return false;
        }
        std::uint64_t cand = radj[cur] & ~visited & ~(1ull << target);
        while (cand) {
            NodeId w = static_cast<NodeId>(std::countr_zero(cand));
            cand &= cand - 1;
            cut(cur, w);
            path.push_back(w);
            bool go = extend(path, visited | (1ull << w), target, from);
            path.pop_back();
            restore(cur, w);
            if (!go) return false;
        }
        return true;
    }

    bool cover(int from) {
        if (edges_left == 0) return leaf();
        auto all = g.edges();
        int e = from;
        while (!(radj[all[e].first] >> all[e].second & 1)) ++e;
        auto [u, v] = all[e];
        // the cycle through the smallest uncovered edge starts at u, its
        // smallest node, toward v, its smallest remaining neighbor: the
        // path below is emitted in canonical rotation.
        cut(u, v);
        std::vector<NodeId> path{u, v};
        bool go = extend(path, (1ull << u) | (1ull << v), u, e + 1);
        restore(u, v);
        return go;
    }
};

} // namespace detail

// Streams every partition of the edge set into cycles exactly once, as a
// sorted sequence of canonical cycles. cb takes const CycleDecomposition&
// and may return bool (false = stop early).
template <class F>
void for_each_decomposition(const Graph& g, std::uint64_t cap, F&& cb) {
    if (!is_eulerian(g)) fail(Errc::NotEulerian, "decompositions require an Euler graph");
    detail::DecompState<F> st(g, cap, cb);
    st.cover(0);
}

inline std::vector<CycleDecomposition> enumerate_decompositions(const Graph& g,
                                                                std::uint64_t cap = kDefaultDecompCap) {
    std::vector<CycleDecomposition> out;
    for_each_decomposition(g, cap, [&](const CycleDecomposition& d) { out.push_back(d); });
    std::sort(out.begin(), out.end());
    return out;
}

inline bool validate_decomposition(const Graph& g, const CycleDecomposition& d) {
    std::vector<char> covered(static_cast<size_t>(g.size()), 0);
    int total = 0;
    for (const Cycle& c : d) {
        for (size_t i = 0; i < c.nodes.size(); ++i) {
            int e = g.edge_index(c.nodes[i], c.nodes[(i + 1) % c.nodes.size()]);
            if (e < 0 || covered[e]) return false;
            covered[e] = 1;
            ++total;
        }
    }
    return total == g.size();
}

// Maximum number of pairwise edge-disjoint u-v paths: unit-capacity max
// flow with BFS augmentation, smallest-index tie-breaking.
inline int count_edge_disjoint_paths(const Graph& g, NodeId u, NodeId v) {
    if (u == v) fail(Errc::SameNode, "endpoints must differ");
    const int p = g.order();
    // net flow along each canonical edge, in {-1,0,1}
    std::vector<int> flow(static_cast<size_t>(g.size()), 0);
    auto residual = [&](NodeId a, NodeId b) {
        int e = g.edge_index(a, b);
        int f = flow[e];
        if (a > b) f = -f;
        return 1 - f;
    };
    int total = 0;
    for (;;) {
        std::vector<int> pred(static_cast<size_t>(p), -1);
        std::vector<NodeId> queue{u};
        pred[u] = u;
        for (size_t qi = 0; qi < queue.size() && pred[v] == -1; ++qi) {
            NodeId a = queue[qi];
            for (NodeId b : g.neighbors(a)) {
                if (pred[b] == -1 && residual(a, b) > 0) {
                    pred[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if (pred[v] == -1) break;
        for (NodeId b = v; b != u; b = pred[b]) {
            NodeId a = pred[b];
            int e = g.edge_index(a, b);
            flow[e] += (a < b) ? 1 : -1;
        }
        ++total;
    }
    return total;
}

} // namespace eg
