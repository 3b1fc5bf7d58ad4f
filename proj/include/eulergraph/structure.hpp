#pragma once

// Structural analysis: biconnected components typed by their cycle
// spectra, pairwise cycle intersections with the combined-cycle residue
// law, the per-class intersection parity checks, and exact desk-scale
// planarity testing.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "eulergraph/classify.hpp"
#include "eulergraph/cycles.hpp"
#include "eulergraph/graph.hpp"

namespace eg {

struct BlockProfile {
    std::vector<std::vector<int>> blocks;      // edge indices per block
    std::vector<std::array<bool, 4>> spectra;  // residue spectrum per block
    std::vector<NodeId> cut_nodes;
    std::array<int, 4> beta_single{};              // blocks with spectrum {i}
    std::map<std::pair<int, int>, int> beta_pair;  // blocks with spectrum {i,j}
    int beta_other = 0;                            // bridges, or >= 3 residues

    int beta_pair_count(int i, int j) const {
        auto it = beta_pair.find({i, j});
        return it == beta_pair.end() ? 0 : it->second;
    }
};

namespace detail {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& g_)
        : g(g_), disc(g_.order(), -1), low(g_.order(), 0), is_cut(g_.order(), 0) {}

    void dfs(NodeId v, int parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (NodeId w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            if (e == parent_edge) continue;
            if (disc[w] == -1) {
                ++children;
                edge_stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent_edge != -1 || children > 1) is_cut[v] = 1;
                    std::vector<int> blk;
                    for (;;) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(top);
                        if (top == e) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

// Dense relabeled subgraph on a set of edges of g.
inline Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids, std::vector<NodeId>* node_map = nullptr) {
    std::map<NodeId, NodeId> remap;
    for (int e : edge_ids) {
        remap.emplace(g.edges()[e].first, 0);
        remap.emplace(g.edges()[e].second, 0);
    }
    NodeId next = 0;
    for (auto& [node, id] : remap) id = next++;
    std::vector<Edge> edges;
    edges.reserve(edge_ids.size());
    for (int e : edge_ids) edges.emplace_back(remap[g.edges()[e].first], remap[g.edges()[e].second]);
    if (node_map) {
        node_map->assign(remap.size(), 0);
        for (auto& [node, id] : remap) (*node_map)[id] = node;
    }
    return Graph::build(next, std::move(edges));
}

} // namespace detail

// Biconnected decomposition with residue typing. Requires connectivity.
inline BlockProfile blocks(const Graph& g, std::uint64_t cap = kDefaultCycleCap) {
    if (!is_connected(g)) fail(Errc::Disconnected, "block analysis requires a connected graph");
    detail::BlockFinder bf(g);
    bf.dfs(0, -1);

    BlockProfile out;
    out.blocks = std::move(bf.blocks);
    for (NodeId v = 0; v < g.order(); ++v)
        if (bf.is_cut[v]) out.cut_nodes.push_back(v);

    for (auto& blk : out.blocks) {
        std::sort(blk.begin(), blk.end());
        std::array<bool, 4> spec{};
        if (blk.size() > 1) {
            Graph sub = detail::edge_subgraph(g, blk);
            spec = cycle_spectrum(sub, cap);
        }
        out.spectra.push_back(spec);
        int distinct = spec[0] + spec[1] + spec[2] + spec[3];
        if (distinct == 1) {
            for (int i = 0; i < 4; ++i)
                if (spec[i]) out.beta_single[i] += 1;
        } else if (distinct == 2) {
            int lo = -1, hi = -1;
            for (int i = 0; i < 4; ++i)
                if (spec[i]) (lo == -1 ? lo : hi) = i;
            out.beta_pair[{lo, hi}] += 1;
        } else {
            out.beta_other += 1; // bridge (no cycles) or >= 3 residues
        }
    }
    return out;
}

enum class IntersectKind { Disjoint, SingleNode, Path, Complex };

struct CycleIntersection {
    IntersectKind kind = IntersectKind::Disjoint;
    int path_len = 0;                    // t, when kind == Path
    std::optional<int> combined_residue; // (i + j - 2t) mod 4, when kind == Path
};

inline int combined_residue(int i, int j, int t) {
    return ((i + j - 2 * t) % 4 + 4) % 4;
}

// Classifies the intersection of two cycles. Path(t) requires the shared
// edges to form one path whose node set is exactly the shared node set;
// anything else with shared structure beyond a single node is Complex.
inline CycleIntersection intersect_cycles(const Cycle& c1, const Cycle& c2) {
    std::set<NodeId> n1(c1.nodes.begin(), c1.nodes.end());
    std::set<Edge> e1;
    for (size_t i = 0; i < c1.nodes.size(); ++i) {
        NodeId a = c1.nodes[i], b = c1.nodes[(i + 1) % c1.nodes.size()];
        e1.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<NodeId> shared_nodes;
    for (NodeId v : c2.nodes)
        if (n1.count(v)) shared_nodes.push_back(v);
    std::vector<Edge> shared_edges;
    for (size_t i = 0; i < c2.nodes.size(); ++i) {
        NodeId a = c2.nodes[i], b = c2.nodes[(i + 1) % c2.nodes.size()];
        Edge e{std::min(a, b), std::max(a, b)};
        if (e1.count(e)) shared_edges.push_back(e);
    }

    CycleIntersection out;
    if (shared_nodes.empty()) {
        out.kind = IntersectKind::Disjoint;
        return out;
    }
    if (shared_edges.empty()) {
        out.kind = shared_nodes.size() == 1 ? IntersectKind::SingleNode : IntersectKind::Complex;
        return out;
    }
    // shared edges must form a single open path covering all shared nodes
    std::map<NodeId, int> deg;
    for (auto [a, b] : shared_edges) {
        deg[a] += 1;
        deg[b] += 1;
    }
    bool path_shape = deg.size() == shared_edges.size() + 1 && deg.size() == shared_nodes.size();
    int ends = 0;
    for (auto& [v, d] : deg) {
        if (d == 1) ++ends;
        else if (d != 2) path_shape = false;
    }
    if (!path_shape || ends != 2) {
        out.kind = IntersectKind::Complex;
        return out;
    }
    // connectivity of the shared subgraph: walk from one endpoint
    NodeId end = -1;
    for (auto& [v, d] : deg)
        if (d == 1) { end = v; break; }
    std::map<NodeId, std::vector<NodeId>> adj;
    for (auto [a, b] : shared_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int walked = 0;
    NodeId prev = -1, cur = end;
    for (;;) {
        NodeId nxt = -1;
        for (NodeId w : adj[cur])
            if (w != prev) { nxt = w; break; }
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
        ++walked;
    }
    if (walked != static_cast<int>(shared_edges.size())) {
        out.kind = IntersectKind::Complex;
        return out;
    }
    out.kind = IntersectKind::Path;
    out.path_len = static_cast<int>(shared_edges.size());
    out.combined_residue = combined_residue(c1.residue(), c2.residue(), out.path_len);
    return out;
}

struct ParityViolation {
    Cycle a, b;
    int path_len = 0;
    int combined = 0; // residue of the combined cycle, outside the class
};

// Checks every single-path intersection against the class law: the
// combined cycle (a + b - 2t mod 4) must land back in {i,j}. This yields
// the per-class parity rules, an empty set of constraints for e02, and
// "no path intersections at all" for e13. Complex intersections are out
// of scope of the law and skipped.
inline std::vector<ParityViolation> intersection_parity_report(const Graph& g, const EpsilonClass& cls,
                                                               std::uint64_t cap = kDefaultCycleCap) {
    if (cls.kind != ClassKind::TwoType)
        fail(Errc::BadParameters, "parity report is defined for two-type classes");
    std::vector<ParityViolation> out;
    if (cls.is_two_type(0, 2)) return out; // every combined cycle is even: no constraint

    CycleSet cycles = enumerate_cycles(g, cap);
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            CycleIntersection x = intersect_cycles(cycles[i], cycles[j]);
            if (x.kind != IntersectKind::Path) continue;
            int r = *x.combined_residue;
            if (!cls.residues[r]) out.push_back({cycles[i], cycles[j], x.path_len, r});
        }
    }
    return out;
}

inline bool has_degree_two_node(const Graph& g) {
    for (NodeId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) return true;
    return false;
}

namespace detail {

// Subdivision router: connect the given branch-vertex pairs by paths that
// are internally disjoint and avoid all branch vertices. Exhaustive.
struct SubdivRouter {
    const Graph& g;
    std::vector<char> is_branch;
    std::vector<char> used;
    std::vector<std::pair<NodeId, NodeId>> pairs;

    SubdivRouter(const Graph& g_, const std::vector<NodeId>& branch)
        : g(g_), is_branch(g_.order(), 0), used(g_.order(), 0) {
        for (NodeId b : branch) is_branch[b] = 1;
    }

    bool feasible(size_t from) const {
        // every remaining pair must still be connectable
        for (size_t k = from; k < pairs.size(); ++k) {
            auto [a, b] = pairs[k];
            std::vector<char> seen(g.order(), 0);
            std::vector<NodeId> stack{a};
            seen[a] = 1;
            bool ok = false;
            while (!stack.empty() && !ok) {
                NodeId v = stack.back();
                stack.pop_back();
                for (NodeId w : g.neighbors(v)) {
                    if (w == b) { ok = true; break; }
                    if (!seen[w] && !is_branch[w] && !used[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    bool route(size_t idx) {
        if (idx == pairs.size()) return true;
        auto [a, b] = pairs[idx];
        return dfs(a, b, idx);
    }

    // enumerate simple paths v -> target; internal nodes stay flagged in
    // used[] while deeper pairs are routed
    bool dfs(NodeId v, NodeId target, size_t idx) {
        for (NodeId w : g.neighbors(v)) {
            if (w == target) {
                if (feasible(idx + 1) && route(idx + 1)) return true;
                continue;
            }
            if (is_branch[w] || used[w]) continue;
            used[w] = 1;
            bool ok = dfs(w, target, idx);
            used[w] = 0;
            if (ok) return true;
        }
        return false;
    }
};

inline bool has_k33_subdivision(const Graph& g) {
    std::vector<NodeId> cand;
    for (NodeId v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    const int n = static_cast<int>(cand.size());
    if (n < 6) return false;
    std::vector<int> six(6);
    // choose 6 branch vertices, then the 10 bipartitions into 3+3
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
        for (int a2 = 1; a2 < 5; ++a2) {
            for (int a3 = a2 + 1; a3 < 6; ++a3) {
                std::vector<NodeId> branch, left, right;
                left = {cand[idx[0]], cand[idx[a2]], cand[idx[a3]]};
                for (int k = 1; k < 6; ++k)
                    if (k != a2 && k != a3) right.push_back(cand[idx[k]]);
                branch = left;
                branch.insert(branch.end(), right.begin(), right.end());
                SubdivRouter r(g, branch);
                for (NodeId x : left)
                    for (NodeId y : right) r.pairs.push_back({x, y});
                if (r.feasible(0) && r.route(0)) return true;
            }
        }
        int k = 5;
        while (k >= 0 && idx[k] == n - 6 + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

inline bool has_k5_subdivision(const Graph& g) {
    std::vector<NodeId> cand;
    for (NodeId v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 4) cand.push_back(v);
    const int n = static_cast<int>(cand.size());
    if (n < 5) return false;
    std::vector<int> idx{0, 1, 2, 3, 4};
    for (;;) {
        std::vector<NodeId> branch;
        for (int k = 0; k < 5; ++k) branch.push_back(cand[idx[k]]);
        SubdivRouter r(g, branch);
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) r.pairs.push_back({branch[a], branch[b]});
        if (r.feasible(0) && r.route(0)) return true;
        int k = 4;
        while (k >= 0 && idx[k] == n - 5 + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

// Shortest cycle length, or 0 if acyclic. BFS from every node.
inline int girth(const Graph& g) {
    int best = 0;
    for (NodeId r = 0; r < g.order(); ++r) {
        std::vector<int> dist(g.order(), -1), par(g.order(), -1);
        std::vector<NodeId> queue{r};
        dist[r] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            NodeId v = queue[qi];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    queue.push_back(w);
                } else if (par[v] != w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool planar_block(const Graph& g);

// Planarity of one connected graph: reduce (prune degree <= 1, suppress
// degree-2 nodes, drop parallel edges that suppression creates), split
// into blocks, and search the reduced blocks for K33/K5 subdivisions.
inline bool planar_connected(const Graph& g) {
    std::vector<std::set<NodeId>> adj(g.order());
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v = 0; v < g.order(); ++v) {
            if (adj[v].size() == 1) {
                NodeId w = *adj[v].begin();
                adj[v].clear();
                adj[w].erase(v);
                changed = true;
            } else if (adj[v].size() == 2) {
                auto it = adj[v].begin();
                NodeId a = *it++, b = *it;
                adj[v].clear();
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b); // multi-edges are irrelevant to planarity
                adj[b].insert(a);
                changed = true;
            }
        }
    }
    std::vector<Edge> edges;
    std::vector<NodeId> live;
    std::vector<NodeId> remap(g.order(), -1);
    for (NodeId v = 0; v < g.order(); ++v)
        if (!adj[v].empty()) {
            remap[v] = static_cast<NodeId>(live.size());
            live.push_back(v);
        }
    if (live.empty()) return true;
    for (NodeId v : live)
        for (NodeId w : adj[v])
            if (v < w) edges.emplace_back(remap[v], remap[w]);
    Graph h = Graph::build(static_cast<int>(live.size()), std::move(edges));

    // a graph is planar iff all its blocks are; recurse when splitting or
    // reduction made progress, otherwise test the block directly
    if (!is_connected(h)) {
        // reduction can disconnect (it only removes planar-irrelevant parts)
        std::vector<char> seen(h.order(), 0);
        for (NodeId s = 0; s < h.order(); ++s) {
            if (seen[s]) continue;
            std::vector<NodeId> comp, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                NodeId v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (NodeId w : h.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            std::vector<int> comp_edges;
            std::set<NodeId> cs(comp.begin(), comp.end());
            for (int e = 0; e < h.size(); ++e)
                if (cs.count(h.edges()[e].first)) comp_edges.push_back(e);
            if (comp_edges.empty()) continue;
            if (!planar_connected(detail::edge_subgraph(h, comp_edges))) return false;
        }
        return true;
    }

    detail::BlockFinder bf(h);
    bf.dfs(0, -1);
    if (bf.blocks.size() > 1) {
        for (auto& blk : bf.blocks)
            if (!planar_connected(detail::edge_subgraph(h, blk))) return false;
        return true;
    }
    return planar_block(h);
}

inline bool planar_block(const Graph& g) {
    const int n = g.order(), q = g.size();
    if (n < 5 || q < 9) return true;
    if (q > 3 * n - 6) return false;
    int gi = girth(g);
    // Euler-formula bound sharpened by girth: q(girth-2) <= girth(n-2)
    if (gi >= 4 && static_cast<long long>(q) * (gi - 2) > static_cast<long long>(gi) * (n - 2)) return false;
    if (has_k33_subdivision(g)) return false;
    if (has_k5_subdivision(g)) return false;
    return true;
}

} // namespace detail

// Exact planarity at desk scale (exhaustive Kuratowski-subdivision search
// after planarity-preserving reductions).
inline bool is_planar(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    for (NodeId s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::vector<int> comp_edges;
        std::set<NodeId> cs(comp.begin(), comp.end());
        for (int e = 0; e < g.size(); ++e)
            if (cs.count(g.edges()[e].first)) comp_edges.push_back(e);
        if (comp_edges.empty()) continue;
        if (!detail::planar_connected(detail::edge_subgraph(g, comp_edges))) return false;
    }
    return true;
}

struct TwoTypeWitness {
    Cycle ci, cj; // residues i and j, intersecting in a single path
    int path_len = 0;
};

// First (in canonical order) pair of cycles with residues i and j that
// intersect in a path, for a 2-connected two-type graph. Absence of a
// witness is a theorem violation, reported as nullopt.
inline std::optional<TwoTypeWitness> biconnected_two_type_witness(const Graph& g, const EpsilonClass& cls,
                                                                  std::uint64_t cap = kDefaultCycleCap) {
    if (cls.kind != ClassKind::TwoType)
        fail(Errc::BadParameters, "witness search is defined for two-type classes");
    BlockProfile bp = blocks(g, cap);
    if (bp.blocks.size() != 1 || g.order() < 3)
        fail(Errc::NotBiconnected, "witness search requires a single block");

    const int i = cls.low(), j = cls.high();
    CycleSet cycles = enumerate_cycles(g, cap);
    std::vector<const Cycle*> ci, cj;
    for (const Cycle& c : cycles) {
        if (c.residue() == i) ci.push_back(&c);
        else if (c.residue() == j) cj.push_back(&c);
    }
    for (const Cycle* a : ci) {
        for (const Cycle* b : cj) {
            CycleIntersection x = intersect_cycles(*a, *b);
            if (x.kind == IntersectKind::Path) return TwoTypeWitness{*a, *b, x.path_len};
        }
    }
    return std::nullopt;
}

} // namespace eg
