#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// algorithms: the cycle enumerator here does unpruned DFS from every root
// with set-based deduplication, the gracefulness oracle tries every
// injective labeling, and the decomposition counter is a plain recursion
// over edge bitmasks without canonicalization.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "eulergraph/graph.hpp"

namespace oracle {

using eg::Graph;
using eg::NodeId;

// Every simple cycle, found as closed walks from every start node in both
// directions, deduplicated by a rotation/reflection-normalized key.
inline std::set<std::vector<NodeId>> naive_cycles(const Graph& g) {
    std::set<std::vector<NodeId>> out;
    std::vector<NodeId> path;
    std::vector<char> on_path(g.order(), 0);

    auto normalize = [](std::vector<NodeId> c) {
        auto best = c;
        const size_t n = c.size();
        for (int dir = 0; dir < 2; ++dir) {
            for (size_t s = 0; s < n; ++s) {
                std::vector<NodeId> rot;
                rot.reserve(n);
                for (size_t i = 0; i < n; ++i) rot.push_back(c[(s + i) % n]);
                if (rot < best) best = rot;
            }
            std::reverse(c.begin(), c.end());
        }
        return best;
    };

    auto dfs = [&](auto&& self, NodeId start, NodeId v) -> void {
        for (NodeId w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) out.insert(normalize(path));
            if (!on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (NodeId s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
    return out;
}

// Exhaustive search over injective labelings in BFS order; definitive
// gracefulness for small sizes.
inline bool brute_force_graceful(const Graph& g) {
    const int p = g.order(), q = g.size();
    if (p > q + 1) return false;
    std::vector<NodeId> order;
    std::vector<char> seen(p, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (NodeId w : g.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                order.push_back(w);
            }
    std::vector<int> phi(p, -1);
    std::vector<char> lab_used(q + 1, 0), diff_used(q + 1, 0);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == order.size()) return true;
        NodeId v = order[i];
        for (int lab = 0; lab <= q; ++lab) {
            if (lab_used[lab]) continue;
            std::vector<int> marked;
            bool ok = true;
            for (NodeId w : g.neighbors(v)) {
                if (phi[w] == -1) continue;
                int d = std::abs(lab - phi[w]);
                if (d == 0 || diff_used[d]) {
                    ok = false;
                    break;
                }
                diff_used[d] = 1;
                marked.push_back(d);
            }
            if (ok) {
                phi[v] = lab;
                lab_used[lab] = 1;
                if (self(self, i + 1)) return true;
                phi[v] = -1;
                lab_used[lab] = 0;
            }
            for (int d : marked) diff_used[d] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// Number of partitions of the edge set into cycles, via plain bitmask
// recursion (suitable for q <= ~16).
inline std::uint64_t naive_decomposition_count(const Graph& g) {
    const int q = g.size();
    auto cycles = naive_cycles(g);
    std::vector<std::uint32_t> cycle_masks;
    for (const auto& c : cycles) {
        std::uint32_t m = 0;
        for (size_t i = 0; i < c.size(); ++i) m |= 1u << g.edge_index(c[i], c[(i + 1) % c.size()]);
        cycle_masks.push_back(m);
    }
    std::map<std::uint32_t, std::uint64_t> memo;
    auto rec = [&](auto&& self, std::uint32_t remaining) -> std::uint64_t {
        if (remaining == 0) return 1;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        std::uint32_t lowest = remaining & (~remaining + 1);
        std::uint64_t total = 0;
        for (std::uint32_t cm : cycle_masks)
            if ((cm & lowest) && (cm & ~remaining) == 0) total += self(self, remaining & ~cm);
        memo[remaining] = total;
        return total;
    };
    if (q > 30) return 0;
    return rec(rec, q == 32 ? ~0u : (1u << q) - 1);
}

} // namespace oracle
