#pragma once

// Isomorph-free exhaustive corpora at desk scale (order <= 11):
// canonical forms via individualization-refinement, generation of all
// graphs / all connected Eulerian graphs of a given order by vertex
// augmentation with canonical-form deduplication.
//
// Every connected Eulerian graph G of order n arises as H plus one node
// joined to the odd-degree nodes of H, where H ranges over all graphs
// (connected or not) of order n-1: take H = G - v for any node v.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

#include "eulergraph/graph.hpp"

namespace eg::corpus {

inline constexpr int kMaxCanonOrder = 11; // n(n-1)/2 <= 64-bit certificate

struct Small {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonOrder + 1> adj{};

    int edge_count() const {
        int q = 0;
        for (int v = 0; v < n; ++v) q += std::popcount(adj[v]);
        return q / 2;
    }
    bool connected() const {
        if (n == 0) return false;
        std::uint16_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint16_t next = 0;
            std::uint16_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (1u << n) - 1;
    }
    std::uint16_t odd_degree_mask() const {
        std::uint16_t m = 0;
        for (int v = 0; v < n; ++v)
            if (std::popcount(adj[v]) % 2 == 1) m |= 1u << v;
        return m;
    }
};

inline Small to_small(const Graph& g) {
    if (g.order() > kMaxCanonOrder) fail(Errc::Unsupported, "canonical forms limited to order <= 11");
    Small s;
    s.n = g.order();
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= 1u << v;
        s.adj[v] |= 1u << u;
    }
    return s;
}

inline Graph to_graph(const Small& s) {
    std::vector<Edge> edges;
    for (int u = 0; u < s.n; ++u) {
        std::uint16_t above = s.adj[u] >> (u + 1);
        while (above) {
            int v = u + 1 + std::countr_zero(above);
            above &= above - 1;
            edges.emplace_back(u, v);
        }
    }
    return Graph::build(s.n, std::move(edges));
}

namespace detail {

// Certificate under a node -> position map: bit (a,b), a < b in position
// space, packed row-major.
inline std::uint64_t cert_under(const Small& s, const std::array<int, kMaxCanonOrder + 1>& pos) {
    std::uint64_t cert = 0;
    int bit = 0;
    std::array<int, kMaxCanonOrder + 1> node_at{};
    for (int v = 0; v < s.n; ++v) node_at[pos[v]] = v;
    for (int a = 0; a < s.n; ++a)
        for (int b = a + 1; b < s.n; ++b, ++bit)
            if (s.adj[node_at[a]] >> node_at[b] & 1) cert |= 1ull << bit;
    return cert;
}

struct Canonicalizer {
    const Small& s;
    std::uint64_t best = 0;
    bool have = false;

    explicit Canonicalizer(const Small& s_) : s(s_) {}

    // 1-WL refinement of an ordered coloring; only ever splits classes.
    void refine(std::array<int, kMaxCanonOrder + 1>& color) const {
        const int n = s.n;
        for (;;) {
            struct Key {
                int old_color;
                std::array<int, kMaxCanonOrder + 1> nbr;
                int nbr_count;
                int node;
            };
            std::array<Key, kMaxCanonOrder + 1> keys;
            for (int v = 0; v < n; ++v) {
                Key& k = keys[v];
                k.old_color = color[v];
                k.nbr_count = 0;
                std::uint16_t m = s.adj[v];
                while (m) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    k.nbr[k.nbr_count++] = color[w];
                }
                std::sort(k.nbr.begin(), k.nbr.begin() + k.nbr_count);
                k.node = v;
            }
            std::array<int, kMaxCanonOrder + 1> order{};
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
                if (keys[a].old_color != keys[b].old_color) return keys[a].old_color < keys[b].old_color;
                if (keys[a].nbr_count != keys[b].nbr_count) return keys[a].nbr_count < keys[b].nbr_count;
                for (int i = 0; i < keys[a].nbr_count; ++i)
                    if (keys[a].nbr[i] != keys[b].nbr[i]) return keys[a].nbr[i] < keys[b].nbr[i];
                return false;
            });
            int classes_before = 0, classes_after = 0;
            {
                std::array<char, kMaxCanonOrder + 1> seen{};
                for (int v = 0; v < n; ++v)
                    if (!seen[color[v]]) {
                        seen[color[v]] = 1;
                        ++classes_before;
                    }
            }
            std::array<int, kMaxCanonOrder + 1> next_color{};
            int c = -1;
            for (int i = 0; i < n; ++i) {
                int v = order[i];
                bool new_class =
                    i == 0 || keys[order[i - 1]].old_color != keys[v].old_color ||
                    keys[order[i - 1]].nbr_count != keys[v].nbr_count ||
                    !std::equal(keys[order[i - 1]].nbr.begin(), keys[order[i - 1]].nbr.begin() + keys[v].nbr_count,
                                keys[v].nbr.begin());
                if (new_class) ++c;
                next_color[v] = c;
            }
            classes_after = c + 1;
            color = next_color;
            if (classes_after == classes_before) return;
        }
    }

    void search(std::array<int, kMaxCanonOrder + 1> color) {
        refine(color);
        const int n = s.n;
        // first non-singleton class, by color id
        std::array<int, kMaxCanonOrder + 1> class_size{};
        for (int v = 0; v < n; ++v) class_size[color[v]] += 1;
        int target = -1;
        for (int v = 0; v < n; ++v) {
            int cc = color[v];
            if (class_size[cc] > 1 && (target == -1 || cc < target)) target = cc;
        }
        if (target == -1) {
            std::uint64_t cert = cert_under(s, color);
            if (!have || cert > best) {
                best = cert;
                have = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            auto branched = color;
            for (int w = 0; w < n; ++w)
                if (branched[w] > target || (branched[w] == target && w != v)) branched[w] += 1;
            search(branched);
        }
    }
};

} // namespace detail

inline std::uint64_t canonical_cert(const Small& s) {
    if (s.n > kMaxCanonOrder) fail(Errc::Unsupported, "canonical forms limited to order <= 11");
    if (s.n <= 1) return 0;
    const int nbits = s.n * (s.n - 1) / 2;
    const int q = s.edge_count();
    // the fully homogeneous colorings never refine; settle them directly
    if (q == 0) return 0;
    if (q == nbits) return nbits == 64 ? ~0ull : (1ull << nbits) - 1;
    detail::Canonicalizer c(s);
    std::array<int, kMaxCanonOrder + 1> color{};
    c.search(color);
    return c.best;
}

inline std::uint64_t canonical_cert(const Graph& g) { return canonical_cert(to_small(g)); }

inline Small small_from_cert(std::uint64_t cert, int n) {
    Small s;
    s.n = n;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (cert >> bit & 1) {
                s.adj[a] |= 1u << b;
                s.adj[b] |= 1u << a;
            }
    return s;
}

namespace detail {

inline std::vector<std::uint64_t> dedupe_sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Maps each parent graph (given by cert) through fn, which appends child
// certs; runs on two threads when the parent list is large.
template <class F>
std::vector<std::uint64_t> expand_parents(const std::vector<std::uint64_t>& parents, F&& fn) {
    if (parents.size() < 2000) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t p : parents) fn(p, out);
        return dedupe_sorted(std::move(out));
    }
    const size_t mid = parents.size() / 2;
    std::vector<std::uint64_t> lo, hi;
    std::thread t([&] {
        for (size_t i = mid; i < parents.size(); ++i) fn(parents[i], hi);
    });
    for (size_t i = 0; i < mid; ++i) fn(parents[i], lo);
    t.join();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return dedupe_sorted(std::move(lo));
}

} // namespace detail

// All graphs of order n up to isomorphism (connected or not), as sorted
// canonical certificates, optionally restricted to at most max_edges
// edges. Cached across calls.
inline const std::vector<std::uint64_t>& all_graph_certs(int n, int max_edges = 1 << 20) {
    if (n < 1 || n > kMaxCanonOrder) fail(Errc::Unsupported, "corpus generation limited to 1 <= n <= 11");
    static std::map<std::pair<int, int>, std::vector<std::uint64_t>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, max_edges);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::uint64_t> result;
    if (n == 1) {
        result = {0};
    } else {
        const auto& parents = [&]() -> const std::vector<std::uint64_t>& {
            // recursion under the same lock: compute parent level inline
            mu.unlock();
            const auto& p = all_graph_certs(n - 1, max_edges);
            mu.lock();
            return p;
        }();
        result = detail::expand_parents(parents, [&](std::uint64_t pc, std::vector<std::uint64_t>& out) {
            Small h = small_from_cert(pc, n - 1);
            int hq = h.edge_count();
            const std::uint16_t full = static_cast<std::uint16_t>((1u << (n - 1)) - 1);
            for (std::uint16_t sub = 0;; ++sub) {
                if (hq + std::popcount(sub) <= max_edges) {
                    Small child = h;
                    child.n = n;
                    child.adj[n - 1] = sub;
                    std::uint16_t m = sub;
                    while (m) {
                        int v = std::countr_zero(m);
                        m &= m - 1;
                        child.adj[v] |= 1u << (n - 1);
                    }
                    out.push_back(canonical_cert(child));
                }
                if (sub == full) break;
            }
        });
    }
    auto [pos, inserted] = cache.emplace(key, std::move(result));
    return pos->second;
}

// All connected Eulerian graphs of order n up to isomorphism, sorted by
// (size, certificate). Cached.
inline const std::vector<Graph>& connected_eulerian_graphs(int n) {
    if (n < 1 || n > kMaxCanonOrder - 1) fail(Errc::Unsupported, "Eulerian corpus limited to 1 <= n <= 10");
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::uint64_t> certs;
    if (n == 1) {
        certs = {0};
    } else {
        mu.unlock();
        const auto& parents = all_graph_certs(n - 1);
        mu.lock();
        certs = detail::expand_parents(parents, [&](std::uint64_t pc, std::vector<std::uint64_t>& out) {
            Small h = small_from_cert(pc, n - 1);
            std::uint16_t odd = h.odd_degree_mask();
            if (!odd) return;
            Small child = h;
            child.n = n;
            child.adj[n - 1] = odd;
            std::uint16_t m = odd;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                child.adj[v] |= 1u << (n - 1);
            }
            if (child.connected()) out.push_back(canonical_cert(child));
        });
    }
    std::vector<Graph> graphs;
    graphs.reserve(certs.size());
    for (std::uint64_t c : certs) graphs.push_back(to_graph(small_from_cert(c, n)));
    std::sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
    });
    auto [pos, inserted] = cache.emplace(n, std::move(graphs));
    return pos->second;
}

// All connected graphs of order n up to isomorphism, optionally with at
// most max_edges edges.
inline std::vector<Graph> connected_graphs(int n, int max_edges = 1 << 20) {
    std::vector<Graph> out;
    for (std::uint64_t c : all_graph_certs(n, max_edges)) {
        Small s = small_from_cert(c, n);
        if (s.connected()) out.push_back(to_graph(s));
    }
    return out;
}

} // namespace eg::corpus
