#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "eulergraph/corpus.hpp"
#include "eulergraph/graph.hpp"

using namespace eg;

namespace {

Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::build(g.order(), std::move(edges));
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<NodeId> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("canonical certificates are relabeling-invariant") {
    std::mt19937 rng(12345);
    for (int n = 2; n <= 7; ++n) {
        for (const auto& cert : corpus::all_graph_certs(n)) {
            Graph g = corpus::to_graph(corpus::small_from_cert(cert, n));
            std::vector<NodeId> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 3; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                REQUIRE(corpus::canonical_cert(relabel(g, perm)) == corpus::canonical_cert(g));
            }
        }
    }
}

TEST_CASE("distinct isomorphism classes get distinct certificates") {
    // exhaustively cross-check against permutation search at small order
    for (int n = 2; n <= 5; ++n) {
        auto certs = corpus::all_graph_certs(n);
        std::vector<Graph> graphs;
        for (auto c : certs) graphs.push_back(corpus::to_graph(corpus::small_from_cert(c, n)));
        for (size_t i = 0; i < graphs.size(); ++i)
            for (size_t j = i + 1; j < graphs.size(); ++j) REQUIRE_FALSE(brute_isomorphic(graphs[i], graphs[j]));
    }
}

TEST_CASE("graph counts match the classic values") {
    // number of graphs on n nodes up to isomorphism: 1, 2, 4, 11, 34, 156, 1044
    const std::vector<size_t> want{1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) REQUIRE(corpus::all_graph_certs(n).size() == want[n - 1]);
}

TEST_CASE("connected Eulerian counts match the independent cycle-space route") {
    // independent generation: Eulerian graphs are exactly the connected
    // spanning members of the cycle space of K_n (sums of triangle basis
    // elements), deduplicated canonically
    auto cycle_space_count = [](int n) {
        std::vector<std::uint64_t> basis;
        auto bit = [n](int u, int v) {
            // upper-triangle bit index of pair (u,v), u < v
            int idx = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++idx)
                    if (a == u && b == v) return idx;
            return -1;
        };
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                basis.push_back((1ull << bit(0, i)) | (1ull << bit(0, j)) | (1ull << bit(i, j)));
        std::set<std::uint64_t> classes;
        const std::uint64_t limit = 1ull << basis.size();
        for (std::uint64_t s = 0; s < limit; ++s) {
            std::uint64_t mask = 0;
            for (size_t k = 0; k < basis.size(); ++k)
                if (s >> k & 1) mask ^= basis[k];
            corpus::Small g = corpus::small_from_cert(mask, n);
            bool spanning = true;
            for (int v = 0; v < n; ++v)
                if (g.adj[v] == 0) spanning = false;
            if (!spanning || !g.connected()) continue;
            classes.insert(corpus::canonical_cert(g));
        }
        return classes.size();
    };
    const std::vector<size_t> want{1, 1, 4, 8, 37}; // n = 3..7
    for (int n = 3; n <= 7; ++n) {
        size_t independent = cycle_space_count(n);
        REQUIRE(independent == want[n - 3]);
        REQUIRE(corpus::connected_eulerian_graphs(n).size() == independent);
    }
    CHECK(corpus::connected_eulerian_graphs(1).size() == 1);
    CHECK(corpus::connected_eulerian_graphs(2).size() == 0);
    CHECK(corpus::connected_eulerian_graphs(8).size() == 184);
}

TEST_CASE("corpus members are connected and even") {
    for (int n = 3; n <= 8; ++n) {
        std::set<std::uint64_t> seen;
        for (const Graph& g : corpus::connected_eulerian_graphs(n)) {
            REQUIRE(g.order() == n);
            REQUIRE(is_connected(g));
            for (NodeId v = 0; v < n; ++v) REQUIRE(g.degree(v) % 2 == 0);
            REQUIRE(seen.insert(corpus::canonical_cert(g)).second); // no duplicates
        }
    }
}

TEST_CASE("corpus output is deterministic and sorted by size") {
    auto& a = corpus::connected_eulerian_graphs(7);
    auto& b = corpus::connected_eulerian_graphs(7);
    REQUIRE(&a == &b); // cached
    for (size_t i = 1; i < a.size(); ++i) REQUIRE(a[i - 1].size() <= a[i].size());
}

TEST_CASE("edge-bounded generation") {
    // connected graphs with at most 5 edges on 6 nodes: trees plus unicyclic
    for (const Graph& g : corpus::connected_graphs(6, 5)) {
        REQUIRE(g.size() == 5); // connectivity on 6 nodes needs >= 5 edges
    }
    CHECK(corpus::connected_graphs(6, 5).size() == 6); // the six 6-node trees
}
