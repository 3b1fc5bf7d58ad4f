#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulergraph/constructions.hpp"
#include "eulergraph/corpus.hpp"
#include "eulergraph/structure.hpp"

#ifdef HAVE_BOOST_PLANARITY
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#endif

using namespace eg;

namespace {

Graph bowtie() { return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph k4() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k5() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e.push_back({i, j});
    return Graph::build(5, std::move(e));
}

Graph k33() { return Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

const Cycle& cycle_of_length(const CycleSet& cs, int len) {
    for (const Cycle& c : cs)
        if (c.length() == len) return c;
    FAIL("no cycle of length " + std::to_string(len));
    return cs.front();
}

} // namespace

TEST_CASE("block decomposition and typing") {
    SECTION("bowtie: two triangle blocks") {
        BlockProfile bp = blocks(bowtie());
        REQUIRE(bp.blocks.size() == 2);
        CHECK(bp.beta_single[3] == 2);
        CHECK(bp.cut_nodes == std::vector<NodeId>{0});
    }
    SECTION("two 4-cycles at a cutnode") {
        Graph g = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
        BlockProfile bp = blocks(g);
        CHECK(bp.beta_single[0] == 2);
        CHECK(bp.beta_other == 0);
    }
    SECTION("a 5-cycle and a 4-cycle at a cutnode") {
        Graph g = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {6, 7}, {0, 7}});
        BlockProfile bp = blocks(g);
        CHECK(bp.beta_single[1] == 1);
        CHECK(bp.beta_single[0] == 1);
        CHECK(bp.beta_pair.empty());
    }
    SECTION("bridges count as untyped blocks") {
        Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
        BlockProfile bp = blocks(g);
        CHECK(bp.blocks.size() == 3);
        CHECK(bp.beta_other == 3);
    }
    SECTION("disconnected input is rejected") {
        Graph g = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK_THROWS_MATCHES(blocks(g), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::Disconnected;
                             }));
    }
    SECTION("blocks partition the edge set, orders 2..7") {
        for (int n = 2; n <= 7; ++n) {
            for (const Graph& g : corpus::connected_graphs(n)) {
                BlockProfile bp = blocks(g);
                std::vector<int> cover(g.size(), 0);
                for (const auto& blk : bp.blocks)
                    for (int e : blk) cover[e] += 1;
                for (int c : cover) REQUIRE(c == 1);
                // cut nodes are exactly the nodes on two or more blocks
                std::map<NodeId, std::set<size_t>> membership;
                for (size_t b = 0; b < bp.blocks.size(); ++b)
                    for (int e : bp.blocks[b]) {
                        membership[g.edges()[e].first].insert(b);
                        membership[g.edges()[e].second].insert(b);
                    }
                std::vector<NodeId> cuts;
                for (auto& [v, bs] : membership)
                    if (bs.size() >= 2) cuts.push_back(v);
                REQUIRE(cuts == bp.cut_nodes);
            }
        }
    }
}

TEST_CASE("cycle intersections") {
    Graph b25 = book(2, 5);
    CycleSet cs = enumerate_cycles(b25);
    REQUIRE(cs.size() == 3);
    const Cycle& c8 = cycle_of_length(cs, 8);
    std::vector<const Cycle*> fives;
    for (const Cycle& c : cs)
        if (c.length() == 5) fives.push_back(&c);
    REQUIRE(fives.size() == 2);

    SECTION("the two pages share exactly the spine edge") {
        CycleIntersection x = intersect_cycles(*fives[0], *fives[1]);
        CHECK(x.kind == IntersectKind::Path);
        CHECK(x.path_len == 1);
        CHECK(*x.combined_residue == combined_residue(1, 1, 1));
    }
    SECTION("a page and the outer 8-cycle share a 4-edge path") {
        CycleIntersection x = intersect_cycles(*fives[0], c8);
        CHECK(x.kind == IntersectKind::Path);
        CHECK(x.path_len == 4);
    }
    SECTION("cycles meeting at one node") {
        Graph g = bowtie();
        CycleSet bc = enumerate_cycles(g);
        REQUIRE(bc.size() == 2);
        CycleIntersection x = intersect_cycles(bc[0], bc[1]);
        CHECK(x.kind == IntersectKind::SingleNode);
    }
    SECTION("disjoint cycles") {
        Graph g = Graph::build(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
        // not connected; cycles still enumerate per component
        CycleSet cc = enumerate_cycles(g);
        REQUIRE(cc.size() == 2);
        CHECK(intersect_cycles(cc[0], cc[1]).kind == IntersectKind::Disjoint);
    }
    SECTION("shared structure beyond a single path is Complex") {
        // two 4-cycles of K4 share all four nodes and two disjoint edges
        CycleSet kc = enumerate_cycles(k4());
        const Cycle* a = nullptr;
        const Cycle* b = nullptr;
        for (const Cycle& c : kc)
            if (c.length() == 4) (a == nullptr ? a : b) = &c;
        REQUIRE(b != nullptr);
        CHECK(intersect_cycles(*a, *b).kind == IntersectKind::Complex);
    }
}

TEST_CASE("combined residue matches the full intersection table") {
    // rows (i,j), columns t = 0..3
    const int expected[10][6] = {
        {0, 0, 0, 2, 0, 2}, {0, 1, 1, 3, 1, 3}, {0, 2, 2, 0, 2, 0}, {0, 3, 3, 1, 3, 1},
        {1, 1, 2, 0, 2, 0}, {1, 2, 3, 1, 3, 1}, {1, 3, 0, 2, 0, 2}, {2, 2, 0, 2, 0, 2},
        {2, 3, 1, 3, 1, 3}, {3, 3, 2, 0, 2, 0},
    };
    for (const auto& row : expected)
        for (int t = 0; t <= 3; ++t) CHECK(combined_residue(row[0], row[1], t) == row[2 + t]);
    CHECK(combined_residue(1, 0, 4) == 1);
}

TEST_CASE("intersection parity report") {
    SECTION("book(3,5) as e01 has no violations") {
        auto v = intersection_parity_report(book(3, 5), EpsilonClass::two_type(0, 1));
        CHECK(v.empty());
    }
    SECTION("e13 graphs have no path intersections at all") {
        Graph g = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {0, 6}});
        REQUIRE(epsilon_class(g) == EpsilonClass::two_type(1, 3));
        CHECK(intersection_parity_report(g, epsilon_class(g)).empty());
    }
    SECTION("a residue-1 pair sharing an even path violates the (0,1) rules") {
        Graph g = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {2, 5}, {5, 6}, {0, 6}});
        auto v = intersection_parity_report(g, EpsilonClass::two_type(0, 1));
        REQUIRE(v.size() == 1);
        CHECK(v[0].path_len == 2);
        CHECK(v[0].combined == 2);
    }
    SECTION("e02 has no constraints") {
        CHECK(intersection_parity_report(hypercube(4), EpsilonClass::two_type(0, 2)).empty());
    }
    SECTION("non-two-type input is rejected") {
        CHECK_THROWS_AS(intersection_parity_report(cycle_graph(5), epsilon_class(cycle_graph(5))), Error);
    }
}

TEST_CASE("degree-2 node detection") {
    CHECK(has_degree_two_node(book(3, 5)));
    CHECK_FALSE(has_degree_two_node(hypercube(4)));
    CHECK(has_degree_two_node(cycle_graph(3)));
}

TEST_CASE("planarity fixtures") {
    CHECK(is_planar(k4()));
    CHECK(is_planar(book(3, 5)));
    CHECK_FALSE(is_planar(k5()));
    CHECK_FALSE(is_planar(k33()));
    CHECK_FALSE(is_planar(hypercube(4)));
    CHECK_FALSE(is_planar(parse_graph6("IheA@GUAo"))); // Petersen
    // K5 minus an edge is planar
    Graph k5e = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(is_planar(k5e));
    // K33 with one edge subdivided is still nonplanar
    Graph k33sub = path_addition(Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}}),
                                 2, 5, 1, 2);
    CHECK_FALSE(is_planar(k33sub));
    // disconnected: planar iff every component is
    Graph tri_plus_k5 = Graph::build(10, {{0, 1}, {1, 2}, {0, 2},
                                          {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7},
                                          {5, 6}, {5, 7}, {6, 7}, {8, 9}});
    CHECK_FALSE(is_planar(tri_plus_k5)); // the K5 component decides
    Graph tri_plus_c4 = Graph::build(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    CHECK(is_planar(tri_plus_c4));
}

#ifdef HAVE_BOOST_PLANARITY
namespace {
bool boost_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.order());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}
} // namespace

TEST_CASE("planarity agrees with Boyer-Myrvold on every graph up to order 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& cert : corpus::all_graph_certs(n)) {
            Graph g = corpus::to_graph(corpus::small_from_cert(cert, n));
            REQUIRE(is_planar(g) == boost_planar(g));
        }
    }
}

TEST_CASE("planarity agrees with Boyer-Myrvold on Eulerian corpora up to order 9") {
    for (int n = 8; n <= 9; ++n)
        for (const Graph& g : corpus::connected_eulerian_graphs(n)) REQUIRE(is_planar(g) == boost_planar(g));
}
#endif

TEST_CASE("two-type witness") {
    SECTION("book(2,5): the guaranteed pair is a page and the outer cycle") {
        auto w = biconnected_two_type_witness(book(2, 5), EpsilonClass::two_type(0, 1));
        REQUIRE(w.has_value());
        CHECK(w->ci.residue() == 0);
        CHECK(w->ci.length() == 8);
        CHECK(w->cj.residue() == 1);
        CHECK(w->cj.length() == 5);
        CHECK(w->path_len == 4);
    }
    SECTION("the smallest (0,1) graph has a witness") {
        Graph g = smallest_eps01();
        auto w = biconnected_two_type_witness(g, epsilon_class(g));
        REQUIRE(w.has_value());
        CHECK(w->ci.residue() == 0);
        CHECK(w->cj.residue() == 1);
    }
    SECTION("multi-block input is rejected") {
        CHECK_THROWS_MATCHES(biconnected_two_type_witness(bowtie(), EpsilonClass::two_type(0, 3)), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::NotBiconnected;
                             }));
    }
    SECTION("single-type input is a misuse") {
        CHECK_THROWS_MATCHES(biconnected_two_type_witness(cycle_graph(5), epsilon_class(cycle_graph(5))), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::BadParameters;
                             }));
    }
}
