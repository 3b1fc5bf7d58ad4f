#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulergraph/classify.hpp"
#include "eulergraph/constructions.hpp"
#include "eulergraph/corpus.hpp"

using namespace eg;

namespace {

ClassCounts counts_of(std::initializer_list<int> lengths) {
    CycleDecomposition d;
    for (int len : lengths) {
        std::vector<NodeId> nodes(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) nodes[i] = i;
        d.push_back(Cycle{nodes});
    }
    return class_counts(d);
}

std::set<int> spectrum_set(const Graph& g) {
    auto s = cycle_spectrum(g);
    std::set<int> out;
    for (int r = 0; r < 4; ++r)
        if (s[r]) out.insert(r);
    return out;
}

} // namespace

TEST_CASE("class counts") {
    SECTION("the (7,9) two-type graph peels into a 5-cycle and a 4-cycle") {
        ClassCounts c = class_counts(peel_decomposition(smallest_eps01()));
        CHECK(c.xi == std::array<int, 4>{1, 1, 0, 0});
        CHECK(c.qi == std::array<int, 4>{4, 5, 0, 0});
    }
    SECTION("three 4-cycles") {
        ClassCounts c = counts_of({4, 4, 4});
        CHECK(c.xi == std::array<int, 4>{3, 0, 0, 0});
        CHECK(c.qi == std::array<int, 4>{12, 0, 0, 0});
    }
    SECTION("a 3-cycle and a 9-cycle") {
        ClassCounts c = counts_of({3, 9});
        CHECK(c.xi[3] == 1);
        CHECK(c.xi[1] == 1);
        CHECK(c.qi[3] == 3);
        CHECK(c.qi[1] == 9);
    }
}

TEST_CASE("size identity") {
    CHECK(verify_size_identity(9, counts_of({5, 4})));
    CHECK(verify_size_identity(12, counts_of({4, 4, 4})));
    CHECK(verify_size_identity(12, counts_of({3, 9})));
    CHECK_FALSE(verify_size_identity(10, counts_of({5, 4})));
}

TEST_CASE("size identity holds for every decomposition, orders 3..7") {
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : corpus::connected_eulerian_graphs(n)) {
            int congruence = -1;
            for_each_decomposition(g, 1'000'000, [&](const CycleDecomposition& d) {
                ClassCounts c = class_counts(d);
                REQUIRE(verify_size_identity(g.size(), c));
                int r = (c.xi[1] + 2 * c.xi[2] + 3 * c.xi[3]) % 4;
                if (congruence == -1) congruence = r;
                REQUIRE(congruence == r); // decomposition invariance
                if (is_bipartite(g)) {
                    REQUIRE(c.xi[1] == 0);
                    REQUIRE(c.xi[3] == 0);
                    REQUIRE(g.size() % 4 == (2 * c.xi[2]) % 4);
                }
            });
        }
    }
}

TEST_CASE("cycle spectrum") {
    CHECK(spectrum_set(cycle_graph(5)) == std::set<int>{1});
    CHECK(spectrum_set(book(3, 5)) == std::set<int>{0, 1});
    CHECK(spectrum_set(triangle_of_squares()) == std::set<int>{0, 1, 3});
}

TEST_CASE("epsilon class") {
    CHECK(epsilon_class(hypercube(4)) == EpsilonClass::two_type(0, 2));
    CHECK(class_tag(epsilon_class(hypercube(4))) == "e02");
    CHECK(epsilon_class(book(3, 7)) == EpsilonClass::two_type(0, 3));

    EpsilonClass tos = epsilon_class(triangle_of_squares());
    CHECK(tos.kind == ClassKind::Mixed);
    CHECK(class_tag(tos) == "mixed");

    EpsilonClass c5 = epsilon_class(cycle_graph(5));
    CHECK(c5.kind == ClassKind::SingleType);
    CHECK(class_tag(c5) == "single_1");

    Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(epsilon_class(k4).kind == ClassKind::NotEuler);
    CHECK(class_tag(epsilon_class(k4)) == "not_euler");

    CHECK(epsilon_class(Graph::build(1, {})).kind == ClassKind::Acyclic);
}

TEST_CASE("Rosa-Golomb filter") {
    CHECK(rosa_golomb_status(smallest_eps01()) == Gracefulness::Nongraceful); // q = 9
    CHECK(rosa_golomb_status(book(3, 5)) == Gracefulness::Nongraceful);       // q = 13
    CHECK(rosa_golomb_status(cycle_graph(8)) == Gracefulness::Candidate);     // q = 8
    CHECK(rosa_golomb_status(cycle_graph(6)) == Gracefulness::Nongraceful);   // q = 6
    Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_MATCHES(rosa_golomb_status(k4), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotEulerian;
                         }));
}

TEST_CASE("class size congruence") {
    SECTION("e02 with three residue-2 cycles lands in the nongraceful branch") {
        ClassCounts c = counts_of({6, 6, 6});
        CHECK(class_size_congruence(EpsilonClass::two_type(0, 2), c) == 2);
    }
    SECTION("e03 with one residue-3 cycle is a candidate") {
        ClassCounts c = counts_of({4, 7});
        CHECK(class_size_congruence(EpsilonClass::two_type(0, 3), c) == 3);
    }
    SECTION("e01 with one residue-1 cycle is nongraceful") {
        ClassCounts c = counts_of({4, 5});
        CHECK(class_size_congruence(EpsilonClass::two_type(0, 1), c) == 1);
    }
    SECTION("counts outside the class are rejected") {
        ClassCounts c = counts_of({4, 5, 6});
        CHECK_THROWS_MATCHES(class_size_congruence(EpsilonClass::two_type(0, 1), c), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.code() == Errc::InconsistentCounts;
                             }));
        CHECK_THROWS_AS(class_size_congruence(epsilon_class(cycle_graph(5)), c), Error);
    }
}

TEST_CASE("conjecture predicate") {
    CHECK(conjecture_predicate(EpsilonClass::two_type(0, 3), counts_of({4, 7})));      // 3*1 = 3
    CHECK(conjecture_predicate(EpsilonClass::two_type(0, 2), counts_of({4, 6, 6})));   // 2*2 = 0
    CHECK_FALSE(conjecture_predicate(EpsilonClass::two_type(1, 2), counts_of({5, 6, 6}))); // 1+4 = 1
}

TEST_CASE("two-type congruence equals q mod 4, orders 3..8") {
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g : corpus::connected_eulerian_graphs(n)) {
            EpsilonClass cls = epsilon_class(g);
            if (cls.kind != ClassKind::TwoType) continue;
            ClassCounts c = class_counts(peel_decomposition(g));
            REQUIRE(class_size_congruence(cls, c) == g.size() % 4);
        }
    }
}

TEST_CASE("two-type (0,2) equals bipartite, orders 3..8") {
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g : corpus::connected_eulerian_graphs(n)) {
            EpsilonClass cls = epsilon_class(g);
            bool spectrum_in_02 = !cls.residues[1] && !cls.residues[3];
            if (cls.is_two_type(0, 2)) REQUIRE(is_bipartite(g));
            if (is_bipartite(g)) REQUIRE(spectrum_in_02);
        }
    }
}
