#include <doctest.h>

#include "bci/serialize.hpp"
#include "bci/solvers.hpp"
#include "bci/witness.hpp"
#include "test_util.hpp"

using namespace bci;
using namespace testutil;

namespace {

Broadcast single_broadcaster(const Graph& g, int x, int value) {
    std::vector<int> f(static_cast<std::size_t>(g.vertex_count()), 0);
    f[static_cast<std::size_t>(x)] = value;
    return make_broadcast(f);
}

// Structural sanity for the hypothesis-carrying test graphs.
void require_girth_degree(const Graph& g, int min_girth, int min_deg) {
    auto gir = girth(g);
    REQUIRE((!gir || *gir >= min_girth));
    REQUIRE(min_degree(g) >= min_deg);
    REQUIRE(is_connected(g));
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("2").num == 2);
    CHECK(Rational::parse("2").den == 1);
    CHECK(Rational::parse("2.5").num == 5);
    CHECK(Rational::parse("2.5").den == 2);
    CHECK(Rational::parse("5/2").num == 5);
    CHECK(Rational::parse("10/4").num == 5);
    CHECK(Rational::parse("10/4").den == 2);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2x"), std::invalid_argument);

    CHECK(Rational::from_double(2.5).num == 5);
    CHECK(Rational::from_double(2.5).den == 2);
    CHECK(Rational::from_double(3.0).num == 3);
    CHECK(Rational::from_double(3.0).den == 1);
    CHECK_THROWS_AS(Rational::from_double(-1.0), std::invalid_argument);
}

TEST_CASE("shortest_path_of_length") {
    CHECK(shortest_path_of_length(path_graph(5), 0, 3) == std::vector<int>{0, 1, 2, 3});
    // the two C6 arcs tie; the smallest-index rule picks 1,2,3
    CHECK(shortest_path_of_length(cycle_graph(6), 0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(shortest_path_of_length(cycle_graph(6), 0, 0) == std::vector<int>{0});
    CHECK_THROWS_AS(shortest_path_of_length(path_graph(5), 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(shortest_path_of_length(Graph(3, {{0, 1}}), 0, 1), std::invalid_argument);
}

TEST_CASE("isometric paths under fuzz") {
    bci::Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(2 + static_cast<int>(rng.next_below(20)), 0.25, rng);
        const int x = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(g.vertex_count())));
        const int ecc = eccentricity(g, x);
        const int len = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(ecc + 1)));
        auto path = shortest_path_of_length(g, x, len);
        REQUIRE(static_cast<int>(path.size()) == len + 1);
        DistanceRow row = bfs_distances(g, x);
        for (int i = 0; i <= len; ++i) {
            CHECK(row.dist[path[static_cast<std::size_t>(i)]] == i);
            if (i > 0) CHECK(g.has_edge(path[static_cast<std::size_t>(i - 1)], path[static_cast<std::size_t>(i)]));
        }
    }
}

TEST_CASE("witness_thm1 rules on a long girth-6 min-degree-3 graph") {
    Graph chain = chain_copies(heawood(), 10);
    require_girth_degree(chain, 6, 3);
    REQUIRE(eccentricity(chain, 0) >= 21);

    SUBCASE("f = 2 gives the singleton with |I| = f/2 exactly") {
        auto fam = witness_thm1(chain, single_broadcaster(chain, 0, 2));
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].rule == "singleton");
        CHECK(fam.entries[0].set == std::vector<int>{0});
        auto cert = verify_witness(chain, single_broadcaster(chain, 0, 2), fam);
        CHECK(cert.valid);
        CHECK(cert.total_size == 1);  // == f/2, the only equality case
    }
    SUBCASE("f = 4 gives the neighborhood") {
        auto fam = witness_thm1(chain, single_broadcaster(chain, 0, 4));
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].rule == "neighborhood");
        CHECK(fam.entries[0].set.size() >= 3);
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 4), fam).valid);
    }
    SUBCASE("f = 8 takes the distance {0,2} sphere") {
        auto fam = witness_thm1(chain, single_broadcaster(chain, 0, 8));
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].rule == "sphere2");
        CHECK(static_cast<int>(fam.entries[0].set.size()) >= 7);
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 8), fam).valid);
    }
    SUBCASE("f = 21: ell = 3, path of length 10, |I| >= 13") {
        Broadcast b = single_broadcaster(chain, 0, 21);
        auto fam = witness_thm1(chain, b);
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].rule == "sphere2_path");
        CHECK(fam.entries[0].path.size() == 11);
        CHECK(static_cast<int>(fam.entries[0].set.size()) >= 7 + 2 * 3);
        CHECK(verify_witness(chain, b, fam).valid);
    }
    SUBCASE("two broadcasters far apart") {
        std::vector<int> f(static_cast<std::size_t>(chain.vertex_count()), 0);
        f[0] = 14;
        int far = chain.vertex_count() - 1;
        DistanceRow row = bfs_distances(chain, 0);
        REQUIRE(row.dist[far] > 15);
        f[static_cast<std::size_t>(far)] = 2;
        Broadcast b = make_broadcast(f);
        REQUIRE(is_valid_broadcast(chain, b));
        auto fam = witness_thm1(chain, b);
        REQUIRE(fam.entries.size() == 2);
        auto cert = verify_witness(chain, b, fam);
        CHECK(cert.valid);
        CHECK(2 * cert.total_size >= b.weight);
    }
}

TEST_CASE("witness_thm1 rejects hypothesis violations") {
    CHECK_THROWS_AS(witness_thm1(petersen(), single_broadcaster(petersen(), 0, 1)),
                    hypothesis_error);  // girth 5
    try {
        witness_thm1(petersen(), single_broadcaster(petersen(), 0, 1));
    } catch (const hypothesis_error& e) {
        CHECK(e.hypothesis == "girth");
    }
    CHECK_THROWS_AS(witness_thm1(heawood(), make_broadcast(std::vector<int>(14, 1))),
                    hypothesis_error);  // invalid broadcast
}

TEST_CASE("witness_thm3i on a chained projective-plane incidence graph") {
    Graph base = pg24_incidence();
    require_girth_degree(base, 6, 5);
    Graph chain = chain_copies(base, 8);
    require_girth_degree(chain, 6, 5);
    REQUIRE(eccentricity(chain, 0) >= 19);

    SUBCASE("f = 1 singleton") {
        auto fam = witness_thm3i(chain, single_broadcaster(chain, 0, 1));
        CHECK(fam.entries[0].set == std::vector<int>{0});
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 1), fam).valid);
    }
    SUBCASE("f = 3: ell = 1, I = N(x), |I| >= 5") {
        auto fam = witness_thm3i(chain, single_broadcaster(chain, 0, 3));
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].path.size() == 2);
        CHECK(fam.entries[0].set.size() >= 5);
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 3), fam).valid);
    }
    SUBCASE("f = 19: ell = 5, |I| >= 21 >= f - 1") {
        Broadcast b = single_broadcaster(chain, 0, 19);
        auto fam = witness_thm3i(chain, b);
        REQUIRE(fam.entries.size() == 1);
        CHECK(fam.entries[0].path.size() == 10);  // length 2*5 - 1
        CHECK(static_cast<int>(fam.entries[0].set.size()) >= 21);
        auto cert = verify_witness(chain, b, fam);
        CHECK(cert.valid);
        CHECK(cert.total_size >= b.weight - 1);
    }
    SUBCASE("hypothesis: heawood has min degree 3 < 5") {
        CHECK_THROWS_AS(witness_thm3i(heawood(), single_broadcaster(heawood(), 0, 1)),
                        hypothesis_error);
    }
}

TEST_CASE("witness_thm3ii on a chained K_{5,5}") {
    Graph chain = chain_copies(complete_bipartite(5, 5), 9);
    require_girth_degree(chain, 4, 5);
    REQUIRE(eccentricity(chain, 0) >= 19);
    const Rational two = Rational::parse("2");

    SUBCASE("f = 1 singleton, |I| >= f/xi") {
        auto fam = witness_thm3ii(chain, single_broadcaster(chain, 0, 1), two);
        CHECK(fam.entries[0].set == std::vector<int>{0});
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 1), fam).valid);
    }
    SUBCASE("f = 3: ell = 1, I = N(x)") {
        auto fam = witness_thm3ii(chain, single_broadcaster(chain, 0, 3), two);
        CHECK(fam.entries[0].path.size() == 2);  // length 4*1-3 = 1
        CHECK(fam.entries[0].set.size() >= 5);
        CHECK(verify_witness(chain, single_broadcaster(chain, 0, 3), fam).valid);
    }
    SUBCASE("f = 19: ell = 3, |I| >= 3*delta") {
        Broadcast b = single_broadcaster(chain, 0, 19);
        auto fam = witness_thm3ii(chain, b, two);
        CHECK(fam.entries[0].path.size() == 10);  // length 4*3-3 = 9
        CHECK(static_cast<int>(fam.entries[0].set.size()) >= 3 * 5);
        CHECK(verify_witness(chain, b, fam).valid);
    }
    SUBCASE("xi out of range") {
        CHECK_THROWS_AS(witness_thm3ii(chain, single_broadcaster(chain, 0, 1), Rational::parse("1.9")),
                        std::invalid_argument);
        CHECK_THROWS_AS(witness_thm3ii(chain, single_broadcaster(chain, 0, 1), Rational::parse("4")),
                        std::invalid_argument);
    }
    SUBCASE("binary-float xi takes the exact double value") {
        Broadcast b = single_broadcaster(chain, 0, 5);
        auto fam = witness_thm3ii(chain, b, 2.5);
        REQUIRE(fam.xi.has_value());
        CHECK(fam.xi->num == 5);
        CHECK(fam.xi->den == 2);
        CHECK(verify_witness(chain, b, fam).valid);
    }
    SUBCASE("degree below 10/xi is rejected") {
        Graph k44 = chain_copies(complete_bipartite(4, 4), 2);
        CHECK_THROWS_AS(witness_thm3ii(k44, single_broadcaster(k44, 0, 1), two), hypothesis_error);
    }
}

TEST_CASE("verify_witness flags tampered families") {
    Graph chain = chain_copies(heawood(), 4);
    std::vector<int> f(static_cast<std::size_t>(chain.vertex_count()), 0);
    f[0] = 2;
    int far = chain.vertex_count() - 1;
    f[static_cast<std::size_t>(far)] = 2;
    Broadcast b = make_broadcast(f);
    REQUIRE(is_valid_broadcast(chain, b));
    auto fam = witness_thm1(chain, b);
    REQUIRE(fam.entries.size() == 2);

    SUBCASE("clean family passes") { CHECK(verify_witness(chain, b, fam).valid); }
    SUBCASE("shared vertex breaks disjointness") {
        fam.entries[1].set = fam.entries[0].set;
        auto cert = verify_witness(chain, b, fam);
        CHECK(!cert.valid);
        bool found = false;
        for (const auto& c : cert.checks)
            if (c.name == "disjoint" && !c.ok) found = true;
        CHECK(found);
    }
    SUBCASE("adjacent pair inside a set breaks independence") {
        fam.entries[0].set = {0, chain.neighbors(0)[0]};
        auto cert = verify_witness(chain, b, fam);
        CHECK(!cert.valid);
        CHECK(cert.checks[1].name == "independent_sets");
        CHECK(!cert.checks[1].ok);
    }
    SUBCASE("cross edge between sets is caught") {
        // move a neighbor of broadcaster 0 into the far set
        fam.entries[1].set.push_back(chain.neighbors(0)[0]);
        std::sort(fam.entries[1].set.begin(), fam.entries[1].set.end());
        auto cert = verify_witness(chain, b, fam);
        CHECK(!cert.valid);
    }
    SUBCASE("undersized set breaks the entry bound") {
        std::vector<int> f4(static_cast<std::size_t>(chain.vertex_count()), 0);
        f4[0] = 4;
        Broadcast b4 = make_broadcast(f4);
        auto fam4 = witness_thm1(chain, b4);
        fam4.entries[0].set = {chain.neighbors(0)[0]};  // 2*1 > 4 fails
        auto cert = verify_witness(chain, b4, fam4);
        CHECK(!cert.valid);
        bool found = false;
        for (const auto& c : cert.checks)
            if (c.name == "entry_bounds" && !c.ok) found = true;
        CHECK(found);
    }
    SUBCASE("missing entry breaks support coverage") {
        fam.entries.pop_back();
        auto cert = verify_witness(chain, b, fam);
        CHECK(!cert.valid);
        CHECK(cert.checks[0].name == "support");
        CHECK(!cert.checks[0].ok);
    }
}

TEST_CASE("empty support gives an empty, valid family") {
    Graph chain = chain_copies(heawood(), 2);
    Broadcast zero = make_broadcast(std::vector<int>(static_cast<std::size_t>(chain.vertex_count()), 0));
    auto fam = witness_thm1(chain, zero);
    CHECK(fam.entries.empty());
    auto cert = verify_witness(chain, zero, fam);
    CHECK(cert.valid);
    CHECK(cert.total_size == 0);
    CHECK(cert.aggregate_bound == 0);
}

TEST_CASE("strict improvement check") {
    SUBCASE("C6 singleton improves to two nonadjacent neighbors") {
        auto got = strict_improvement_check(cycle_graph(6), {0});
        REQUIRE(got.has_value());
        CHECK(*got == std::vector<int>{1, 5});
    }
    SUBCASE("K4: all neighbors pairwise adjacent, not applicable") {
        CHECK(!strict_improvement_check(complete_graph(4), {0}).has_value());
    }
    SUBCASE("non-packing input throws") {
        CHECK_THROWS_AS(strict_improvement_check(cycle_graph(6), {0, 1}), std::invalid_argument);
    }
    SUBCASE("heawood maximum packings always improve (girth 6, min degree 3)") {
        auto pack = max_packing(heawood());
        auto got = strict_improvement_check(heawood(), pack.witness);
        REQUIRE(got.has_value());
        CHECK(static_cast<int>(got->size()) == pack.optimum + 1);
    }
}

TEST_CASE("witness construction is deterministic byte for byte") {
    Graph chain = chain_copies(heawood(), 5);
    std::vector<int> f(static_cast<std::size_t>(chain.vertex_count()), 0);
    f[3] = 15;
    Broadcast b = make_broadcast(f);
    REQUIRE(is_valid_broadcast(chain, b));
    auto fam1 = witness_thm1(chain, b);
    auto fam2 = witness_thm1(chain, b);
    CHECK(witness_family_to_json(fam1).dump() == witness_family_to_json(fam2).dump());
    auto c1 = verify_witness(chain, b, fam1);
    auto c2 = verify_witness(chain, b, fam2);
    CHECK(certificate_to_json(c1).dump() == certificate_to_json(c2).dump());
}

TEST_CASE("end-to-end: optimal broadcast on heawood certifies alpha >= ceil(alpha_b/2)") {
    Graph g = heawood();
    auto ab = alpha_b_exact(g);
    REQUIRE(!ab.budget_hit);
    auto fam = witness_thm1(g, ab.witness);
    auto cert = verify_witness(g, ab.witness, fam);
    CHECK(cert.valid);
    const int alpha = max_independent_set(g).optimum;
    CHECK(alpha >= (ab.optimum + 1) / 2);
    CHECK(cert.alpha_lower_bound <= alpha);
}
