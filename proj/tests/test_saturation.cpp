#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "satlab/graph.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

// Reference implementation: check each missing edge by clique search on the
// common neighborhood, one vertex at a time.
bool saturated_reference(const Graph& g, int r) {
    if (contains_clique(g, r)) return false;
    for (auto [u, v] : g.missing_edges()) {
        GraphBuilder b(g);
        b.add_edge(u, v);
        if (!contains_clique(b.build(), r)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("complete graphs below the clique order are saturated") {
    for (int r = 3; r <= 6; ++r)
        for (int n = 0; n < r; ++n) {
            auto rep = saturation_report(complete(n), r);
            CHECK(rep.is_free);
            CHECK(rep.is_saturated);
        }
    auto rep = saturation_report(complete(3), 3);
    CHECK_FALSE(rep.is_free);
    CHECK(rep.clique_witness.size() == 3);
}

TEST_CASE("C_5 is K_3-saturated, P_4 is not") {
    CHECK(is_saturated(cycle(5), 3));
    Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto rep = saturation_report(p4, 3);
    CHECK(rep.is_free);
    CHECK_FALSE(rep.is_saturated);
    REQUIRE(rep.violating_pair.has_value());
    auto [u, v] = *rep.violating_pair;
    CHECK_FALSE(p4.adjacent(u, v));
    // adding it really does not create a triangle
    GraphBuilder b(p4);
    b.add_edge(u, v);
    CHECK_FALSE(contains_clique(b.build(), 3));
}

TEST_CASE("r=3 fast path agrees with the reference on random graphs") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 1 + static_cast<int>(rng() % 30);
        Graph g = random_graph(n, 0.2 + 0.02 * (iter % 20), rng);
        for (int r : {3, 4}) {
            CHECK(is_saturated(g, r) == saturated_reference(g, r));
        }
    }
}

TEST_CASE("saturate produces a saturated supergraph and is idempotent") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 12);
        int r = 3 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.15, rng);
        if (contains_clique(g, r)) {
            CHECK_THROWS_AS(saturate(g, r), std::invalid_argument);
            continue;
        }
        Graph s = saturate(g, r);
        CHECK(is_saturated(s, r));
        for (auto [u, v] : g.edges()) CHECK(s.adjacent(u, v));
        CHECK(saturate(s, r) == s);
    }
}

TEST_CASE("saturation_report rejects r < 3") {
    CHECK_THROWS_AS(saturation_report(cycle(4), 2), std::invalid_argument);
}

TEST_CASE("is_tsat_witness twin-free mode") {
    CHECK(is_tsat_witness(cycle(5), 3, std::nullopt));
    // EHM-style star: saturated but full of twins.
    Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(is_saturated(star, 3));
    CHECK_FALSE(is_tsat_witness(star, 3, std::nullopt));
}

TEST_CASE("is_tsat_witness minimum-degree mode") {
    // C_5 is K_3-saturated with min degree 2 and no twins.
    CHECK(is_tsat_witness(cycle(5), 3, 2));
    CHECK_FALSE(is_tsat_witness(cycle(5), 3, 3));
    // The star fails: twins of degree 1 < t and no degree-t common neighbor
    // when t = 2.
    Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_FALSE(is_tsat_witness(star, 3, 2));
    // Blown-up C_5 has twins, every pair adjacent to a degree-4 vertex.
    Graph c5 = cycle(5);
    Graph doubled = blow_up(c5, BlowUpSpec{{2, 2, 2, 2, 2}});
    CHECK(is_saturated(doubled, 3));
    CHECK(is_tsat_witness(doubled, 3, 4));
    CHECK_FALSE(is_tsat_witness(doubled, 3, std::nullopt));
}
