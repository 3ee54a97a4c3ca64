#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/saturation.hpp"
#include "satlab/systems.hpp"

using namespace satlab;

TEST_CASE("ehm_graph matches the closed-form minimum") {
    for (int r = 3; r <= 6; ++r)
        for (int n = r - 2; n <= 20; ++n) {
            Graph g = ehm_graph(n, r);
            CHECK(g.size() == n);
            CHECK(g.edge_count() ==
                  static_cast<long long>(r - 2) * n - (r - 1) * (r - 2) / 2);
            CHECK(is_saturated(g, r));
        }
}

TEST_CASE("named small graphs") {
    Graph c5 = named_small("c5");
    CHECK(c5.size() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(is_tsat_witness(c5, 3, std::nullopt));

    Graph c7c = named_small("c7_complement");
    CHECK(c7c.size() == 7);
    CHECK(c7c.edge_count() == 14);

    Graph c8v = named_small("c8_two_chords_complement");
    CHECK(c8v.size() == 8);
    CHECK(c8v.edge_count() == 8 * 7 / 2 - 10);

    Graph wagner = named_small("wagner");
    CHECK(wagner.size() == 8);
    CHECK(wagner.edge_count() == 12);
    CHECK(wagner.min_degree() == 3);
    CHECK(wagner.max_degree() == 3);
    CHECK(is_tsat_witness(wagner, 3, std::nullopt));

    Graph pet = named_small("petersen");
    CHECK(pet.size() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.min_degree() == 3);
    CHECK(pet.max_degree() == 3);
    CHECK_FALSE(contains_clique(pet, 3));
    CHECK(is_tsat_witness(pet, 3, std::nullopt));

    CHECK_THROWS_AS(named_small("nope"), std::invalid_argument);
}

TEST_CASE("shattering sets") {
    for (int k = 2; k <= 8; ++k) {
        ShatteringSet s = shattering_set(k);
        CHECK(shatters_all_pairs(s));
        if (k == 2) CHECK(s.sequences.size() == 4);
        if (k == 3) CHECK(s.sequences.size() == 4);
        if (k >= 4) CHECK(s.sequences.size() == (1u << (k - 1)) - 1);
    }
    // padding keeps the shattering property and lex-least choice
    ShatteringSet padded = shattering_set(3, 6);
    CHECK(padded.sequences.size() == 6);
    CHECK(shatters_all_pairs(padded));
    std::set<uint32_t> uniq(padded.sequences.begin(), padded.sequences.end());
    CHECK(uniq.size() == 6);
    CHECK_THROWS_AS(shattering_set(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(shattering_set(3, 9), std::invalid_argument);

    ShatteringSet bad{2, {0b00, 0b01, 0b10}};
    CHECK_FALSE(shatters_all_pairs(bad));
}

TEST_CASE("twin_free_saturated nonexistent cases throw, everything else verifies") {
    for (int r = 3; r <= 6; ++r) {
        for (int n = 0; n <= 40; ++n) {
            bool exceptional = (n == r) || (n == r + 1) || (r == 3 && (n == 6 || n == 7));
            if (exceptional) {
                CHECK_THROWS_AS(twin_free_saturated(n, r), NonexistentError);
            } else {
                Graph g = twin_free_saturated(n, r);
                CHECK(g.size() == n);
                CHECK(is_tsat_witness(g, r, std::nullopt));
            }
        }
    }
}

TEST_CASE("system_family closed-form sizes (properties 1-4)") {
    for (int l = 2; l <= 5; ++l) {
        SystemInstance s2 = system_family(2, l);
        CHECK(s2.host.size() == l);
        CHECK(s2.host.edge_count() == (l * l - 2 * l + 3) / 4);  // ceil((l^2-2l)/4)
        CHECK(static_cast<int>(s2.family.sets.size()) == l / 2);
        CHECK(check_system(s2).valid());

        if (l >= 3) {
            SystemInstance s3 = system_family(3, l);
            CHECK(s3.host.size() == 2 * l);
            CHECK(s3.host.edge_count() == static_cast<long long>(l) * l - 2 * l);
            CHECK(static_cast<int>(s3.family.sets.size()) == 2 * l);
            CHECK(check_system(s3).valid());
        }

        SystemInstance s4 = system_family(4, l);
        CHECK(s4.host.size() == 2 * l * l);
        CHECK(s4.host.edge_count() ==
              (static_cast<long long>(l) * l * l * l - 2L * l * l * l + 2L * l * l));
        CHECK(static_cast<long long>(s4.family.sets.size()) ==
              static_cast<long long>(l) * l * (l - 1) * (l - 1) / 2);
        CHECK(check_system(s4).valid());

        for (int t = 5; t <= 6; ++t) {
            SystemInstance st = system_family(t, l);
            CHECK(st.host.size() == t * l * l);
            // 2l(l-1)-regular
            CHECK(st.host.min_degree() == 2 * l * (l - 1));
            CHECK(st.host.max_degree() == 2 * l * (l - 1));
            long long expect = 1;
            for (int i = 0; i < t; ++i) expect *= l;
            CHECK(static_cast<long long>(st.family.sets.size()) == expect);
            CHECK(check_system(st).valid());
        }
    }
    CHECK_THROWS_AS(system_family(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(system_family(3, 2), std::invalid_argument);
}

TEST_CASE("lifted families: maximality holds from a small threshold on") {
    // The asymptotic rule is "maximal unless t=2 with odd l"; a few small
    // cells sit below the threshold where that kicks in.
    auto below_threshold = [](int t, int l) {
        return (t == 2 && l == 4) || (t == 3 && l == 4) || (l == 2 && t >= 4);
    };
    for (int t = 2; t <= 6; ++t) {
        for (int l = (t == 3 ? 3 : 2); l <= 5; ++l) {
            SystemInstance lifted = lifted_family(t, l);
            CHECK(check_system(lifted).valid());
            CHECK(lifted.t == t + 1);
            CHECK_FALSE(lifted.primed);
            bool expect_maximal =
                !(t == 2 && l % 2 == 1) && !below_threshold(t, l);
            CHECK(lifted.maximal == expect_maximal);
            CHECK(check_maximal(lifted).maximal == expect_maximal);
        }
    }
    // the asymptotic rule itself, on cells past the threshold
    CHECK(lifted_family(2, 6).maximal);
    CHECK_FALSE(lifted_family(2, 7).maximal);
}

TEST_CASE("lifted hosts are twin-free for t >= 5") {
    for (int l = 2; l <= 3; ++l) {
        CHECK(is_twin_free(lifted_family(5, l).host));
        CHECK(is_twin_free(lifted_family(6, l).host));
    }
}

TEST_CASE("tsat_upper_witness at moderate n") {
    for (int n : {500, 2000}) {
        Graph g = tsat_upper_witness(n);
        CHECK(g.size() == n);
        CHECK(is_tsat_witness(g, 3, std::nullopt));
        CHECK(g.min_degree() == 6);
    }
    CHECK_THROWS_AS(tsat_upper_witness(10), InfeasibleError);
}

TEST_CASE("e34_upper_witness is a maximal (3,4)-system of the right size") {
    for (int s : {1, 2, 5, 20, 100}) {
        SystemInstance inst = e34_upper_witness(s);
        CHECK(static_cast<int>(inst.family.total_instances()) == s);
        CHECK(inst.r == 3);
        CHECK(inst.t == 4);
        CHECK(check_system(inst).valid());
        CHECK(check_maximal(inst).maximal);
    }
}

TEST_CASE("e35_upper_witness is a maximal (3,5)-system when feasible") {
    for (int s : {60, 72, 200}) {
        SystemInstance inst = e35_upper_witness(s);
        CHECK(static_cast<int>(inst.family.total_instances()) == s);
        CHECK(inst.t == 5);
        CHECK(check_system(inst).valid());
        CHECK(check_maximal(inst).maximal);
    }
    // the l=4 host has 160 edges, matching the closed form l^4-2l^3+2l^2
    SystemInstance inst = e35_upper_witness(60);
    CHECK(inst.host.edge_count() == 160);
    CHECK_THROWS_AS(e35_upper_witness(3), InfeasibleError);
}

TEST_CASE("tsat_min_deg_upper_witness") {
    Graph g = tsat_min_deg_upper_witness(700, 3, 6);
    CHECK(g.size() == 700);
    CHECK(is_tsat_witness(g, 3, 6));
    CHECK(g.min_degree() >= 6);
}
