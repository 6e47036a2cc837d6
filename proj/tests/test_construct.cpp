#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "posetreal/construct.hpp"
#include "test_util.hpp"

using namespace posetreal;
using namespace posetreal::testutil;

TEST_CASE("crown family") {
    Poset c3 = crown(3);
    CHECK(c3.size() == 6);
    // Hasse diagram is a 6-cycle: every point lies on exactly two covers
    for (int i = 0; i < 6; ++i)
        CHECK(c3.lower_covers(i).size() + c3.upper_covers(i).size() == 2);

    CHECK(are_isomorphic(crown(1), chain(2)).has_value());

    Poset c2 = crown(2);
    CHECK(c2.cover_pairs().size() == 4);
    CHECK(automorphism_group(c2).order == 4);

    CHECK_THROWS_AS(crown(0), ValidationError);
}

TEST_CASE("subdivided crowns realize cyclic groups") {
    auto sc3 = subdivided_crown(3);
    CHECK(sc3.poset.size() == 9);
    CHECK(automorphism_group(sc3.poset).order == 3);
    CHECK(verify_realization(sc3.group, sc3.poset, sc3.action).verdict);

    auto sc1 = subdivided_crown(1);
    CHECK(are_isomorphic(sc1.poset, chain(3)).has_value());
    CHECK(automorphism_group(sc1.poset).order == 1);

    auto sc12 = subdivided_crown(12);
    CHECK(sc12.poset.size() == 36);
    CHECK(automorphism_group(sc12.poset).order == 12);
}

TEST_CASE("main construction: C2^3 with the standard basis (d=3, odd)") {
    FiniteGroup g = group_from_spec("C2^3");
    auto real = main_theorem_poset(g, GeneratingSequence{g.canonical_gens});
    CHECK(real.poset.size() == 32);
    auto cert = verify_realization(g, real.poset, real.action);
    CHECK(cert.verdict);
    CHECK(cert.free);
    CHECK(cert.orbit_count == 4);
    CHECK(cert.aut_order == 8);
}

TEST_CASE("main construction rejects bad input") {
    FiniteGroup c6 = group_from_spec("C6");
    CHECK_THROWS_AS(main_theorem_poset(c6, GeneratingSequence{{1}}), ValidationError); // d < 3
    FiniteGroup g = group_from_spec("C2^3");
    // d = 3 but redundant (1*2 = 3)
    CHECK_THROWS_AS(main_theorem_poset(g, GeneratingSequence{{1, 2, 3}}), ValidationError);
}

TEST_CASE("adjacency invariants on the odd-d instance") {
    FiniteGroup g = group_from_spec("C2^3");
    GeneratingSequence h{g.canonical_gens};
    auto real = main_theorem_poset(g, h);
    const Poset& p = real.poset;
    int d = h.d();
    auto h1 = [&](int k) { // (h_k, 1) with h_0 = e
        int elem = k == 0 ? 0 : h.elems[k - 1];
        return p.find(g.element_name(elem), 1);
    };
    for (int k = 0; k + 1 <= d; ++k) CHECK(adjacent(p, h1(k), h1(k + 1)));
    for (int k = 0; k <= d; ++k)
        for (int l = 0; l <= d; ++l)
            if (std::abs(k - l) >= 3) CHECK_FALSE(adjacent(p, h1(k), h1(l)));
}

TEST_CASE("even-d instance: C2^4, extra non-adjacency of (e,1)") {
    FiniteGroup g = group_from_spec("C2^4");
    GeneratingSequence h{g.canonical_gens};
    auto real = main_theorem_poset(g, h);
    const Poset& p = real.poset;
    CHECK(p.size() == 64);
    int d = h.d();
    auto h1 = [&](int k) {
        int elem = k == 0 ? 0 : h.elems[k - 1];
        return p.find(g.element_name(elem), 1);
    };
    for (int k = 1; k <= d; ++k) CHECK_FALSE(adjacent(p, h1(0), h1(k)));
    for (int k = 1; k + 1 <= d; ++k) CHECK(adjacent(p, h1(k), h1(k + 1)));
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
            if (std::abs(k - l) >= 3) CHECK_FALSE(adjacent(p, h1(k), h1(l)));
    auto cert = verify_realization(g, real.poset, real.action);
    CHECK(cert.verdict);
    CHECK(cert.aut_order == 16);
}

TEST_CASE("minimal points are determined by their upper covers") {
    for (const char* spec : {"C2^3", "C2^4"}) {
        FiniteGroup g = group_from_spec(spec);
        auto real = main_theorem_poset(g, GeneratingSequence{g.canonical_gens});
        const Poset& p = real.poset;
        std::vector<std::vector<int>> coversets;
        for (int x = 0; x < p.size(); ++x)
            if (p.height_of(x) == 0) coversets.push_back(p.upper_covers(x));
        for (size_t a = 0; a < coversets.size(); ++a)
            for (size_t b = a + 1; b < coversets.size(); ++b)
                CHECK(coversets[a] != coversets[b]);
    }
}

TEST_CASE("cyclic prime-power realizers") {
    auto r32 = cyclic_prime_power_poset(3, 2);
    CHECK(r32.poset.size() == 27);
    CHECK(automorphism_group(r32.poset).order == 9);
    CHECK(verify_realization(r32.group, r32.poset, r32.action).verdict);

    auto r22 = cyclic_prime_power_poset(2, 2);
    CHECK(r22.poset.size() == 20);
    CHECK(automorphism_group(r22.poset).order == 4);
    CHECK(verify_realization(r22.group, r22.poset, r22.action).verdict);

    auto r71 = cyclic_prime_power_poset(7, 1);
    CHECK(r71.poset.size() == 21);
    CHECK(automorphism_group(r71.poset).order == 7);
    CHECK(verify_realization(r71.group, r71.poset, r71.action).verdict);
}

TEST_CASE("cyclic prime-power rejections") {
    CHECK_THROWS_AS(cyclic_prime_power_poset(2, 1), ValidationError);
    CHECK_THROWS_AS(cyclic_prime_power_poset(6, 1), ValidationError);
    CHECK_THROWS_AS(cyclic_prime_power_poset(3, 0), ValidationError);
}

TEST_CASE("unverified subdivided regime for p = 7 still passes the engine") {
    auto r = cyclic_prime_power_poset(7, 1, /*allow_unverified=*/true);
    CHECK(r.poset.size() == 2 * 7 + 3 * 7);
    CHECK(r.params.at("regime") == "subdivided");
    CHECK(verify_realization(r.group, r.poset, r.action).verdict);
}

TEST_CASE("abelian join realizers") {
    auto j33 = abelian_join_poset({3, 3});
    CHECK(j33.poset.size() == 18);
    CHECK(automorphism_group(j33.poset).order == 9);
    CHECK(verify_realization(j33.group, j33.poset, j33.action).verdict);

    auto j24 = abelian_join_poset({2, 4});
    CHECK(j24.poset.size() == 18);
    CHECK(automorphism_group(j24.poset).order == 8);
    CHECK(verify_realization(j24.group, j24.poset, j24.action).verdict);

    auto j5 = abelian_join_poset({5});
    CHECK(j5.poset.size() == 15);
    CHECK(automorphism_group(j5.poset).order == 5);

    CHECK_THROWS_AS(abelian_join_poset({}), ValidationError);
}

TEST_CASE("property: join multiplicativity for small part lists") {
    std::vector<std::vector<int>> part_lists = {{2, 2}, {3, 4}, {2, 3, 4}, {2, 2, 2},
                                                {5, 5},  {4, 4}, {2, 2, 3}};
    for (const auto& parts : part_lists) {
        int sum = 0;
        unsigned long long prod = 1;
        for (int n : parts) {
            sum += n;
            prod *= n;
        }
        if (sum > 15) continue;
        auto r = abelian_join_poset(parts);
        CAPTURE(parts[0]);
        CHECK(r.poset.size() == 3 * sum);
        CHECK(automorphism_group(r.poset).order == prod);
    }
}

TEST_CASE("graph realizer lattice") {
    Graph k3 = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(graph_realizer_lattice(k3).size() == 8);
    Graph v1 = Graph::make(1, {});
    CHECK(are_isomorphic(graph_realizer_lattice(v1), chain(3)).has_value());
    Graph p3 = Graph::make(3, {{0, 1}, {1, 2}});
    CHECK(graph_realizer_lattice(p3).size() == 7);
}

TEST_CASE("property: face poset preserves the automorphism count") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::make(n, edges);
        CHECK(automorphism_group(face_poset(g)).order ==
              static_cast<unsigned long long>(brute_force_graph_aut_count(g)));
    }
}

TEST_CASE("size law: 4|G| points for every valid main input") {
    for (const char* spec : {"C2^3", "C2xC2xC3", "C2^4"}) {
        FiniteGroup g = group_from_spec(spec);
        if (!is_irredundant(g, g.canonical_gens) || g.canonical_gens.size() < 3) continue;
        auto real = main_theorem_poset(g, GeneratingSequence{g.canonical_gens});
        CHECK(real.poset.size() == 4 * g.order);
    }
}
