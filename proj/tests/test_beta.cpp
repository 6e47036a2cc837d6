#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "posetreal/beta.hpp"
#include "posetreal/bounds.hpp"
#include "posetreal/construct.hpp"
#include "posetreal/io.hpp"
#include "test_util.hpp"

using namespace posetreal;
using namespace posetreal::testutil;

namespace {

// Naive oracle: every transitive relation on labelled points {0..n-1} whose
// pairs respect the index order (each poset admits such a labelling via a
// linear extension), quotiented by brute-force minimum-matrix canonicalization
// over all n! relabelings. Fully independent of the engine's refinement path.
long long naive_class_count(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::vector<char>> classes;
    std::vector<int> perm_base(n);
    std::iota(perm_base.begin(), perm_base.end(), 0);
    for (uint32_t mask = 0; mask < (uint32_t(1) << slots.size()); ++mask) {
        std::vector<char> rel(n * n, 0);
        for (size_t t = 0; t < slots.size(); ++t)
            if (mask & (uint32_t(1) << t)) rel[slots[t].first * n + slots[t].second] = 1;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                if (rel[i * n + j])
                    for (int k = 0; k < n; ++k)
                        if (rel[j * n + k] && !rel[i * n + k]) {
                            transitive = false;
                            break;
                        }
        if (!transitive) continue;
        std::vector<char> best;
        std::vector<int> perm = perm_base;
        do {
            std::vector<char> img(n * n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rel[i * n + j]) img[perm[i] * n + perm[j]] = 1;
            if (best.empty() || img < best) best = img;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return static_cast<long long>(classes.size());
}

} // namespace

TEST_CASE("enumeration counts match the naive oracle for n <= 6") {
    std::vector<long long> oracle;
    for (int n = 1; n <= 6; ++n) oracle.push_back(naive_class_count(n));
    // frozen oracle outputs
    CHECK(oracle == std::vector<long long>{1, 2, 5, 16, 63, 318});
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long long>(enumerate_posets(n).size()) == oracle[n - 1]);
    }
}

TEST_CASE("no duplicate isomorphism classes in any stream (n <= 6)") {
    for (int n = 2; n <= 6; ++n) {
        auto posets = enumerate_posets(n);
        for (size_t a = 0; a < posets.size(); ++a)
            for (size_t b = a + 1; b < posets.size(); ++b)
                CHECK_FALSE(are_isomorphic(posets[a], posets[b]).has_value());
    }
}

TEST_CASE("enumeration is deterministic and worker-count independent") {
    auto one = enumerate_posets(6, 1);
    auto four = enumerate_posets(6, 4);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) CHECK(one[i].closure() == four[i].closure());
}

TEST_CASE("enumeration range errors") {
    CHECK_THROWS_AS(enumerate_posets(0), ValidationError);
    CHECK_THROWS_AS(enumerate_posets(10), ValidationError);
}

TEST_CASE("realizes") {
    FiniteGroup c2 = group_from_spec("C2");
    CHECK(realizes(antichain(2), c2));
    CHECK_FALSE(realizes(chain(3), c2));
    FiniteGroup c3 = group_from_spec("C3");
    CHECK(realizes(subdivided_crown(3).poset, c3));
    // non-cyclic target: crown(3) has dihedral automorphism group of order 6
    FiniteGroup s3 = group_from_spec("S3");
    FiniteGroup c6 = group_from_spec("C6");
    CHECK(realizes(crown(3), s3));
    CHECK_FALSE(realizes(crown(3), c6));
}

TEST_CASE("groups_isomorphic") {
    CHECK(groups_isomorphic(group_from_spec("S3"), group_from_spec("D3")));
    CHECK_FALSE(groups_isomorphic(group_from_spec("C6"), group_from_spec("S3")));
    CHECK_FALSE(groups_isomorphic(group_from_spec("Q8"), group_from_spec("D4")));
    CHECK(groups_isomorphic(group_from_spec("C2xC3"), group_from_spec("C6")));
}

TEST_CASE("beta(C2) = 2") {
    auto r = beta(group_from_spec("C2"), 3);
    REQUIRE(r.beta.has_value());
    CHECK(*r.beta == 2);
    REQUIRE(r.witness.has_value());
    CHECK(are_isomorphic(*r.witness, antichain(2)).has_value());
    CHECK(r.reports.size() == 2);
    CHECK(r.reports[0].poset_count == 1);
    CHECK(r.reports[1].poset_count == 2);
}

TEST_CASE("beta(C3) > 5 in a small-budget run") {
    auto r = beta(group_from_spec("C3"), 5);
    CHECK_FALSE(r.beta.has_value());
    CHECK(r.reports.size() == 5);
    for (const auto& rep : r.reports) CHECK_FALSE(rep.realizer_found.has_value());
}

TEST_CASE("orbit size audit") {
    auto sc3 = subdivided_crown(3);
    auto audit = orbit_size_audit(sc3.poset, group_from_spec("C3"));
    CHECK(audit.orbit_sizes == std::vector<int>{3, 3, 3});
    CHECK(audit.passed);

    auto r71 = cyclic_prime_power_poset(7, 1);
    auto audit7 = orbit_size_audit(r71.poset, group_from_spec("C7"));
    CHECK(audit7.full_orbits >= 2);
    CHECK(audit7.passed);

    // crown(3) has dihedral automorphism group: precondition fails
    CHECK_THROWS_AS(orbit_size_audit(crown(3), group_from_spec("C6")), ValidationError);
}

TEST_CASE("known bounds table matches the formulas") {
    for (const auto& e : known_bounds()) {
        CAPTURE(e.group);
        CHECK(e.beta_lower <= e.beta_upper);
        CHECK(e.alpha == alpha_formula(e.p, e.k));
        if (e.group == "Z3") {
            // beta(Z3) is known exactly; sharper than the generic formula
            CHECK(e.beta_lower == 9);
            CHECK(e.beta_upper == 9);
            CHECK(beta_lower_formula(e.p, e.k) <= 9);
            CHECK(beta_upper_formula(e.p, e.k) >= 9);
        } else {
            CHECK(e.beta_lower == beta_lower_formula(e.p, e.k));
            CHECK(e.beta_upper == beta_upper_formula(e.p, e.k));
        }
    }
}

TEST_CASE("shipped bounds data file agrees with the embedded table") {
    auto file = load_json_file(std::string(POSETREAL_DATA_DIR) + "/known_bounds.json");
    const auto& table = known_bounds();
    REQUIRE(file.size() == table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        const auto& row = file.at(i);
        const auto& e = table[i];
        CAPTURE(e.group);
        CHECK(row.at("group") == e.group);
        CHECK(row.at("p") == e.p);
        CHECK(row.at("k") == e.k);
        CHECK(row.at("beta_lower") == e.beta_lower);
        CHECK(row.at("beta_upper") == e.beta_upper);
        CHECK(row.at("source") == e.source);
        if (e.alpha)
            CHECK(row.at("alpha") == *e.alpha);
        else
            CHECK(row.at("alpha").is_null());
    }
}
