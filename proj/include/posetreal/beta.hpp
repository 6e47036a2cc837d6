#pragma once

#include <chrono>
#include <optional>

#include "posetreal/aut.hpp"
#include "posetreal/group.hpp"
#include "posetreal/poset.hpp"

namespace posetreal {

struct EnumerationReport {
    int size = 0;
    long long poset_count = 0;
    std::optional<Poset> realizer_found;
    std::chrono::duration<double> elapsed{0};
};

struct BetaResult {
    std::optional<int> beta;                  // empty: "beta > max_points"
    std::optional<Poset> witness;
    std::vector<EnumerationReport> reports;   // one per size 1..max_points scanned
};

// One representative per isomorphism class of n-point posets, 1 <= n <= 9.
// Adds a new maximal point over every order ideal of each (n-1)-rep and
// keeps one poset per canonical certificate; deterministic order.
std::vector<Poset> enumerate_posets(int n, int workers = 1);

// Aut(p) isomorphic to g. Cyclic targets go through is_cyclic_of_order;
// otherwise a brute-force generator-image search (|g| <= 24).
bool realizes(const Poset& p, const FiniteGroup& g);

// Abstract isomorphism of two Cayley-table groups, brute force over
// irredundant generator images.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

BetaResult beta(const FiniteGroup& g, int max_points, int workers = 1);

struct OrbitAudit {
    std::vector<int> orbit_sizes;      // sorted descending
    int full_orbits = 0;               // orbits of size p^k
    bool passed = false;               // at least two orbits of size p^k
};

// Requires realizes(p, g) with g cyclic of prime-power order p^k.
OrbitAudit orbit_size_audit(const Poset& p, const FiniteGroup& g);

} // namespace posetreal
