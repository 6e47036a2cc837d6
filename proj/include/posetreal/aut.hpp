#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetreal/group.hpp"
#include "posetreal/poset.hpp"

namespace posetreal {

using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose_perms(const Perm& a, const Perm& b); // (a∘b)(x) = a(b(x))
Perm inverse_perm(const Perm& a);
bool preserves_order(const Poset& p, const Perm& perm); // both ways

// Automorphism group as permutation generators with certified order/orbits.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators; // sorted lexicographically, no identity
    unsigned long long order = 1;
    std::vector<std::vector<int>> orbits; // sorted orbits, sorted by first point
};

struct AutOptions {
    int point_cap = 4096;
    int timeout_ms = 0; // 0 = none
};

// Exact automorphism group via partition refinement + backtracking on a
// point base; order certified by the orbit-stabilizer chain.
PermGroup automorphism_group(const Poset& p, const AutOptions& opts = {});

std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& generators);
std::vector<std::vector<int>> orbit_partition(const PermGroup& pg);

// Exact order of <generators> by orbit-stabilizer recursion (Schreier generators).
unsigned long long group_order(int degree, const std::vector<Perm>& generators);

// Full element list; throws CapExceeded beyond `cap` elements.
std::vector<Perm> enumerate_elements(int degree, const std::vector<Perm>& generators, size_t cap);

// |pg| == n and some element has order n; enumerates when |pg| <= 1e4.
bool is_cyclic_of_order(const PermGroup& pg, unsigned long long n);

struct RealizationCertificate {
    std::string group_name;
    int group_order = 0;
    unsigned long long aut_order = 0;
    bool action_valid = false; // every action(g) is an order-preserving bijection
    bool homomorphism = false;
    bool injective = false;
    bool free = false;
    int orbit_count = 0;
    bool verdict = false; // injective hom into Aut(P) and |Aut(P)| == |G|
};

// action[g] = point permutation for group element g.
RealizationCertificate verify_realization(const FiniteGroup& g, const Poset& p,
                                          const std::vector<Perm>& action,
                                          const AutOptions& opts = {});

// Stable isomorphism-invariant coloring: (height, #lower covers, #upper
// covers) refined by neighbor-color multisets to a fixed point.
std::vector<int> refine_colors(const Poset& p);

// Canonical labeling: `order[k]` = point placed at canonical position k;
// `cert` encodes the closure matrix under that order (0/1 bytes). Two posets
// are isomorphic iff their certs are equal.
struct CanonicalForm {
    std::vector<int> order;
    std::vector<uint8_t> cert;
};
CanonicalForm canonical_form(const Poset& p);

} // namespace posetreal
