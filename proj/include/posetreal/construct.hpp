#pragma once

#include <map>
#include <string>

#include "posetreal/aut.hpp"
#include "posetreal/group.hpp"
#include "posetreal/poset.hpp"

namespace posetreal {

// A built poset bundled with the canonical group action on it.
struct ConstructedRealization {
    Poset poset;
    FiniteGroup group;
    std::vector<Perm> action; // action[g] = point permutation
    std::string method;
    std::map<std::string, std::string> params;
};

// The 4|G| realizer on G x {0,1,2,3}. Requires an irredundant generating
// sequence with d >= 3; the cover-relation layout depends on the parity of d.
ConstructedRealization main_theorem_poset(const FiniteGroup& g, const GeneratingSequence& h);

// 2n points on Z_n x {0,1}: (i,0) < (i,1) and (i,0) < (i+1,1).
Poset crown(int n);

// 3n points on Z_n x {0,1,2}: (i,0) < (i,1) < (i,2), (i+1,0) < (i,2);
// rotation action of the cyclic group of order n.
ConstructedRealization subdivided_crown(int n);

// Realizers for Z_{p^k} per size regime: 2p^k+3p (p in {3,5}; other odd
// primes only behind allow_unverified), 2^{k+1}+12 (p=2, k>=2), 2p^k+p (p>=7).
ConstructedRealization cyclic_prime_power_poset(int p, int k, bool allow_unverified = false);

// Ordinal sum of subdivided crowns; realizes the direct sum of cyclic groups.
ConstructedRealization abelian_join_poset(const std::vector<int>& parts);

// bounded(face_poset(g)): the lattice with |V|+|E|+2 points.
Poset graph_realizer_lattice(const Graph& g);

} // namespace posetreal
