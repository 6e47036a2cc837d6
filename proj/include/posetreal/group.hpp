#pragma once

#include <string>
#include <vector>

#include "posetreal/common.hpp"

namespace posetreal {

// Finite group given by its Cayley table. Identity is element 0 in every
// representation; loaders renumber to enforce this.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    std::string name;
    // Generators implied by the spec string ("e1", "e2", ... on the CLI):
    // factor generators for products, adjacent transpositions for S<n>,
    // rotation/reflection for D<n>, i/j for Q8. May be empty for file loads.
    std::vector<int> canonical_gens;

    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const;
    std::string element_name(int x) const;
};

struct GeneratingSequence {
    std::vector<int> elems; // ordered, irredundant
    int d() const { return static_cast<int>(elems.size()); }
};

// Throws ValidationError naming the failing triple/row on a bad table.
// Associativity is exhaustive up to order 256 and sampled above that.
void validate_cayley(const FiniteGroup& g);

// Mini-language: C<n>, D<n> (order 2n), S<n>, Q8, products with 'x',
// powers with '^k', or file:<path> for a Cayley-table JSON file.
FiniteGroup group_from_spec(const std::string& spec);

FiniteGroup group_from_cayley_file(const std::string& path);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Closure of elems together with the identity; sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

bool generates(const FiniteGroup& g, const std::vector<int>& elems);

// True iff seq generates g and dropping any single element stops generating.
bool is_irredundant(const FiniteGroup& g, const std::vector<int>& seq);

// Repeatedly removes the lowest-index removable element. Input must generate.
GeneratingSequence irredundant_reduce(const FiniteGroup& g, const std::vector<int>& seq);

int element_order(const FiniteGroup& g, int x);

// Resolves a comma-separated generator list; tokens are element indices or
// "e<k>" for the group's k-th canonical generator (1-based).
std::vector<int> parse_generator_list(const FiniteGroup& g, const std::string& list);

} // namespace posetreal
