#pragma once

#include <optional>
#include <string>
#include <vector>

namespace posetreal {

// Reference constants: minimum graph size (alpha) and poset size bounds
// (beta) for realizing small cyclic groups of prime-power order.
struct BoundsEntry {
    std::string group;   // descriptor, e.g. "Z9"
    int p = 0, k = 0;    // prime power p^k
    std::optional<int> alpha;
    int beta_lower = 0;
    int beta_upper = 0;
    std::string source;  // citation tag
};

const std::vector<BoundsEntry>& known_bounds();

// Formula values the table must match, per prime power.
std::optional<int> alpha_formula(int p, int k);
int beta_lower_formula(int p, int k);
int beta_upper_formula(int p, int k);

} // namespace posetreal
