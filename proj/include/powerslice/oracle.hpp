#pragma once

#include "powerslice/slices.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powerslice {

// Guard on the quadratic pair enumeration below.
inline constexpr uint64_t kDefaultOracleCap = 200;

// Ground truth by exhaustion: every pair 0 <= a <= b <= max_val is grouped
// by its exact power sum and every cross pair of distinct representations
// is emitted, canonicalized, ascending by value. No slice walking, no
// filters, nothing shared with the search beyond raw exponentiation.
std::vector<Solution> brute_force_solutions(uint64_t k, uint64_t max_val,
                                            uint64_t cap = kDefaultOracleCap);

struct TheoremCheck {
    std::string name;
    uint64_t checked = 0;
    bool passed = true;
    std::optional<Solution> counterexample;
};

struct TheoremReport {
    uint64_t exponent = 0;
    uint64_t max_val = 0;
    uint64_t solutions = 0;
    std::vector<TheoremCheck> checks;

    bool all_passed() const;
};

// Replays every brute-force solution against the structural claims the
// search relies on: shift divisibility, the exclusion offset, overlap
// feasibility, dominance, and the absence of equal-sum solutions.
TheoremReport verify_theorems(uint64_t k, uint64_t max_val, uint64_t cap = kDefaultOracleCap);

// True iff no quadruple with distinct unordered pairs satisfies the power
// equation at exponent m and at exponent k simultaneously, m < k.
bool check_two_powers(uint64_t m, uint64_t k, uint64_t max_val,
                      uint64_t cap = kDefaultOracleCap);

}  // namespace powerslice
