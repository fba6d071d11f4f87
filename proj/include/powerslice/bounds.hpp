#pragma once

#include "powerslice/numeric.hpp"

#include <cstdint>

namespace powerslice {

// A pair of slice sums in canonical orientation: large_sum = small_sum + shift.
// first_is_larger remembers which input sum was the larger one.
struct SlicePair {
    BigNat small_sum;
    BigNat large_sum;
    BigNat shift;  // large_sum - small_sum, >= 0
    bool first_is_larger = false;

    static SlicePair from_sums(const BigNat& s, const BigNat& t);
    static SlicePair from_shift(const BigNat& s, const BigInt& h);
};

// k(k-1) * floor(S/2)^(k-2): proved floor on the gap between consecutive
// values of x^k + (S-x)^k near the middle of the slice of sum S. S >= 2.
BigNat separation_floor(const BigNat& S, uint64_t k);

// Exact gap between the two innermost values of the slice of sum S, which
// is the smallest gap anywhere on that slice. S >= 2.
BigNat neighbor_gap(const BigNat& S, uint64_t k);

// Value ranges of the two slices intersect: large^k <= 2^(k-1) * small^k.
// When false the pair is empty before a single value is compared.
bool overlap_feasible(const SlicePair& pair, uint64_t k);

// Smallest s with overlap_feasible on sums (s, s + h_abs). h_abs >= 1.
BigNat overlap_min_sum(uint64_t k, const BigNat& h_abs);

// Largest h >= 0 with overlap_feasible on sums (s_min, s_min + h); the
// contiguous shift range scanned for a fixed smaller sum.
BigNat max_feasible_shift(const BigNat& s_min, uint64_t k);

// Smallest t >= 0 with t^2 * (k-1) >= 2 * s_min * h_abs. Any solution on
// the smaller slice must sit at offset |a - b| >= t from the center.
BigNat exclusion_min_offset(const BigNat& s_min, const BigNat& h_abs, uint64_t k);

// ceil(2 * h_abs / (k-1)): lower bound on the smaller sum implied by the
// exclusion zone alone. h_abs >= 1.
BigNat combined_min_sum(uint64_t k, const BigNat& h_abs);

// s_max >= 2 and s_max^k > 2 * (s_max-1)^k: the top value of the larger
// slice exceeds everything the smaller slice can reach, for every shift.
bool dominance_pruned(const BigNat& s_max, uint64_t k);

// Largest k >= 2 with dominance_pruned(s_max, k) false, or 1 when already
// pruned at k = 2. Pruning is monotone in k for fixed s_max >= 2.
uint64_t dominance_k_max(const BigNat& s_max);

// Largest s_max with dominance_pruned(s_max, k) true. Pruning is antitone
// in s_max and always holds at s_max = 2.
BigNat dominance_max_pruned_sum(uint64_t k);

// 2 * (k+1)^k > 2^(2k): exact form of the statement that the overlap bound
// is stronger than the combined bound at the overlap threshold.
bool strength_holds(uint64_t k);

struct BoundsProfile {
    uint64_t exponent = 0;
    BigNat shift;
    BigNat combined_min_sum;
    BigNat overlap_min_sum;  // >= combined_min_sum for every k, h
};

BoundsProfile bounds_profile(uint64_t k, const BigNat& h_abs);

}  // namespace powerslice
