#pragma once

#include "powerslice/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace powerslice {

// Materialization guard for slice_values; longer slices go through the
// streaming interfaces instead.
inline constexpr uint64_t kDefaultMaterializeCap = uint64_t(1) << 20;

struct SliceEntry {
    uint64_t x = 0;  // position in [0, floor(S/2)]
    BigNat value;    // x^k + (S-x)^k
};

// One slice, fully materialized: values strictly decreasing in x, with
// strictly decreasing downward gaps.
struct SliceSequence {
    BigNat sum;
    uint64_t exponent = 0;
    std::vector<SliceEntry> entries;
};

SliceSequence slice_values(const BigNat& S, uint64_t k,
                           uint64_t materialize_cap = kDefaultMaterializeCap);

// Work and skip counters for one streamed scan. A value evaluation is one
// power value delivered to a comparison, whether stepped or recomputed.
struct ScanStats {
    uint64_t value_evals = 0;
    uint64_t exclusion_skipped = 0;  // positions ruled out before scanning
};

struct CentralCheck {
    bool unique = false;
    std::optional<BigNat> min_gap;  // empty when the slice has < 2 entries
};

// Streams the slice of sum S once, confirming no two positions share a
// value and reporting the smallest consecutive gap.
CentralCheck central_check(const BigNat& S, uint64_t k, ScanStats* stats = nullptr);

// A nontrivial equal-sum representation in canonical form: a <= b on the
// smaller-sum side, c <= d on the larger, both pair sums differing by shift.
struct Solution {
    uint64_t exponent = 0;
    BigNat a, b;  // a + b = small_sum
    BigNat c, d;  // c + d = large_sum
    BigNat small_sum;
    BigNat large_sum;
    BigNat shift;  // large_sum - small_sum, >= 1
    BigNat value;  // a^k + b^k = c^k + d^k

    bool operator==(const Solution&) const = default;
};

// Ordering used by search reports: (small_sum, shift, value, a, c).
bool solution_slice_order(const Solution& lhs, const Solution& rhs);

// Ordering used by the oracle: (value, small_sum, shift, a, c).
bool solution_value_order(const Solution& lhs, const Solution& rhs);

// All common values of the slices with sums s_min and s_min + h_abs, by a
// two-pointer walk down both value sequences; ascending value on return.
// h_abs == 0 returns nothing: equal sums admit no nontrivial solution.
// With use_exclusion the smaller slice is only walked where the offset
// bound allows solutions, which never changes the result set.
std::vector<Solution> intersect_slices(const BigNat& s_min, const BigNat& h_abs, uint64_t k,
                                       bool use_exclusion, ScanStats* stats = nullptr);

}  // namespace powerslice
