#pragma once

#include "powerslice/slices.hpp"

#include <cstdint>
#include <vector>

namespace powerslice {

enum class ShiftPolicy { Auto, List, Max };

// Work budget in value evaluations; a search whose projected work passes
// this is cut short and flagged rather than left to run unbounded.
inline constexpr uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchConfig {
    uint64_t exponent = 3;
    uint64_t max_small_sum = 0;  // smaller slice sums 1..max_small_sum
    ShiftPolicy shift_policy = ShiftPolicy::Auto;
    std::vector<uint64_t> shifts;  // List policy; every entry >= 1
    uint64_t shift_max = 0;        // Max policy: shifts 1..shift_max
    bool use_mdo = true;
    bool use_overlap = true;
    bool use_dominance = true;
    bool use_exclusion = true;
    bool include_central = false;
    uint64_t budget = kDefaultSearchBudget;
};

// Pair accounting: enumerated counts every candidate (S, h) with h >= 1,
// and always equals rejected_mdo + rejected_overlap + rejected_dominance
// + scanned. Central self-checks are counted separately.
struct SearchStats {
    uint64_t enumerated = 0;
    uint64_t rejected_mdo = 0;
    uint64_t rejected_overlap = 0;
    uint64_t rejected_dominance = 0;
    uint64_t scanned = 0;
    uint64_t central_checked = 0;
    uint64_t exclusion_skipped = 0;
    uint64_t value_evals = 0;

    bool operator==(const SearchStats&) const = default;
};

struct SearchReport {
    SearchConfig config;
    std::vector<Solution> solutions;  // ordered by (small_sum, shift, value)
    SearchStats stats;
    bool budget_exhausted = false;
};

// Filters candidate pairs in the order divisibility, overlap, dominance,
// then scans the survivors. Scans are independent, so the parallel kernel
// farms them out and merges in plan order; the report is identical bit for
// bit to the serial one regardless of thread count.
SearchReport run_search(const SearchConfig& config);
SearchReport run_search_serial(const SearchConfig& config);

// The same enumeration and filter accounting with no scans executed.
struct FilterBreakdown {
    SearchStats stats;
    Rational mdo_fraction;        // rejected_mdo / enumerated
    Rational overlap_fraction;    // rejected_overlap / enumerated
    Rational dominance_fraction;  // rejected_dominance / enumerated
    Rational scanned_fraction;    // scanned / enumerated
    bool budget_exhausted = false;
};

FilterBreakdown filter_breakdown(const SearchConfig& config);

}  // namespace powerslice
