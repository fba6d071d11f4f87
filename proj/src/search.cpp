#include "powerslice/search.hpp"

#include "powerslice/bounds.hpp"
#include "powerslice/mdo.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

namespace powerslice {
namespace {

struct PlannedScan {
    uint64_t s = 0;
    uint64_t h = 0;  // 0 marks a central self-check
};

struct Plan {
    std::vector<PlannedScan> scans;
    SearchStats counted;
    bool truncated = false;
};

// Projected cost of a scan in value evaluations, an upper bound on what
// the walkers can consume. Budget decisions are made on projections during
// planning, so they are independent of scan execution order.
uint64_t pair_projection(uint64_t s, uint64_t h) {
    const uint64_t len_a = s / 2 + 1;
    const uint64_t len_b = (s + h) / 2 + 1;
    return 2 * (len_a + len_b) + 4 * std::min(len_a, len_b);
}

uint64_t central_projection(uint64_t s) { return 2 * (s / 2 + 1); }

// Per-exponent constants resolved once per search.
struct Thresholds {
    bool mdo_fits = false;
    uint64_t modulus = 0;        // valid when mdo_fits
    uint64_t dominance_cut = 0;  // s_max <= cut is dominance-pruned
};

Thresholds make_thresholds(uint64_t k) {
    Thresholds th;
    const BigNat modulus = mdo_modulus(k);
    th.mdo_fits = modulus.fits_ulong_p();
    if (th.mdo_fits) th.modulus = modulus.get_ui();
    const BigNat cut = dominance_max_pruned_sum(k);
    th.dominance_cut = cut.fits_ulong_p() ? cut.get_ui() : UINT64_MAX;
    return th;
}

struct RowPlan {
    std::vector<PlannedScan> scans;
    SearchStats counted;
    uint64_t projection = 0;
};

// Remaining filters for a candidate that passed the divisibility test.
void classify(const SearchConfig& cfg, const Thresholds& th, uint64_t s, uint64_t h,
              uint64_t h_feasible, RowPlan& row) {
    if (cfg.use_overlap && h > h_feasible) {
        row.counted.rejected_overlap++;
        return;
    }
    if (cfg.use_dominance && s + h <= th.dominance_cut) {
        row.counted.rejected_dominance++;
        return;
    }
    row.counted.scanned++;
    row.projection += pair_projection(s, h);
    row.scans.push_back({s, h});
}

RowPlan plan_row(const SearchConfig& cfg, const Thresholds& th,
                 const std::vector<uint64_t>& list_shifts, uint64_t s) {
    RowPlan row;
    if (cfg.include_central) {
        row.counted.central_checked++;
        row.projection += central_projection(s);
        row.scans.push_back({s, 0});
    }

    uint64_t h_feasible = 0;
    bool have_feasible = false;
    auto feasible = [&] {
        if (!have_feasible) {
            h_feasible = max_feasible_shift(BigNat(s), cfg.exponent).get_ui();
            have_feasible = true;
        }
        return h_feasible;
    };

    if (cfg.shift_policy == ShiftPolicy::List) {
        for (uint64_t h : list_shifts) {
            row.counted.enumerated++;
            if (cfg.use_mdo && !(th.mdo_fits && h % th.modulus == 0)) {
                row.counted.rejected_mdo++;
                continue;
            }
            classify(cfg, th, s, h, cfg.use_overlap ? feasible() : 0, row);
        }
        return row;
    }

    const uint64_t h_hi =
        (cfg.shift_policy == ShiftPolicy::Auto) ? feasible() : cfg.shift_max;
    row.counted.enumerated += h_hi;
    if (cfg.use_mdo) {
        // Only multiples of the modulus survive; rejections are counted
        // arithmetically rather than iterated.
        if (!th.mdo_fits || th.modulus > h_hi) {
            row.counted.rejected_mdo += h_hi;
            return row;
        }
        row.counted.rejected_mdo += h_hi - h_hi / th.modulus;
        for (uint64_t h = th.modulus; h <= h_hi; h += th.modulus) {
            classify(cfg, th, s, h, cfg.use_overlap ? feasible() : 0, row);
        }
    } else {
        for (uint64_t h = 1; h <= h_hi; ++h) {
            classify(cfg, th, s, h, cfg.use_overlap ? feasible() : 0, row);
        }
    }
    return row;
}

void merge_counts(SearchStats& into, const SearchStats& from) {
    into.enumerated += from.enumerated;
    into.rejected_mdo += from.rejected_mdo;
    into.rejected_overlap += from.rejected_overlap;
    into.rejected_dominance += from.rejected_dominance;
    into.scanned += from.scanned;
    into.central_checked += from.central_checked;
    into.exclusion_skipped += from.exclusion_skipped;
    into.value_evals += from.value_evals;
}

// Serial planning pass. Whole rows of smaller sums are admitted in order
// until the next row's projection would pass the budget; truncation is
// therefore a pure function of the config.
Plan build_plan(const SearchConfig& cfg) {
    require_exponent(cfg.exponent);
    if (cfg.budget == 0) throw std::invalid_argument("search budget must be >= 1");
    std::vector<uint64_t> list_shifts;
    if (cfg.shift_policy == ShiftPolicy::List) {
        list_shifts = cfg.shifts;
        std::sort(list_shifts.begin(), list_shifts.end());
        list_shifts.erase(std::unique(list_shifts.begin(), list_shifts.end()),
                          list_shifts.end());
        if (!list_shifts.empty() && list_shifts.front() == 0) {
            throw std::invalid_argument(
                "explicit shifts must be >= 1; central slices are covered by include_central");
        }
    }

    const Thresholds th = make_thresholds(cfg.exponent);
    Plan plan;
    uint64_t projected = 0;
    for (uint64_t s = 1; s <= cfg.max_small_sum; ++s) {
        RowPlan row = plan_row(cfg, th, list_shifts, s);
        if (row.projection > cfg.budget - projected) {
            plan.truncated = true;
            break;
        }
        projected += row.projection;
        merge_counts(plan.counted, row.counted);
        plan.scans.insert(plan.scans.end(), row.scans.begin(), row.scans.end());
    }
    return plan;
}

struct ScanOutcome {
    std::vector<Solution> solutions;
    uint64_t value_evals = 0;
    uint64_t exclusion_skipped = 0;
    bool central_duplicate = false;
    std::exception_ptr error;
};

ScanOutcome execute_scan(const SearchConfig& cfg, const PlannedScan& ps) {
    ScanOutcome out;
    try {
        ScanStats st;
        if (ps.h == 0) {
            out.central_duplicate = !central_check(BigNat(ps.s), cfg.exponent, &st).unique;
        } else {
            out.solutions =
                intersect_slices(BigNat(ps.s), BigNat(ps.h), cfg.exponent, cfg.use_exclusion, &st);
        }
        out.value_evals = st.value_evals;
        out.exclusion_skipped = st.exclusion_skipped;
    } catch (...) {
        out.error = std::current_exception();
    }
    return out;
}

SearchReport run_search_impl(const SearchConfig& cfg, bool parallel) {
    const Plan plan = build_plan(cfg);
    SearchReport rep;
    rep.config = cfg;
    rep.stats = plan.counted;
    rep.budget_exhausted = plan.truncated;

    std::vector<ScanOutcome> outcomes(plan.scans.size());
    const int64_t n = static_cast<int64_t>(plan.scans.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int64_t i = 0; i < n; ++i) {
            outcomes[i] = execute_scan(cfg, plan.scans[i]);
        }
    } else {
        for (int64_t i = 0; i < n; ++i) {
            outcomes[i] = execute_scan(cfg, plan.scans[i]);
        }
    }

    // Merge in plan order; every contribution is an exact integer, so the
    // merged report cannot depend on scheduling.
    for (ScanOutcome& oc : outcomes) {
        if (oc.error) std::rethrow_exception(oc.error);
        rep.stats.value_evals += oc.value_evals;
        rep.stats.exclusion_skipped += oc.exclusion_skipped;
        if (oc.central_duplicate) {
            throw std::logic_error("central slice carries a duplicate value");
        }
        for (Solution& sol : oc.solutions) rep.solutions.push_back(std::move(sol));
    }
    std::sort(rep.solutions.begin(), rep.solutions.end(), solution_slice_order);
    return rep;
}

}  // namespace

SearchReport run_search(const SearchConfig& config) { return run_search_impl(config, true); }

SearchReport run_search_serial(const SearchConfig& config) {
    return run_search_impl(config, false);
}

FilterBreakdown filter_breakdown(const SearchConfig& config) {
    const Plan plan = build_plan(config);
    FilterBreakdown fb;
    fb.stats = plan.counted;
    fb.budget_exhausted = plan.truncated;
    const uint64_t total = plan.counted.enumerated;
    auto frac = [total](uint64_t part) {
        if (total == 0) return Rational(0);
        Rational r(static_cast<unsigned long>(part));
        r /= Rational(static_cast<unsigned long>(total));
        return r;
    };
    fb.mdo_fraction = frac(plan.counted.rejected_mdo);
    fb.overlap_fraction = frac(plan.counted.rejected_overlap);
    fb.dominance_fraction = frac(plan.counted.rejected_dominance);
    fb.scanned_fraction = frac(plan.counted.scanned);
    return fb;
}

}  // namespace powerslice
