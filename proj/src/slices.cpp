#include "powerslice/slices.hpp"

#include "powerslice/bounds.hpp"

#include <algorithm>
#include <utility>

namespace powerslice {
namespace {

// Forward-difference table for a polynomial sampled at consecutive integers.
// Seeded with j+1 directly computed values it reproduces exactly those
// samples when advanced up to j times, and when j reaches the degree the
// top difference is constant and every further step is exact as well. Each
// advance costs j bigint additions and no multiplication.
class PolyStepper {
public:
    explicit PolyStepper(std::vector<BigNat> samples) : diffs_(std::move(samples)) {
        for (size_t level = 1; level < diffs_.size(); ++level) {
            for (size_t i = diffs_.size() - 1; i >= level; --i) {
                diffs_[i] -= diffs_[i - 1];
            }
        }
    }

    const BigNat& value() const { return diffs_[0]; }

    void advance() {
        for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
            diffs_[i] += diffs_[i + 1];
        }
    }

private:
    std::vector<BigNat> diffs_;  // diffs_[i] = i-th forward difference at the cursor
};

// Streams f(x) = x^k + (S-x)^k for x = 0 .. floor(S/2), largest value first.
class SliceWalker {
public:
    SliceWalker(const BigNat& sum, uint64_t k) {
        BigNat half = sum / 2;
        if (!half.fits_ulong_p()) throw std::length_error("slice too long to scan");
        x_max_ = half.get_ui();
        const uint64_t seeds = std::min(x_max_, k) + 1;
        std::vector<BigNat> rising, falling;
        rising.reserve(seeds);
        falling.reserve(seeds);
        for (uint64_t j = 0; j < seeds; ++j) {
            rising.push_back(ipow(BigNat(j), k));
            falling.push_back(ipow(sum - j, k));
        }
        rising_.emplace(std::move(rising));
        falling_.emplace(std::move(falling));
        current_ = rising_->value() + falling_->value();
    }

    bool done() const { return x_ > x_max_; }
    uint64_t x() const { return x_; }
    const BigNat& value() const { return current_; }

    // Entries whose value was produced, for work accounting.
    uint64_t produced() const { return produced_; }

    void advance() {
        if (++x_ > x_max_) return;
        rising_->advance();
        falling_->advance();
        current_ = rising_->value() + falling_->value();
        ++produced_;
    }

private:
    uint64_t x_ = 0;
    uint64_t x_max_ = 0;
    uint64_t produced_ = 1;
    std::optional<PolyStepper> rising_;
    std::optional<PolyStepper> falling_;
    BigNat current_;
};

}  // namespace

SliceSequence slice_values(const BigNat& S, uint64_t k, uint64_t materialize_cap) {
    require_exponent(k);
    if (sgn(S) < 0) throw std::invalid_argument("slice_values: negative sum");
    BigNat half = S / 2;
    if (cmp(half, materialize_cap) > 0) {
        throw std::length_error("slice_values: slice exceeds the materialize cap");
    }
    SliceSequence seq;
    seq.sum = S;
    seq.exponent = k;
    seq.entries.reserve(half.get_ui() + 1);
    for (SliceWalker w(S, k); !w.done(); w.advance()) {
        seq.entries.push_back({w.x(), w.value()});
    }
    return seq;
}

CentralCheck central_check(const BigNat& S, uint64_t k, ScanStats* stats) {
    require_exponent(k);
    if (sgn(S) < 0) throw std::invalid_argument("central_check: negative sum");
    CentralCheck res;
    res.unique = true;
    SliceWalker w(S, k);
    BigNat prev = w.value();
    for (w.advance(); !w.done(); w.advance()) {
        BigNat gap = prev - w.value();
        if (sgn(gap) == 0) res.unique = false;
        if (!res.min_gap || gap < *res.min_gap) res.min_gap = gap;
        prev = w.value();
    }
    if (stats) stats->value_evals += 2 * w.produced();
    return res;
}

bool solution_slice_order(const Solution& lhs, const Solution& rhs) {
    if (lhs.small_sum != rhs.small_sum) return lhs.small_sum < rhs.small_sum;
    if (lhs.shift != rhs.shift) return lhs.shift < rhs.shift;
    if (lhs.value != rhs.value) return lhs.value < rhs.value;
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    return lhs.c < rhs.c;
}

bool solution_value_order(const Solution& lhs, const Solution& rhs) {
    if (lhs.value != rhs.value) return lhs.value < rhs.value;
    if (lhs.small_sum != rhs.small_sum) return lhs.small_sum < rhs.small_sum;
    if (lhs.shift != rhs.shift) return lhs.shift < rhs.shift;
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    return lhs.c < rhs.c;
}

std::vector<Solution> intersect_slices(const BigNat& s_min, const BigNat& h_abs, uint64_t k,
                                       bool use_exclusion, ScanStats* stats) {
    require_exponent(k);
    if (sgn(s_min) < 0 || sgn(h_abs) < 0) {
        throw std::invalid_argument("intersect_slices: negative argument");
    }
    std::vector<Solution> out;
    ScanStats local;
    if (sgn(h_abs) == 0) {
        if (stats) *stats = local;
        return out;
    }

    const BigNat s_max = s_min + h_abs;
    const BigNat half_small = s_min / 2;
    if (!half_small.fits_ulong_p()) throw std::length_error("slice too long to scan");
    const uint64_t x_full = half_small.get_ui();

    // Positions on the smaller slice with offset s_min - 2x below the
    // exclusion threshold cannot carry a solution; the walk stops there.
    bool any_kept = true;
    uint64_t x_limit = x_full;
    if (use_exclusion) {
        const BigNat t_min = exclusion_min_offset(s_min, h_abs, k);
        if (t_min > s_min) {
            any_kept = false;
            local.exclusion_skipped = x_full + 1;
        } else {
            BigNat lim = (s_min - t_min) / 2;
            x_limit = lim.get_ui();
            local.exclusion_skipped = x_full - x_limit;
        }
    }

    if (any_kept) {
        SliceWalker wa(s_min, k);
        SliceWalker wb(s_max, k);
        while (!wa.done() && wa.x() <= x_limit && !wb.done()) {
            const int rel = cmp(wa.value(), wb.value());
            if (rel > 0) {
                wa.advance();
            } else if (rel < 0) {
                wb.advance();
            } else {
                Solution sol;
                sol.exponent = k;
                sol.a = wa.x();
                sol.b = s_min - wa.x();
                sol.c = wb.x();
                sol.d = s_max - wb.x();
                sol.small_sum = s_min;
                sol.large_sum = s_max;
                sol.shift = h_abs;
                sol.value = wa.value();
                // Stepped values are re-derived from scratch before emission.
                const BigNat lhs = ipow(sol.a, k) + ipow(sol.b, k);
                const BigNat rhs = ipow(sol.c, k) + ipow(sol.d, k);
                local.value_evals += 4;
                if (lhs != sol.value || rhs != sol.value) {
                    throw std::logic_error("intersect_slices: stepped value failed re-verification");
                }
                out.push_back(std::move(sol));
                wa.advance();
                wb.advance();
            }
        }
        local.value_evals += 2 * (wa.produced() + wb.produced());
    }

    std::reverse(out.begin(), out.end());
    if (stats) *stats = local;
    return out;
}

}  // namespace powerslice
