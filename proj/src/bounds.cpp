#include "powerslice/bounds.hpp"

namespace powerslice {

SlicePair SlicePair::from_sums(const BigNat& s, const BigNat& t) {
    if (sgn(s) < 0 || sgn(t) < 0) throw std::invalid_argument("slice sums must be non-negative");
    SlicePair p;
    p.first_is_larger = s > t;
    p.small_sum = p.first_is_larger ? t : s;
    p.large_sum = p.first_is_larger ? s : t;
    p.shift = p.large_sum - p.small_sum;
    return p;
}

SlicePair SlicePair::from_shift(const BigNat& s, const BigInt& h) {
    return from_sums(s, BigNat(s + h));
}

BigNat separation_floor(const BigNat& S, uint64_t k) {
    require_exponent(k);
    if (S < 2) throw std::invalid_argument("separation_floor: sum must be >= 2");
    const BigNat n = S / 2;
    return BigNat(k) * (k - 1) * ipow(n, k - 2);
}

BigNat neighbor_gap(const BigNat& S, uint64_t k) {
    require_exponent(k);
    if (S < 2) throw std::invalid_argument("neighbor_gap: sum must be >= 2");
    const BigNat n = S / 2;
    if (mpz_even_p(S.get_mpz_t())) {
        // f(n-1) - f(n) with f(x) = x^k + (S-x)^k, S = 2n
        return ipow(n + 1, k) + ipow(n - 1, k) - 2 * ipow(n, k);
    }
    // f(n-1) - f(n), S = 2n + 1
    return ipow(n + 2, k) - ipow(n + 1, k) + ipow(n - 1, k) - ipow(n, k);
}

// large^k <= 2^(k-1) * small^k, shared by the feasibility predicates below.
static bool overlap_holds(const BigNat& small_sum, const BigNat& large_sum, uint64_t k) {
    BigNat lhs = ipow(large_sum, k);
    BigNat rhs = ipow(small_sum, k);
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), k - 1);
    return lhs <= rhs;
}

bool overlap_feasible(const SlicePair& pair, uint64_t k) {
    require_exponent(k);
    if (sgn(pair.shift) == 0) {
        throw std::invalid_argument("overlap_feasible: pair has equal sums");
    }
    return overlap_holds(pair.small_sum, pair.large_sum, k);
}

BigNat overlap_min_sum(uint64_t k, const BigNat& h_abs) {
    require_exponent(k);
    if (sgn(h_abs) <= 0) throw std::invalid_argument("overlap_min_sum: shift must be >= 1");
    auto feasible = [&](const BigNat& s) { return overlap_holds(s, s + h_abs, k); };
    // Feasibility is monotone in s: double until feasible, then bisect.
    BigNat hi = 1;
    while (!feasible(hi)) hi *= 2;
    BigNat lo = hi / 2;
    while (hi - lo > 1) {
        BigNat mid = (lo + hi) / 2;
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

BigNat max_feasible_shift(const BigNat& s_min, uint64_t k) {
    require_exponent(k);
    if (sgn(s_min) < 0) throw std::invalid_argument("max_feasible_shift: negative sum");
    if (sgn(s_min) == 0) return BigNat(0);
    BigNat bound = ipow(s_min, k);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), k - 1);
    return kth_root_floor(bound, k) - s_min;
}

BigNat exclusion_min_offset(const BigNat& s_min, const BigNat& h_abs, uint64_t k) {
    require_exponent(k);
    if (sgn(s_min) < 0 || sgn(h_abs) < 0) {
        throw std::invalid_argument("exclusion_min_offset: negative argument");
    }
    // smallest t with t^2 >= ceil(2 * s_min * h_abs / (k-1))
    const BigNat need = ceil_div(2 * s_min * h_abs, BigNat(k - 1));
    if (sgn(need) == 0) return BigNat(0);
    BigNat t = isqrt_floor(need);
    if (t * t < need) ++t;
    return t;
}

BigNat combined_min_sum(uint64_t k, const BigNat& h_abs) {
    require_exponent(k);
    if (sgn(h_abs) <= 0) throw std::invalid_argument("combined_min_sum: shift must be >= 1");
    return ceil_div(2 * h_abs, BigNat(k - 1));
}

bool dominance_pruned(const BigNat& s_max, uint64_t k) {
    require_exponent(k);
    if (s_max < 2) return false;
    return ipow(s_max, k) > 2 * ipow(s_max - 1, k);
}

uint64_t dominance_k_max(const BigNat& s_max) {
    if (s_max < 2) throw std::invalid_argument("dominance_k_max: sum must be >= 2");
    if (dominance_pruned(s_max, 2)) return 1;
    // (s/(s-1))^k grows without bound, so a pruned k exists; bracket and bisect.
    uint64_t lo = 2, hi = 4;
    while (!dominance_pruned(s_max, hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const uint64_t mid = lo + (hi - lo) / 2;
        if (dominance_pruned(s_max, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

BigNat dominance_max_pruned_sum(uint64_t k) {
    require_exponent(k);
    // Pruned at s = 2 for every k >= 2 and eventually not pruned, so the
    // threshold is well defined.
    BigNat lo = 2, hi = 4;
    while (dominance_pruned(hi, k)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        BigNat mid = (lo + hi) / 2;
        if (dominance_pruned(mid, k)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

bool strength_holds(uint64_t k) {
    require_exponent(k);
    const BigNat lhs = 2 * ipow(BigNat(k) + 1, k);
    BigNat rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, 2 * k);
    return lhs > rhs;
}

BoundsProfile bounds_profile(uint64_t k, const BigNat& h_abs) {
    BoundsProfile b;
    b.exponent = k;
    b.shift = h_abs;
    b.combined_min_sum = combined_min_sum(k, h_abs);
    b.overlap_min_sum = overlap_min_sum(k, h_abs);
    return b;
}

}  // namespace powerslice
