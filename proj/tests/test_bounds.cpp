#include "powerslice/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace powerslice;

TEST_CASE("SlicePair canonicalizes orientation") {
    const SlicePair p = SlicePair::from_sums(BigNat(19), BigNat(13));
    CHECK(p.small_sum == 13);
    CHECK(p.large_sum == 19);
    CHECK(p.shift == 6);
    CHECK(p.first_is_larger);

    const SlicePair q = SlicePair::from_shift(BigNat(13), BigInt(6));
    CHECK(q.small_sum == 13);
    CHECK(q.large_sum == 19);
    CHECK_FALSE(q.first_is_larger);

    const SlicePair r = SlicePair::from_shift(BigNat(19), BigInt(-6));
    CHECK(r.small_sum == 13);
    CHECK(r.first_is_larger);

    CHECK_THROWS_AS(SlicePair::from_shift(BigNat(3), BigInt(-5)), std::invalid_argument);
}

TEST_CASE("separation_floor known values") {
    CHECK(separation_floor(BigNat(10), 3) == 30);       // 3*2*5
    CHECK(separation_floor(BigNat(11), 3) == 30);
    CHECK(separation_floor(BigNat(13), 2) == 2);        // k = 2: gap floor is constant
    CHECK(separation_floor(BigNat(100), 4) == 30000);   // 4*3*50^2
    CHECK_THROWS_AS(separation_floor(BigNat(1), 3), std::invalid_argument);
    CHECK_THROWS_AS(separation_floor(BigNat(10), 1), std::invalid_argument);
}

TEST_CASE("neighbor_gap matches direct evaluation") {
    auto direct = [](uint64_t S, uint64_t k) {
        // f(n-1) - f(n) at n = floor(S/2), computed from raw powers
        const BigNat n = S / 2;
        const BigNat s(S);
        const auto f = [&](const BigNat& x) -> BigNat { return ipow(x, k) + ipow(s - x, k); };
        return BigNat(f(n - 1) - f(n));
    };
    for (uint64_t k = 2; k <= 7; ++k) {
        for (uint64_t S = 2; S <= 80; ++S) {
            CAPTURE(k);
            CAPTURE(S);
            CHECK(neighbor_gap(BigNat(S), k) == direct(S, k));
        }
    }
}

TEST_CASE("neighbor_gap known values") {
    CHECK(neighbor_gap(BigNat(10), 3) == 30);
    CHECK(neighbor_gap(BigNat(5), 3) == 30);   // 4^3 - 3^3 + 1 - 8 = 30
    CHECK(neighbor_gap(BigNat(2), 3) == 6);    // 2^3 + 0 - 2
    CHECK(neighbor_gap(BigNat(13), 2) == 4);   // 89 - 85
}

TEST_CASE("neighbor_gap never drops below separation_floor") {
    for (uint64_t k = 2; k <= 6; ++k) {
        for (uint64_t S = 2; S <= 200; ++S) {
            CAPTURE(k);
            CAPTURE(S);
            CHECK(neighbor_gap(BigNat(S), k) >= separation_floor(BigNat(S), k));
        }
    }
}

TEST_CASE("overlap_feasible on hand-checked pairs") {
    // k = 3, sums (13, 19): 19^3 = 6859 <= 4 * 13^3 = 8788
    CHECK(overlap_feasible(SlicePair::from_sums(BigNat(13), BigNat(19)), 3));
    // k = 3, sums (10, 22): 22^3 = 10648 > 4 * 10^3 = 4000
    CHECK_FALSE(overlap_feasible(SlicePair::from_sums(BigNat(10), BigNat(22)), 3));
    CHECK_THROWS_AS(overlap_feasible(SlicePair::from_sums(BigNat(5), BigNat(5)), 3),
                    std::invalid_argument);
}

TEST_CASE("overlap_min_sum known thresholds") {
    CHECK(overlap_min_sum(13, BigNat(2730)) == 3047);
    CHECK(overlap_min_sum(3, BigNat(6)) == 11);
    CHECK(overlap_min_sum(2, BigNat(1)) == 3);
    CHECK_THROWS_AS(overlap_min_sum(3, BigNat(0)), std::invalid_argument);
    CHECK_THROWS_AS(overlap_min_sum(1, BigNat(6)), std::invalid_argument);
}

TEST_CASE("overlap_min_sum is the exact threshold") {
    for (uint64_t k : {2, 3, 5, 13}) {
        for (uint64_t h : {1, 2, 6, 30, 100}) {
            CAPTURE(k);
            CAPTURE(h);
            const BigNat s = overlap_min_sum(k, BigNat(h));
            CHECK(overlap_feasible(SlicePair::from_shift(s, BigInt(h)), k));
            if (s > 1) {
                CHECK_FALSE(overlap_feasible(SlicePair::from_shift(BigNat(s - 1), BigInt(h)), k));
            }
        }
    }
}

TEST_CASE("max_feasible_shift agrees with overlap_feasible") {
    for (uint64_t k : {2, 3, 4, 13}) {
        for (uint64_t s : {1, 2, 13, 40, 400, 3047}) {
            CAPTURE(k);
            CAPTURE(s);
            const BigNat h = max_feasible_shift(BigNat(s), k);
            if (sgn(h) > 0) {
                CHECK(overlap_feasible(SlicePair::from_shift(BigNat(s), BigInt(h)), k));
            }
            CHECK_FALSE(overlap_feasible(SlicePair::from_shift(BigNat(s), BigInt(h + 1)), k));
        }
    }
    CHECK(max_feasible_shift(BigNat(0), 3) == 0);
}

TEST_CASE("exclusion_min_offset known values") {
    // k = 13, S = 6, h = 3: t^2 >= ceil(36/12) = 3, so t = 2
    CHECK(exclusion_min_offset(BigNat(6), BigNat(3), 13) == 2);
    // k = 3, S = 13, h = 6: t^2 >= 78, so t = 9
    CHECK(exclusion_min_offset(BigNat(13), BigNat(6), 3) == 9);
    // k = 2, S = 1, h = 1: t^2 >= 2, so t = 2
    CHECK(exclusion_min_offset(BigNat(1), BigNat(1), 2) == 2);
    CHECK(exclusion_min_offset(BigNat(0), BigNat(5), 4) == 0);
    CHECK(exclusion_min_offset(BigNat(5), BigNat(0), 4) == 0);
}

TEST_CASE("exclusion_min_offset is the exact threshold") {
    for (uint64_t k : {2, 3, 5, 13}) {
        for (uint64_t s : {1, 6, 13, 100}) {
            for (uint64_t h : {1, 3, 6, 50}) {
                CAPTURE(k);
                CAPTURE(s);
                CAPTURE(h);
                const BigNat t = exclusion_min_offset(BigNat(s), BigNat(h), k);
                CHECK(t * t * (k - 1) >= 2 * BigNat(s) * h);
                if (sgn(t) > 0) {
                    CHECK((t - 1) * (t - 1) * (k - 1) < 2 * BigNat(s) * h);
                }
            }
        }
    }
}

TEST_CASE("combined_min_sum known values") {
    CHECK(combined_min_sum(13, BigNat(2730)) == 455);
    CHECK(combined_min_sum(3, BigNat(6)) == 6);
    CHECK(combined_min_sum(2, BigNat(1)) == 2);
    CHECK(combined_min_sum(19, BigNat(798)) == 89);
    CHECK_THROWS_AS(combined_min_sum(3, BigNat(0)), std::invalid_argument);
}

TEST_CASE("the overlap threshold dominates the combined threshold") {
    for (uint64_t k : {2, 3, 5, 7, 13, 19}) {
        for (uint64_t h : {1, 6, 30, 798, 2730}) {
            CAPTURE(k);
            CAPTURE(h);
            const BoundsProfile b = bounds_profile(k, BigNat(h));
            CHECK(b.overlap_min_sum >= b.combined_min_sum);
        }
    }
}

TEST_CASE("dominance_pruned known rows") {
    CHECK(dominance_pruned(BigNat(2), 3));
    CHECK(dominance_pruned(BigNat(4), 3));
    CHECK_FALSE(dominance_pruned(BigNat(5), 3));
    CHECK(dominance_pruned(BigNat(3), 2));
    CHECK_FALSE(dominance_pruned(BigNat(4), 2));
    CHECK_FALSE(dominance_pruned(BigNat(1), 40));
    CHECK_FALSE(dominance_pruned(BigNat(0), 40));
}

TEST_CASE("dominance_pruned is monotone in k and antitone in the sum") {
    for (uint64_t s = 2; s <= 60; ++s) {
        bool prev = dominance_pruned(BigNat(s), 2);
        for (uint64_t k = 3; k <= 90; ++k) {
            const bool cur = dominance_pruned(BigNat(s), k);
            CAPTURE(s);
            CAPTURE(k);
            CHECK((!prev || cur));  // once pruned, stays pruned as k grows
            prev = cur;
        }
    }
    for (uint64_t k = 2; k <= 12; ++k) {
        bool prev = dominance_pruned(BigNat(2), k);
        for (uint64_t s = 3; s <= 80; ++s) {
            const bool cur = dominance_pruned(BigNat(s), k);
            CAPTURE(s);
            CAPTURE(k);
            CHECK((prev || !cur));  // once released, stays released as s grows
            prev = cur;
        }
    }
}

TEST_CASE("dominance_k_max threshold behavior") {
    CHECK(dominance_k_max(BigNat(19)) == 12);
    CHECK(dominance_pruned(BigNat(19), 13));
    CHECK_FALSE(dominance_pruned(BigNat(19), 12));
    CHECK(dominance_k_max(BigNat(2)) == 1);
    CHECK(dominance_k_max(BigNat(3)) == 1);  // 9 > 8 already prunes k = 2
    CHECK(dominance_k_max(BigNat(4)) == 2);
    CHECK_THROWS_AS(dominance_k_max(BigNat(1)), std::invalid_argument);
}

TEST_CASE("dominance_k_max stays within the float estimate") {
    for (uint64_t s = 2; s <= 200; ++s) {
        CAPTURE(s);
        const uint64_t kmax = dominance_k_max(BigNat(s));
        const uint64_t estimate =
            static_cast<uint64_t>(std::floor(static_cast<double>(s) * std::log(2.0))) + 1;
        CHECK(kmax <= estimate);
    }
}

TEST_CASE("dominance_max_pruned_sum is the exact threshold") {
    CHECK(dominance_max_pruned_sum(2) == 3);
    CHECK(dominance_max_pruned_sum(3) == 4);
    CHECK(dominance_max_pruned_sum(13) == 19);
    for (uint64_t k : {2, 3, 5, 13, 40, 100}) {
        CAPTURE(k);
        const BigNat cut = dominance_max_pruned_sum(k);
        CHECK(dominance_pruned(cut, k));
        CHECK_FALSE(dominance_pruned(BigNat(cut + 1), k));
    }
}

TEST_CASE("strength_holds across a wide exponent range") {
    for (uint64_t k = 2; k <= 200; ++k) {
        CAPTURE(k);
        CHECK(strength_holds(k));
    }
}
