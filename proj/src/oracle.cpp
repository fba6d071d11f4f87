#include "powerslice/oracle.hpp"

#include "powerslice/bounds.hpp"
#include "powerslice/mdo.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace powerslice {
namespace {

using Pair = std::pair<uint64_t, uint64_t>;  // a <= b

void require_cap(uint64_t max_val, uint64_t cap) {
    if (max_val > cap) throw std::invalid_argument("oracle bound exceeds its cap");
}

std::vector<BigNat> power_table(uint64_t k, uint64_t max_val) {
    std::vector<BigNat> pw(max_val + 1);
    for (uint64_t x = 0; x <= max_val; ++x) pw[x] = ipow(BigNat(x), k);
    return pw;
}

std::map<BigNat, std::vector<Pair>> pairs_by_value(const std::vector<BigNat>& pw) {
    std::map<BigNat, std::vector<Pair>> groups;
    const uint64_t max_val = pw.size() - 1;
    for (uint64_t a = 0; a <= max_val; ++a) {
        for (uint64_t b = a; b <= max_val; ++b) {
            groups[pw[a] + pw[b]].push_back({a, b});
        }
    }
    return groups;
}

Solution make_solution(uint64_t k, Pair p, Pair q, const BigNat& value) {
    const uint64_t sp = p.first + p.second;
    const uint64_t sq = q.first + q.second;
    if (sq < sp) std::swap(p, q);
    Solution sol;
    sol.exponent = k;
    sol.a = p.first;
    sol.b = p.second;
    sol.c = q.first;
    sol.d = q.second;
    sol.small_sum = std::min(sp, sq);
    sol.large_sum = std::max(sp, sq);
    sol.shift = sol.large_sum - sol.small_sum;
    sol.value = value;
    return sol;
}

void record_failure(TheoremCheck& check, const Solution& sol) {
    if (check.passed) {
        check.passed = false;
        check.counterexample = sol;
    }
}

}  // namespace

bool TheoremReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const TheoremCheck& c) { return c.passed; });
}

std::vector<Solution> brute_force_solutions(uint64_t k, uint64_t max_val, uint64_t cap) {
    require_exponent(k);
    require_cap(max_val, cap);
    const auto groups = pairs_by_value(power_table(k, max_val));
    std::vector<Solution> out;
    for (const auto& [value, pairs] : groups) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                out.push_back(make_solution(k, pairs[i], pairs[j], value));
            }
        }
    }
    std::sort(out.begin(), out.end(), solution_value_order);
    return out;
}

TheoremReport verify_theorems(uint64_t k, uint64_t max_val, uint64_t cap) {
    const auto sols = brute_force_solutions(k, max_val, cap);
    TheoremReport rep;
    rep.exponent = k;
    rep.max_val = max_val;
    rep.solutions = sols.size();

    TheoremCheck shift_div{"shift_divisibility"};
    TheoremCheck exclusion{"exclusion_zone"};
    TheoremCheck overlap{"overlap_bound"};
    TheoremCheck dominance{"dominance_bound"};
    TheoremCheck central{"central_uniqueness"};

    const BigNat modulus = mdo_modulus(k);
    for (const Solution& sol : sols) {
        shift_div.checked++;
        if (!mpz_divisible_p(sol.shift.get_mpz_t(), modulus.get_mpz_t())) {
            record_failure(shift_div, sol);
        }

        central.checked++;
        if (sgn(sol.shift) == 0) record_failure(central, sol);

        if (sgn(sol.shift) > 0) {
            exclusion.checked++;
            const BigNat offset = sol.b - sol.a;
            if (offset * offset * (k - 1) < 2 * sol.small_sum * sol.shift) {
                record_failure(exclusion, sol);
            }

            overlap.checked++;
            if (!overlap_feasible(SlicePair::from_sums(sol.small_sum, sol.large_sum), k)) {
                record_failure(overlap, sol);
            }

            dominance.checked++;
            if (dominance_pruned(sol.large_sum, k)) record_failure(dominance, sol);
        }
    }

    rep.checks = {shift_div, exclusion, overlap, dominance, central};
    return rep;
}

bool check_two_powers(uint64_t m, uint64_t k, uint64_t max_val, uint64_t cap) {
    if (m < 1 || k <= m) throw std::invalid_argument("check_two_powers: need 1 <= m < k");
    require_cap(max_val, cap);
    const auto pw_k = power_table(k, max_val);
    const auto groups = pairs_by_value(power_table(m, max_val));
    for (const auto& [value, pairs] : groups) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            for (size_t j = i + 1; j < pairs.size(); ++j) {
                const auto& [a, b] = pairs[i];
                const auto& [c, d] = pairs[j];
                if (pw_k[a] + pw_k[b] == pw_k[c] + pw_k[d]) return false;
            }
        }
    }
    return true;
}

}  // namespace powerslice
