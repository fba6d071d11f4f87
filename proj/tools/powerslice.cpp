#include "powerslice/bounds.hpp"
#include "powerslice/mdo.hpp"
#include "powerslice/oracle.hpp"
#include "powerslice/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace powerslice;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

// All integers cross the JSON boundary as decimal strings; values outgrow
// 64-bit for modest exponents.
std::string dec(const BigNat& v) { return v.get_str(); }
std::string dec(uint64_t v) { return std::to_string(v); }
std::string dec(const Rational& v) { return v.get_str(); }

// "3,5..9,13..19..2" -> {3,5,6,7,8,9,13,15,17,19}
std::vector<uint64_t> parse_k_list(const std::string& spec) {
    std::vector<uint64_t> out;
    std::string token;
    std::stringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("--k: empty entry in exponent list");
        uint64_t lo = 0, hi = 0, step = 1;
        const size_t dots = token.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::stoull(token);
        } else {
            lo = std::stoull(token.substr(0, dots));
            std::string rest = token.substr(dots + 2);
            const size_t dots2 = rest.find("..");
            if (dots2 == std::string::npos) {
                hi = std::stoull(rest);
            } else {
                hi = std::stoull(rest.substr(0, dots2));
                step = std::stoull(rest.substr(dots2 + 2));
            }
        }
        if (step == 0 || hi < lo) {
            throw std::invalid_argument("--k: malformed exponent range");
        }
        for (uint64_t k = lo; k <= hi; k += step) out.push_back(k);
    }
    if (out.empty()) throw std::invalid_argument("--k: no exponents given");
    return out;
}

void apply_thread_env() {
    if (const char* env = std::getenv("POWERSLICE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
        // 0 or garbage leaves the runtime default in place
    }
}

// ----- table -----

json table_row(uint64_t k) {
    const MdoProfile prof = mdo_profile(k);
    const Rational combined = Rational(2 * prof.modulus) / Rational(k - 1);
    json row;
    row["k"] = dec(k);
    json primes = json::array();
    for (uint64_t p : prof.primes) primes.push_back(dec(p));
    row["primes"] = primes;
    row["modulus"] = dec(prof.modulus);
    row["density"] = dec(prof.density);
    row["combined_min_sum"] = dec(combined);
    row["combined_min_sum_ceil"] = dec(combined_min_sum(k, prof.modulus));
    return row;
}

int cmd_table(const std::string& k_spec, const std::string& format) {
    const auto ks = parse_k_list(k_spec);
    if (format == "csv") {
        std::cout << "k,primes,modulus,density,combined_min_sum,combined_min_sum_ceil\n";
        for (uint64_t k : ks) {
            const MdoProfile prof = mdo_profile(k);
            const Rational combined = Rational(2 * prof.modulus) / Rational(k - 1);
            std::string primes;
            for (size_t i = 0; i < prof.primes.size(); ++i) {
                if (i) primes += '+';
                primes += std::to_string(prof.primes[i]);
            }
            std::cout << k << ',' << primes << ',' << prof.modulus.get_str() << ','
                      << prof.density.get_str() << ',' << combined.get_str() << ','
                      << combined_min_sum(k, prof.modulus).get_str() << '\n';
        }
    } else {
        json rows = json::array();
        for (uint64_t k : ks) rows.push_back(table_row(k));
        std::cout << rows.dump(2) << '\n';
    }
    return kExitOk;
}

// ----- bounds -----

int cmd_bounds(uint64_t k, int64_t h) {
    const BigNat h_abs = h < 0 ? BigNat(-h) : BigNat(h);
    json out;
    out["k"] = dec(k);
    out["h"] = dec(BigNat(h));
    if (sgn(h_abs) == 0) {
        out["combined_min_sum"] = nullptr;
        out["overlap_min_sum"] = nullptr;
        out["exclusion_min_offset"] = nullptr;
        out["dominance_k_max"] = nullptr;
        out["note"] = "equal sums: the slice bounds apply only when the shift is nonzero";
    } else {
        const BoundsProfile prof = bounds_profile(k, h_abs);
        out["combined_min_sum"] = dec(prof.combined_min_sum);
        out["overlap_min_sum"] = dec(prof.overlap_min_sum);
        out["exclusion_min_offset"] = dec(exclusion_min_offset(prof.overlap_min_sum, h_abs, k));
        out["dominance_k_max"] = dec(dominance_k_max(prof.overlap_min_sum + h_abs));
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

// ----- search -----

json solution_json(const Solution& sol) {
    json j;
    j["k"] = dec(sol.exponent);
    j["a"] = dec(sol.a);
    j["b"] = dec(sol.b);
    j["c"] = dec(sol.c);
    j["d"] = dec(sol.d);
    j["S"] = dec(sol.small_sum);
    j["h"] = dec(sol.shift);
    j["value"] = dec(sol.value);
    return j;
}

json stats_json(const SearchReport& rep) {
    json j;
    j["summary"] = true;
    j["solutions"] = dec(static_cast<uint64_t>(rep.solutions.size()));
    j["enumerated"] = dec(rep.stats.enumerated);
    j["rejected_mdo"] = dec(rep.stats.rejected_mdo);
    j["rejected_overlap"] = dec(rep.stats.rejected_overlap);
    j["rejected_dominance"] = dec(rep.stats.rejected_dominance);
    j["scanned"] = dec(rep.stats.scanned);
    j["central_checked"] = dec(rep.stats.central_checked);
    j["exclusion_skipped"] = dec(rep.stats.exclusion_skipped);
    j["value_evals"] = dec(rep.stats.value_evals);
    j["budget_exhausted"] = rep.budget_exhausted;
    return j;
}

int cmd_search(const SearchConfig& cfg, const std::string& format) {
    const SearchReport rep = run_search(cfg);
    if (format == "csv") {
        std::cout << "k,a,b,c,d,S,h,value\n";
        for (const Solution& sol : rep.solutions) {
            std::cout << sol.exponent << ',' << sol.a.get_str() << ',' << sol.b.get_str() << ','
                      << sol.c.get_str() << ',' << sol.d.get_str() << ','
                      << sol.small_sum.get_str() << ',' << sol.shift.get_str() << ','
                      << sol.value.get_str() << '\n';
        }
        std::cerr << stats_json(rep).dump() << '\n';
    } else {
        for (const Solution& sol : rep.solutions) {
            std::cout << solution_json(sol).dump() << '\n';
        }
        std::cout << stats_json(rep).dump() << '\n';
    }
    return rep.budget_exhausted ? kExitBudget : kExitOk;
}

// ----- verify -----

json check_json(const TheoremCheck& check) {
    json j;
    j["name"] = check.name;
    j["checked"] = dec(check.checked);
    j["passed"] = check.passed;
    if (check.counterexample) j["counterexample"] = solution_json(*check.counterexample);
    return j;
}

int cmd_verify(uint64_t k, uint64_t max_val, uint64_t cap, const std::string& format) {
    const TheoremReport rep = verify_theorems(k, max_val, cap);
    if (format == "json") {
        json out;
        out["k"] = dec(rep.exponent);
        out["max_val"] = dec(rep.max_val);
        out["solutions"] = dec(rep.solutions);
        json checks = json::array();
        for (const TheoremCheck& check : rep.checks) checks.push_back(check_json(check));
        out["checks"] = checks;
        out["all_passed"] = rep.all_passed();
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "exponent " << k << ", ground truth to " << max_val << ": "
                  << rep.solutions << " solutions\n";
        for (const TheoremCheck& check : rep.checks) {
            std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ("
                      << check.checked << " checked)\n";
            if (check.counterexample) {
                std::cout << "      counterexample: " << solution_json(*check.counterexample).dump()
                          << '\n';
            }
        }
    }
    return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"slice-organized search for equal sums of two like powers"};
    app.require_subcommand(1);

    std::string k_spec;
    std::string format = "json";
    auto* table = app.add_subcommand("table", "modulus and bound table per exponent");
    table->add_option("--k", k_spec, "exponents, e.g. 3,5..9 or 3..19..2")->required();
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    uint64_t bounds_k = 3;
    int64_t bounds_h = 0;
    auto* bounds = app.add_subcommand("bounds", "slice-pair bounds for one shift");
    bounds->set_help_flag("--help", "print help");  // frees -h for the shift option
    bounds->add_option("--k", bounds_k, "exponent")->required();
    bounds->add_option("--h", bounds_h, "shift between the slice sums (may be negative)")
        ->required();

    SearchConfig cfg;
    std::string shifts_spec = "auto";
    std::string search_format = "json";
    bool no_mdo = false, no_overlap = false, no_dominance = false, no_exclusion = false;
    auto* search = app.add_subcommand("search", "scan slice pairs for equal power sums");
    search->add_option("--k", cfg.exponent, "exponent")->required();
    search->add_option("--max-sum", cfg.max_small_sum, "largest smaller-slice sum")->required();
    search->add_option("--shifts", shifts_spec,
                       "auto | max:N | comma-separated shift list (default auto)");
    search->add_flag("--no-mdo", no_mdo, "disable the shift divisibility filter");
    search->add_flag("--no-overlap", no_overlap, "disable the range overlap filter");
    search->add_flag("--no-dominance", no_dominance, "disable the dominance filter");
    search->add_flag("--no-exclusion", no_exclusion, "disable the exclusion zone");
    search->add_flag("--include-central", cfg.include_central,
                     "self-check equal-sum slices as well");
    search->add_option("--budget", cfg.budget, "work budget in value evaluations");
    search->add_option("--format", search_format)->check(CLI::IsMember({"json", "csv"}));

    uint64_t verify_k = 3, verify_max = 60, verify_cap = kDefaultOracleCap;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "replay structural claims on brute force output");
    verify->add_option("--k", verify_k, "exponent")->required();
    verify->add_option("--max-val", verify_max, "largest value fed to the brute force oracle");
    verify->add_option("--cap", verify_cap, "safety cap on the oracle bound");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(k_spec, format);
        if (bounds->parsed()) return cmd_bounds(bounds_k, bounds_h);
        if (search->parsed()) {
            cfg.use_mdo = !no_mdo;
            cfg.use_overlap = !no_overlap;
            cfg.use_dominance = !no_dominance;
            cfg.use_exclusion = !no_exclusion;
            if (shifts_spec == "auto") {
                cfg.shift_policy = ShiftPolicy::Auto;
            } else if (shifts_spec.rfind("max:", 0) == 0) {
                cfg.shift_policy = ShiftPolicy::Max;
                cfg.shift_max = std::stoull(shifts_spec.substr(4));
            } else {
                cfg.shift_policy = ShiftPolicy::List;
                std::stringstream ss(shifts_spec);
                std::string token;
                while (std::getline(ss, token, ',')) {
                    if (!token.empty()) cfg.shifts.push_back(std::stoull(token));
                }
                if (cfg.shifts.empty()) {
                    throw std::invalid_argument("--shifts: no usable shift list");
                }
            }
            return cmd_search(cfg, search_format);
        }
        if (verify->parsed()) return cmd_verify(verify_k, verify_max, verify_cap, verify_format);
    } catch (const std::logic_error& e) {
        // invalid_argument, domain_error and length_error are usage-level;
        // anything else from logic_error means an internal invariant broke.
        if (dynamic_cast<const std::invalid_argument*>(&e) ||
            dynamic_cast<const std::domain_error*>(&e) ||
            dynamic_cast<const std::length_error*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
