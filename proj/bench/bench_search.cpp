// Times the OpenMP search kernel against the serial reference on the same
// configuration and insists on bit-identical reports.
//
// usage: bench_search [k] [max_sum] [threads]

#include "powerslice/search.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>

using namespace powerslice;

int main(int argc, char** argv) {
    const uint64_t k = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
    const uint64_t max_sum = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 500;
    if (argc > 3) omp_set_num_threads(std::atoi(argv[3]));

    SearchConfig cfg;
    cfg.exponent = k;
    cfg.max_small_sum = max_sum;

    std::printf("search k=%llu max_sum=%llu threads=%d\n",
                (unsigned long long)k, (unsigned long long)max_sum, omp_get_max_threads());

    const double t0 = omp_get_wtime();
    const SearchReport serial = run_search_serial(cfg);
    const double t1 = omp_get_wtime();
    const SearchReport parallel = run_search(cfg);
    const double t2 = omp_get_wtime();

    const bool same = serial.solutions == parallel.solutions && serial.stats == parallel.stats &&
                      serial.budget_exhausted == parallel.budget_exhausted;

    std::printf("pairs scanned      %llu\n", (unsigned long long)serial.stats.scanned);
    std::printf("value evaluations  %llu\n", (unsigned long long)serial.stats.value_evals);
    std::printf("solutions          %zu\n", serial.solutions.size());
    std::printf("serial             %.3f s\n", t1 - t0);
    std::printf("parallel           %.3f s\n", t2 - t1);
    std::printf("speedup            %.2fx\n", (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9));
    std::printf("reports identical  %s\n", same ? "yes" : "NO");

    return same ? 0 : 1;
}
