// Benchmark: parallel kernels against their serial references.
//
//   minimum distance   chunked Gray-code enumeration vs the plain loop
//   structure suite    instance fan-out vs a single worker

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lrc/lab.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_min_distance(int k, int n, int reps) {
    std::mt19937_64 rng(7);
    lrc::BitMatrix g = lrc::lab::random_code(rng, n, k);
    volatile int sink = 0;
    double serial = time_of([&] {
        for (int i = 0; i < reps; ++i) sink += lrc::gf2::min_distance_serial(g, g.column_set());
    });
    double parallel = time_of([&] {
        for (int i = 0; i < reps; ++i) sink += lrc::gf2::min_distance(g, g.column_set());
    });
    std::printf("min_distance  k=%-2d n=%-2d reps=%-3d  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", k, n,
                reps, serial, parallel, serial / parallel);
}

void bench_structure_suite(long count) {
    lrc::lab::InstanceSpec spec;
    spec.mode = lrc::lab::InstanceSpec::Mode::Random;
    spec.max_n = 12;
    spec.max_k = 6;
    spec.count = count;
    spec.seed = 11;
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    double serial = time_of([&] { (void)lrc::lab::verify_structure_suite(spec); });
    omp_set_num_threads(max_threads);
    double parallel = time_of([&] { (void)lrc::lab::verify_structure_suite(spec); });
    std::printf("structure_suite  %ld instances      serial %8.3fs  parallel %8.3fs  speedup %.2fx (%d threads)\n",
                count, serial, parallel, serial / parallel, max_threads);
#else
    double serial = time_of([&] { (void)lrc::lab::verify_structure_suite(spec); });
    std::printf("structure_suite  %ld instances      serial %8.3fs  (built without OpenMP)\n", count, serial);
#endif
}

}  // namespace

int main(int argc, char** argv) {
    long suite_count = argc > 1 ? std::atol(argv[1]) : 2000;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bench_min_distance(20, 40, 20);
    bench_min_distance(24, 60, 3);
    bench_structure_suite(suite_count);
    return 0;
}
