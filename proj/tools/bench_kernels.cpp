// Benchmark: OpenMP kernels against the serial reference, plus the sweep
// driver at different worker counts.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "gravmem/linalg.hpp"
#include "gravmem/parallel.hpp"
#include "gravmem/sdp.hpp"

using namespace gravmem;

namespace {

CMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

    for (std::size_t n : {64, 128, 256}) {
        const CMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
        volatile double sink = 0.0;
        const double ts = time_ms([&] { sink = serial::matmul(a, b).max_abs(); }, 3);
        const double tp = time_ms([&] { sink = (a * b).max_abs(); }, 3);
        std::printf("matmul %3zux%-3zu               %12.3f %12.3f %7.2fx\n", n, n, ts, tp,
                    ts / tp);
        (void)sink;
    }

    for (std::size_t n : {16, 24}) {
        const CMatrix a = random_matrix(n, 3), b = random_matrix(n, 4);
        volatile double sink = 0.0;
        const double ts = time_ms([&] { sink = serial::kron(a, b).max_abs(); }, 5);
        const double tp = time_ms([&] { sink = kron(a, b).max_abs(); }, 5);
        std::printf("kron   %3zux%-3zu               %12.3f %12.3f %7.2fx\n", n, n, ts, tp,
                    ts / tp);
        (void)sink;
    }

    std::vector<double> grid;
    for (int k = 1; k <= 8; ++k) grid.push_back(0.18 * k);
    set_worker_count(1);
    const double sweep_serial = time_ms([&] { sweep(grid, 1e-6, 20000); }, 1);
    set_worker_count(0);
    const double sweep_parallel = time_ms([&] { sweep(grid, 1e-6, 20000); }, 1);
    std::printf("%-28s %12.1f %12.1f %7.2fx\n", "sdp sweep (8 points)", sweep_serial,
                sweep_parallel, sweep_serial / sweep_parallel);
    return 0;
}
