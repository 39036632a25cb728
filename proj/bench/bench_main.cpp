// Timing comparison between the serial reference kernels and the production
// (log-space, OpenMP) path. Not a correctness test; see tests/ for that.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dcmi/distributions.hpp"
#include "dcmi/experiments.hpp"
#include "dcmi/kde.hpp"
#include "dcmi/mi.hpp"
#include "dcmi/reference.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        fn();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

volatile double sink = 0.0;

void bench_batch_eval(std::size_t n) {
    const auto dist = dcmi::BenchmarkDistribution::gaussian(1.0, 1.0);
    const auto ds = dist.sample(n, 42);
    const auto model = dcmi::ConditionalKde::fit(ds);
    const auto& values = model.values(0);
    const double h = model.bandwidth(0);

    std::vector<double> grid;
    for (double y = -5.0; y <= 6.0; y += 11.0 / static_cast<double>(n)) grid.push_back(y);

    const double t_ref = time_best_of(3, [&] {
        double acc = 0.0;
        for (double y : grid) acc += dcmi::ref::kde_density(values, h, y);
        sink = acc;
    });
    const double t_prod = time_best_of(3, [&] {
        const auto out = model.conditional_grid(0, grid);
        sink = out.back();
    });
    std::printf("batch kde eval    n=%-6zu grid=%-6zu serial-ref %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                values.size(), grid.size(), t_ref * 1e3, t_prod * 1e3, t_ref / t_prod);
}

void bench_estimate(std::size_t n) {
    const auto dist = dcmi::BenchmarkDistribution::gaussian(2.0, 1.0);
    const auto ds = dist.sample(n, 7);

    const double t_ref = time_best_of(3, [&] { sink = dcmi::ref::estimate_mi(ds); });
    const double t_prod = time_best_of(3, [&] { sink = dcmi::estimate_mi(ds).mi_nats; });
    std::printf("estimate_mi       n=%-6zu               serial-ref %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                n, t_ref * 1e3, t_prod * 1e3, t_ref / t_prod);
}

void bench_sweep() {
    dcmi::SweepSpec spec;
    spec.family = dcmi::Family::gaussian_pair;
    spec.param = "ym";
    spec.grid = {0.0, 1.0, 2.0};
    spec.replicates = 20;
    spec.pairs = 500;
    spec.base_seed = 3;

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const double t1 = time_best_of(1, [&] { sink = dcmi::run_sweep(spec).points[0].mean_mi; });
    omp_set_num_threads(max_threads);
    const double tp = time_best_of(1, [&] { sink = dcmi::run_sweep(spec).points[0].mean_mi; });
    std::printf("run_sweep         3x20 reps n=500       1 thread   %8.2f ms   %d threads %7.2f ms   speedup %.2fx\n",
                t1 * 1e3, max_threads, tp * 1e3, t1 / tp);
#else
    const double t1 = time_best_of(1, [&] { sink = dcmi::run_sweep(spec).points[0].mean_mi; });
    std::printf("run_sweep         3x20 reps n=500       serial %10.2f ms (built without OpenMP)\n",
                t1 * 1e3);
#endif
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n\n");
#endif
    bench_batch_eval(1000);
    bench_batch_eval(4000);
    bench_estimate(1000);
    bench_estimate(4000);
    bench_sweep();
    return 0;
}
