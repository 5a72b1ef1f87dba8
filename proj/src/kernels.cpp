#include "lvmel/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lvmel {
namespace kernels {

int thread_cap() {
    static int cap = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0) hw = 1;
        if (const char* env = std::getenv("MEL_THREADS")) {
            int k = std::atoi(env);
            if (k > 0) return std::min(k, hw);
        }
        return hw;
    }();
    return cap;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = 0.5 * (lo + hi);
        return xs;
    }
    for (int k = 0; k < n; ++k) xs[k] = lo + (hi - lo) * k / (n - 1);
    return xs;
}

std::vector<double> annulus_grid(const AnnulusSpec& a, int n, double margin_frac) {
    double m = margin_frac * a.length();
    return linspace(a.lo + m, a.hi - m, n);
}

std::vector<double> map_grid(const std::vector<double>& xs,
                             const std::function<double(double)>& f, Exec exec) {
    std::vector<double> out(xs.size());
    if (exec == Exec::Serial) {
        for (std::size_t k = 0; k < xs.size(); ++k) out[k] = f(xs[k]);
        return out;
    }
    const int nt = thread_cap();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
#endif
    for (long k = 0; k < static_cast<long>(xs.size()); ++k) out[k] = f(xs[k]);
    (void)nt;
    return out;
}

int sweep_max(int n_draws, const std::function<int(int)>& fn, Exec exec) {
    int best = 0;
    if (exec == Exec::Serial) {
        for (int k = 0; k < n_draws; ++k) best = std::max(best, fn(k));
        return best;
    }
    const int nt = thread_cap();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt) reduction(max : best)
#endif
    for (int k = 0; k < n_draws; ++k) best = std::max(best, fn(k));
    (void)nt;
    return best;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace kernels
}  // namespace lvmel
