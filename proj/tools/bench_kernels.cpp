// Benchmarks the OpenMP kernels against their serial execution on
// synthetic data. The parallel paths are required to be bit-identical to
// the serial ones (see tests); this tool reports the speedup.

#include <chrono>
#include <cstdio>
#include <string>

#include "scribe/kernels.hpp"
#include "scribe/learn.hpp"
#include "scribe/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace scribe;

namespace {

DenseMatrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
    DenseMatrix X(n, d);
    rng::Engine eng(seed);
    for (double& v : X.data)
        v = eng.normal();
    return X;
}

template <typename Fn>
double time_ms(Fn&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel == serial\n");
#endif

    {
        const DenseMatrix X = random_matrix(1500, 100, 1);
        const double s = time_ms([&] { kernels::rbf_kernel_matrix(X, 0.01, kernels::Exec::Serial); });
        const double p = time_ms([&] { kernels::rbf_kernel_matrix(X, 0.01, kernels::Exec::Parallel); });
        report("rbf_kernel_matrix 1500x100", s, p);
    }
    {
        const DenseMatrix X = random_matrix(4000, 100, 2);
        const auto mean = kernels::column_means(X);
        const double s = time_ms([&] { kernels::covariance(X, mean, kernels::Exec::Serial); });
        const double p = time_ms([&] { kernels::covariance(X, mean, kernels::Exec::Parallel); });
        report("covariance 4000x100", s, p);
    }
    {
        const DenseMatrix A = random_matrix(1500, 25, 3);
        const double s = time_ms([&] { kernels::pairwise_sq_dists(A, A, kernels::Exec::Serial); });
        const double p = time_ms([&] { kernels::pairwise_sq_dists(A, A, kernels::Exec::Parallel); });
        report("pairwise_sq_dists 1500x25", s, p);
    }
    {
        // forest training is parallel across trees; compare 1 thread vs all
        const DenseMatrix X = random_matrix(400, 50, 4);
        std::vector<int> y(400);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = X.at(i, 0) > 0 ? 1 : 0;
        learn::ForestParams params;
        params.n_trees = 100;
#ifdef _OPENMP
        const int max_threads = omp_get_max_threads();
        omp_set_num_threads(1);
        const double s = time_ms([&] { learn::rf_train(X, y, params); }, 1);
        omp_set_num_threads(max_threads);
        const double p = time_ms([&] { learn::rf_train(X, y, params); }, 1);
        report("rf_train 400x50x100t", s, p);
#else
        const double s = time_ms([&] { learn::rf_train(X, y, params); }, 1);
        report("rf_train 400x50x100t", s, s);
#endif
    }
    return 0;
}
