#include "scribe/kernels.hpp"

#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scribe::kernels {

namespace {

constexpr std::size_t kBlock = 256; // rows per reduction block

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

// Runs fn(i) for i in [0, n); each i owns its outputs, so the schedule
// cannot change results.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i)
        fn(i);
}

} // namespace

DenseMatrix rbf_kernel_matrix(const DenseMatrix& X, double gamma, Exec exec) {
    const std::size_t n = X.rows;
    DenseMatrix K(n, n);
    for_each_index(n, exec, [&](std::size_t i) {
        K.at(i, i) = 1.0;
        for (std::size_t j = 0; j < i; ++j)
            K.at(i, j) = std::exp(-gamma * sq_dist(X.row(i), X.row(j)));
    });
    // mirror the lower triangle
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            K.at(j, i) = K.at(i, j);
    return K;
}

DenseMatrix rbf_cross_kernel(const DenseMatrix& A, const DenseMatrix& B, double gamma,
                             Exec exec) {
    DenseMatrix K(A.rows, B.rows);
    for_each_index(A.rows, exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < B.rows; ++j)
            K.at(i, j) = std::exp(-gamma * sq_dist(A.row(i), B.row(j)));
    });
    return K;
}

DenseMatrix pairwise_sq_dists(const DenseMatrix& A, const DenseMatrix& B, Exec exec) {
    DenseMatrix D(A.rows, B.rows);
    for_each_index(A.rows, exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < B.rows; ++j)
            D.at(i, j) = sq_dist(A.row(i), B.row(j));
    });
    return D;
}

std::vector<double> column_means(const DenseMatrix& X, Exec exec) {
    const std::size_t n = X.rows;
    const std::size_t d = X.cols;
    const std::size_t n_blocks = n == 0 ? 0 : (n + kBlock - 1) / kBlock;
    std::vector<double> partials(n_blocks * d, 0.0);
    for_each_index(n_blocks, exec, [&](std::size_t b) {
        double* acc = partials.data() + b * d;
        const std::size_t end = std::min(n, (b + 1) * kBlock);
        for (std::size_t i = b * kBlock; i < end; ++i) {
            const auto row = X.row(i);
            for (std::size_t k = 0; k < d; ++k)
                acc[k] += row[k];
        }
    });
    std::vector<double> mean(d, 0.0);
    for (std::size_t b = 0; b < n_blocks; ++b)
        for (std::size_t k = 0; k < d; ++k)
            mean[k] += partials[b * d + k];
    if (n > 0)
        for (std::size_t k = 0; k < d; ++k)
            mean[k] /= static_cast<double>(n);
    return mean;
}

DenseMatrix covariance(const DenseMatrix& X, const std::vector<double>& mean,
                       Exec exec) {
    const std::size_t n = X.rows;
    const std::size_t d = X.cols;
    const std::size_t n_blocks = n == 0 ? 0 : (n + kBlock - 1) / kBlock;
    // per-block upper-triangular accumulators, combined in block order
    const std::size_t tri = d * (d + 1) / 2;
    std::vector<double> partials(n_blocks * tri, 0.0);
    for_each_index(n_blocks, exec, [&](std::size_t b) {
        double* acc = partials.data() + b * tri;
        std::vector<double> centered(d);
        const std::size_t end = std::min(n, (b + 1) * kBlock);
        for (std::size_t i = b * kBlock; i < end; ++i) {
            const auto row = X.row(i);
            for (std::size_t k = 0; k < d; ++k)
                centered[k] = row[k] - mean[k];
            std::size_t t = 0;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = r; c < d; ++c, ++t)
                    acc[t] += centered[r] * centered[c];
        }
    });
    DenseMatrix C(d, d);
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    std::size_t t = 0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c, ++t) {
            double s = 0.0;
            for (std::size_t b = 0; b < n_blocks; ++b)
                s += partials[b * tri + t];
            C.at(r, c) = s / denom;
            C.at(c, r) = C.at(r, c);
        }
    }
    return C;
}

double total_variance(const DenseMatrix& X) {
    const std::size_t total = X.data.size();
    if (total == 0)
        return 0.0;
    double mean = 0.0;
    for (double v : X.data)
        mean += v;
    mean /= static_cast<double>(total);
    double var = 0.0;
    for (double v : X.data)
        var += (v - mean) * (v - mean);
    return var / static_cast<double>(total);
}

} // namespace scribe::kernels
