#ifndef SCRIBE_KERNELS_HPP
#define SCRIBE_KERNELS_HPP

#include <vector>

#include "scribe/matrix.hpp"

namespace scribe::kernels {

/// Execution mode for the data-parallel kernels. Parallel runs use OpenMP
/// when compiled in; both modes produce bit-identical results because
/// every output element is owned by one iteration and reductions combine
/// fixed-size blocks in a fixed order, never in thread order.
enum class Exec { Serial, Parallel };

/// K(i, j) = exp(-gamma * ||X_i - X_j||^2), full symmetric matrix.
DenseMatrix rbf_kernel_matrix(const DenseMatrix& X, double gamma,
                              Exec exec = Exec::Parallel);

/// K(i, j) = exp(-gamma * ||A_i - B_j||^2) for A rows vs B rows.
DenseMatrix rbf_cross_kernel(const DenseMatrix& A, const DenseMatrix& B, double gamma,
                             Exec exec = Exec::Parallel);

/// D(i, j) = ||A_i - B_j||^2.
DenseMatrix pairwise_sq_dists(const DenseMatrix& A, const DenseMatrix& B,
                              Exec exec = Exec::Parallel);

/// Per-column means via fixed-block accumulation.
std::vector<double> column_means(const DenseMatrix& X, Exec exec = Exec::Parallel);

/// Sample covariance (denominator n - 1) of mean-centered rows, blocked.
DenseMatrix covariance(const DenseMatrix& X, const std::vector<double>& mean,
                       Exec exec = Exec::Parallel);

/// Variance of all entries of X (population), used for the "scale" gamma.
double total_variance(const DenseMatrix& X);

} // namespace scribe::kernels

#endif
