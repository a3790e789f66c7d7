#ifndef SCRIBE_REDUCE_HPP
#define SCRIBE_REDUCE_HPP

#include <cstdint>
#include <vector>

#include "scribe/matrix.hpp"

namespace scribe {

struct PcaModel {
    std::vector<double> mean;       // per-feature
    DenseMatrix components;         // k x d, rows orthonormal
    std::vector<double> explained_variance; // k, non-increasing
};

struct PcaResult {
    PcaModel model;
    DenseMatrix scores; // n x k
};

/// Mean-center and project onto the top-k principal axes (covariance
/// eigendecomposition via cyclic Jacobi). Each component's sign is fixed
/// so its largest-magnitude loading is positive. Throws DegenerateInput
/// when n < 2 or k is out of range.
PcaResult pca_fit_transform(const DenseMatrix& X, std::size_t k = 25);

/// Eigendecomposition of a symmetric matrix: pairs sorted by eigenvalue
/// descending. Exposed for the covariance route; values in .first,
/// row-vectors in .second.
std::pair<std::vector<double>, DenseMatrix> symmetric_eigen(const DenseMatrix& S);

enum class EmbedMethod { Pca2d, Neighbor };

/// 2-D projection of a score matrix. Pca2d copies the first two columns
/// (padding with zero when k == 1). Neighbor runs a seeded k-NN
/// attraction/repulsion layout (15 neighbors, 500 iterations, learning
/// rate 1.0 with linear decay, 5 negative samples per edge), initialized
/// from the first two input columns; deterministic given (input, seed).
DenseMatrix embed_2d(const DenseMatrix& scores, EmbedMethod method,
                     std::uint64_t seed);

} // namespace scribe

#endif
