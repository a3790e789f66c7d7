// Independent PCA route for testing: naive covariance plus a classical
// (max-off-diagonal) Jacobi eigensolver, written separately from the
// library's cyclic-sweep implementation.
#ifndef TESTS_SUPPORT_PCA_ORACLE_HPP
#define TESTS_SUPPORT_PCA_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace testsupport {

struct OracleEigen {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

inline std::vector<std::vector<double>> oracle_covariance(
    const std::vector<std::vector<double>>& X) {
    const std::size_t n = X.size();
    const std::size_t d = X[0].size();
    std::vector<double> mean(d, 0.0);
    for (const auto& row : X)
        for (std::size_t j = 0; j < d; ++j)
            mean[j] += row[j];
    for (double& m : mean)
        m /= static_cast<double>(n);
    std::vector<std::vector<double>> C(d, std::vector<double>(d, 0.0));
    for (const auto& row : X)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                C[a][b] += (row[a] - mean[a]) * (row[b] - mean[b]);
    for (auto& r : C)
        for (double& v : r)
            v /= static_cast<double>(n - 1);
    return C;
}

inline OracleEigen oracle_eigen(std::vector<std::vector<double>> A) {
    const std::size_t d = A.size();
    std::vector<std::vector<double>> V(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        V[i][i] = 1.0;

    for (int iter = 0; iter < 100000; ++iter) {
        // largest off-diagonal element
        std::size_t p = 0, q = 1;
        double big = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (std::abs(A[i][j]) > big) {
                    big = std::abs(A[i][j]);
                    p = i;
                    q = j;
                }
        if (big < 1e-13)
            break;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < d; ++k) {
            const double akp = A[k][p];
            const double akq = A[k][q];
            A[k][p] = c * akp - s * akq;
            A[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < d; ++k) {
            const double apk = A[p][k];
            const double aqk = A[q][k];
            A[p][k] = c * apk - s * aqk;
            A[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < d; ++k) {
            const double vkp = V[k][p];
            const double vkq = V[k][q];
            V[k][p] = c * vkp - s * vkq;
            V[k][q] = s * vkp + c * vkq;
        }
    }

    OracleEigen out;
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i)
        order[i] = i;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (A[order[j]][order[j]] > A[order[i]][order[i]])
                std::swap(order[i], order[j]);
    for (std::size_t i = 0; i < d; ++i) {
        out.values.push_back(A[order[i]][order[i]]);
        std::vector<double> vec(d);
        for (std::size_t k = 0; k < d; ++k)
            vec[k] = V[k][order[i]];
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

/// Scores of X projected on the oracle's top-k axes (mean-centered).
inline std::vector<std::vector<double>> oracle_pca_scores(
    const std::vector<std::vector<double>>& X, std::size_t k) {
    const std::size_t n = X.size();
    const std::size_t d = X[0].size();
    std::vector<double> mean(d, 0.0);
    for (const auto& row : X)
        for (std::size_t j = 0; j < d; ++j)
            mean[j] += row[j];
    for (double& m : mean)
        m /= static_cast<double>(n);
    const OracleEigen eig = oracle_eigen(oracle_covariance(X));
    std::vector<std::vector<double>> scores(n, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j)
                scores[r][i] += (X[r][j] - mean[j]) * eig.vectors[i][j];
    return scores;
}

} // namespace testsupport

#endif
