#include "scribe/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scribe/errors.hpp"
#include "scribe/kernels.hpp"
#include "scribe/rng.hpp"

namespace scribe {

std::pair<std::vector<double>, DenseMatrix> symmetric_eigen(const DenseMatrix& S) {
    const std::size_t d = S.rows;
    DenseMatrix A = S;
    DenseMatrix V(d, d);
    for (std::size_t i = 0; i < d; ++i)
        V.at(i, i) = 1.0;

    // cyclic Jacobi sweeps
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q)
                off += A.at(p, q) * A.at(p, q);
        if (off < 1e-22)
            break;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = A.at(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                const double app = A.at(p, p);
                const double aqq = A.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = A.at(k, p);
                    const double akq = A.at(k, q);
                    A.at(k, p) = c * akp - s * akq;
                    A.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = A.at(p, k);
                    const double aqk = A.at(q, k);
                    A.at(p, k) = c * apk - s * aqk;
                    A.at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = V.at(k, p);
                    const double vkq = V.at(k, q);
                    V.at(k, p) = c * vkp - s * vkq;
                    V.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
        return A.at(a, a) > A.at(b, b);
    });
    std::vector<double> values(d);
    DenseMatrix vectors(d, d); // row i = eigenvector for values[i]
    for (std::size_t i = 0; i < d; ++i) {
        values[i] = A.at(order[i], order[i]);
        for (std::size_t k = 0; k < d; ++k)
            vectors.at(i, k) = V.at(k, order[i]);
    }
    return {std::move(values), std::move(vectors)};
}

PcaResult pca_fit_transform(const DenseMatrix& X, std::size_t k) {
    const std::size_t n = X.rows;
    const std::size_t d = X.cols;
    if (n < 2)
        throw DegenerateInput("PCA needs at least 2 rows, got " + std::to_string(n));
    if (k < 1 || k > std::min(n - 1, d))
        throw DegenerateInput("PCA k=" + std::to_string(k) + " out of range for " +
                              std::to_string(n) + "x" + std::to_string(d));
    for (double v : X.data)
        if (!std::isfinite(v))
            throw NonFiniteInput("PCA input contains non-finite values");

    PcaResult res;
    res.model.mean = kernels::column_means(X);
    const DenseMatrix C = kernels::covariance(X, res.model.mean);
    auto [values, vectors] = symmetric_eigen(C);

    res.model.components = DenseMatrix(k, d);
    res.model.explained_variance.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        res.model.explained_variance[i] = std::max(values[i], 0.0);
        // sign convention: largest-|loading| positive
        std::size_t arg = 0;
        for (std::size_t j = 1; j < d; ++j)
            if (std::abs(vectors.at(i, j)) > std::abs(vectors.at(i, arg)))
                arg = j;
        const double flip = vectors.at(i, arg) < 0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < d; ++j)
            res.model.components.at(i, j) = flip * vectors.at(i, j);
    }

    res.scores = DenseMatrix(n, k);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = X.row(r);
        for (std::size_t i = 0; i < k; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                s += (row[j] - res.model.mean[j]) * res.model.components.at(i, j);
            res.scores.at(r, i) = s;
        }
    }
    return res;
}

namespace {

DenseMatrix embed_pca2d(const DenseMatrix& scores) {
    DenseMatrix out(scores.rows, 2);
    for (std::size_t i = 0; i < scores.rows; ++i) {
        out.at(i, 0) = scores.cols >= 1 ? scores.at(i, 0) : 0.0;
        out.at(i, 1) = scores.cols >= 2 ? scores.at(i, 1) : 0.0;
    }
    return out;
}

struct Edge {
    std::size_t a;
    std::size_t b;
    double weight;
};

DenseMatrix embed_neighbor(const DenseMatrix& scores, std::uint64_t seed) {
    const std::size_t n = scores.rows;
    if (n < 3)
        throw DegenerateInput("neighbor embedding needs at least 3 rows");

    const std::size_t k = std::min<std::size_t>(15, n - 1);
    const DenseMatrix D = kernels::pairwise_sq_dists(scores, scores);

    // directed affinities over each row's k nearest neighbors, scaled by
    // the row's mean neighbor distance
    std::vector<std::vector<std::pair<std::size_t, double>>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> idx;
        idx.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                idx.push_back(j);
        std::ranges::stable_sort(idx, [&](std::size_t a, std::size_t b) {
            if (D.at(i, a) != D.at(i, b))
                return D.at(i, a) < D.at(i, b);
            return a < b;
        });
        idx.resize(k);
        double mean_d = 0.0;
        for (std::size_t j : idx)
            mean_d += std::sqrt(D.at(i, j));
        mean_d = std::max(mean_d / static_cast<double>(k), 1e-12);
        for (std::size_t j : idx) {
            const double a = std::exp(-std::sqrt(D.at(i, j)) / mean_d);
            nbrs[i].push_back({j, a});
        }
    }

    // symmetrize: w = a + a' - a * a'
    std::vector<Edge> edges;
    {
        std::vector<std::vector<std::pair<std::size_t, double>>> fwd(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& [j, a] : nbrs[i]) {
                const std::size_t lo = std::min(i, j);
                const std::size_t hi = std::max(i, j);
                auto& bucket = fwd[lo];
                auto it = std::find_if(bucket.begin(), bucket.end(),
                                       [&](const auto& p) { return p.first == hi; });
                if (it == bucket.end())
                    bucket.push_back({hi, a});
                else
                    it->second = it->second + a - it->second * a;
            }
        }
        for (std::size_t lo = 0; lo < n; ++lo) {
            std::ranges::sort(fwd[lo],
                              [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [hi, w] : fwd[lo])
                edges.push_back({lo, hi, w});
        }
    }

    // init from the first two input columns, rescaled to +/-10
    DenseMatrix Y = embed_pca2d(scores);
    double max_abs = 1e-12;
    for (double v : Y.data)
        max_abs = std::max(max_abs, std::abs(v));
    for (double& v : Y.data)
        v *= 10.0 / max_abs;

    rng::Engine eng(rng::mix(seed, "neighbor-embed"));
    constexpr int kIters = 500;
    constexpr int kNegatives = 5;
    auto clip = [](double v) { return std::clamp(v, -4.0, 4.0); };

    for (int it = 0; it < kIters; ++it) {
        const double lr = 1.0 * (1.0 - static_cast<double>(it) / kIters);
        for (const Edge& e : edges) {
            double dx = Y.at(e.a, 0) - Y.at(e.b, 0);
            double dy = Y.at(e.a, 1) - Y.at(e.b, 1);
            double r2 = dx * dx + dy * dy;
            // attraction (low-dim kernel 1/(1+r^2))
            double g = -2.0 * e.weight / (1.0 + r2);
            const double ax = clip(g * dx) * lr;
            const double ay = clip(g * dy) * lr;
            Y.at(e.a, 0) += ax;
            Y.at(e.a, 1) += ay;
            Y.at(e.b, 0) -= ax;
            Y.at(e.b, 1) -= ay;
            // repulsion from sampled non-neighbors, head end only
            for (int s = 0; s < kNegatives; ++s) {
                const std::size_t m = static_cast<std::size_t>(eng.below(n));
                if (m == e.a || m == e.b)
                    continue;
                dx = Y.at(e.a, 0) - Y.at(m, 0);
                dy = Y.at(e.a, 1) - Y.at(m, 1);
                r2 = dx * dx + dy * dy;
                g = 2.0 / ((0.001 + r2) * (1.0 + r2));
                Y.at(e.a, 0) += clip(g * dx) * lr;
                Y.at(e.a, 1) += clip(g * dy) * lr;
            }
        }
    }
    for (double v : Y.data)
        if (!std::isfinite(v))
            throw AnalysisError("neighbor embedding diverged");
    return Y;
}

} // namespace

DenseMatrix embed_2d(const DenseMatrix& scores, EmbedMethod method,
                     std::uint64_t seed) {
    if (scores.rows == 0)
        throw DegenerateInput("empty score matrix");
    if (method == EmbedMethod::Pca2d)
        return embed_pca2d(scores);
    return embed_neighbor(scores, seed);
}

} // namespace scribe
