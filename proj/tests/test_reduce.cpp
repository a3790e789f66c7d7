#include "doctest.h"

#include <cmath>
#include <algorithm>
#include <random>

#include "scribe/errors.hpp"
#include "scribe/kernels.hpp"
#include "scribe/reduce.hpp"
#include "support/pca_oracle.hpp"
#include "support/silhouette.hpp"

using namespace scribe;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    DenseMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

std::vector<std::vector<double>> to_rows(const DenseMatrix& m) {
    std::vector<std::vector<double>> rows(m.rows, std::vector<double>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

DenseMatrix random_matrix(std::size_t n, std::size_t d, std::mt19937_64& gen) {
    DenseMatrix m(n, d);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (double& v : m.data)
        v = dist(gen);
    return m;
}

} // namespace

TEST_CASE("points on a line: one component captures all variance") {
    const DenseMatrix X = from_rows({{0, 0}, {1, 1}, {2, 2}});
    const PcaResult res = pca_fit_transform(X, 1);
    REQUIRE(res.model.explained_variance.size() == 1);
    // total variance = var(x) + var(y) = 1 + 1; first component carries it all
    CHECK(res.model.explained_variance[0] == doctest::Approx(2.0));
    const double s = std::sqrt(2.0);
    CHECK(std::abs(res.scores.at(0, 0)) == doctest::Approx(s));
    CHECK(res.scores.at(1, 0) == doctest::Approx(0.0));
    CHECK(std::abs(res.scores.at(2, 0)) == doctest::Approx(s));
    CHECK(res.scores.at(0, 0) == doctest::Approx(-res.scores.at(2, 0)));
    // sign convention makes the largest loading positive
    CHECK(res.model.components.at(0, 0) == doctest::Approx(1.0 / s));
    CHECK(res.model.components.at(0, 1) == doctest::Approx(1.0 / s));
}

TEST_CASE("full-rank reconstruction") {
    std::mt19937_64 gen(3);
    const DenseMatrix X = random_matrix(8, 5, gen);
    const std::size_t k = 5; // min(n-1, d) = 5, full rank almost surely
    const PcaResult res = pca_fit_transform(X, k);
    for (std::size_t i = 0; i < X.rows; ++i) {
        for (std::size_t j = 0; j < X.cols; ++j) {
            double rec = res.model.mean[j];
            for (std::size_t c = 0; c < k; ++c)
                rec += res.scores.at(i, c) * res.model.components.at(c, j);
            CHECK(rec == doctest::Approx(X.at(i, j)).epsilon(1e-8));
        }
    }
}

TEST_CASE("row duplication keeps the fitted axes") {
    std::mt19937_64 gen(5);
    const DenseMatrix X = random_matrix(6, 4, gen);
    DenseMatrix XX(12, 4);
    for (std::size_t i = 0; i < 6; ++i) {
        std::ranges::copy(X.row(i), XX.row(2 * i).begin());
        std::ranges::copy(X.row(i), XX.row(2 * i + 1).begin());
    }
    const PcaResult a = pca_fit_transform(X, 3);
    const PcaResult b = pca_fit_transform(XX, 3);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(a.model.components.at(c, j) ==
                  doctest::Approx(b.model.components.at(c, j)).epsilon(1e-6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(b.scores.at(2 * i, c) == doctest::Approx(a.scores.at(i, c)));
            CHECK(b.scores.at(2 * i + 1, c) == doctest::Approx(a.scores.at(i, c)));
        }
}

TEST_CASE("scores match the independent covariance eigensolver oracle") {
    std::mt19937_64 gen(9);
    for (int t = 0; t < 10; ++t) {
        const DenseMatrix X = random_matrix(10, 6, gen);
        const std::size_t k = 4;
        const PcaResult res = pca_fit_transform(X, k);
        const auto oracle = testsupport::oracle_pca_scores(to_rows(X), k);
        for (std::size_t c = 0; c < k; ++c) {
            // align per-component sign on the largest-|score| row
            std::size_t arg = 0;
            for (std::size_t i = 0; i < X.rows; ++i)
                if (std::abs(oracle[i][c]) > std::abs(oracle[arg][c]))
                    arg = i;
            const double flip =
                oracle[arg][c] * res.scores.at(arg, c) < 0 ? -1.0 : 1.0;
            for (std::size_t i = 0; i < X.rows; ++i)
                CHECK(res.scores.at(i, c) ==
                      doctest::Approx(flip * oracle[i][c]).epsilon(1e-6));
        }
    }
}

TEST_CASE("explained variance: sorted, matches score variance, sums to total") {
    std::mt19937_64 gen(13);
    const DenseMatrix X = random_matrix(12, 5, gen);
    const std::size_t k = 5;
    const PcaResult res = pca_fit_transform(X, k);
    double prev = 1e300;
    for (double v : res.model.explained_variance) {
        CHECK(v <= prev + 1e-12);
        CHECK(v >= 0.0);
        prev = v;
    }
    // per-component score variance equals explained variance
    for (std::size_t c = 0; c < k; ++c) {
        double mean = 0;
        for (std::size_t i = 0; i < X.rows; ++i)
            mean += res.scores.at(i, c);
        mean /= static_cast<double>(X.rows);
        double var = 0;
        for (std::size_t i = 0; i < X.rows; ++i)
            var += (res.scores.at(i, c) - mean) * (res.scores.at(i, c) - mean);
        var /= static_cast<double>(X.rows - 1);
        CHECK(var == doctest::Approx(res.model.explained_variance[c]).epsilon(1e-8));
    }
    // total variance conservation at full k
    double total_ev = 0;
    for (double v : res.model.explained_variance)
        total_ev += v;
    double total_var = 0;
    const auto mean = kernels::column_means(X);
    for (std::size_t j = 0; j < X.cols; ++j) {
        double var = 0;
        for (std::size_t i = 0; i < X.rows; ++i)
            var += (X.at(i, j) - mean[j]) * (X.at(i, j) - mean[j]);
        total_var += var / static_cast<double>(X.rows - 1);
    }
    CHECK(total_ev == doctest::Approx(total_var).epsilon(1e-6));
}

TEST_CASE("orthonormal components") {
    std::mt19937_64 gen(17);
    const DenseMatrix X = random_matrix(9, 6, gen);
    const PcaResult res = pca_fit_transform(X, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            double dot = 0;
            for (std::size_t j = 0; j < 6; ++j)
                dot += res.model.components.at(a, j) * res.model.components.at(b, j);
            CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-8));
        }
}

TEST_CASE("degenerate inputs rejected") {
    CHECK_THROWS_AS(pca_fit_transform(DenseMatrix(1, 3), 1), DegenerateInput);
    CHECK_THROWS_AS(pca_fit_transform(DenseMatrix(4, 3), 4), DegenerateInput);
    CHECK_THROWS_AS(pca_fit_transform(DenseMatrix(4, 3), 0), DegenerateInput);
    DenseMatrix bad(3, 2);
    bad.at(0, 0) = std::nan("");
    CHECK_THROWS_AS(pca_fit_transform(bad, 1), NonFiniteInput);
}

TEST_CASE("pca2d embedding copies the leading score columns") {
    std::mt19937_64 gen(21);
    const DenseMatrix S = random_matrix(7, 2, gen);
    const DenseMatrix E = embed_2d(S, EmbedMethod::Pca2d, 42);
    CHECK(E == S);

    DenseMatrix S1 = random_matrix(5, 1, gen);
    const DenseMatrix E1 = embed_2d(S1, EmbedMethod::Pca2d, 42);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(E1.at(i, 0) == S1.at(i, 0));
        CHECK(E1.at(i, 1) == 0.0);
    }
}

TEST_CASE("pca2d is permutation equivariant") {
    std::mt19937_64 gen(27);
    const DenseMatrix S = random_matrix(8, 4, gen);
    DenseMatrix reversed(8, 4);
    for (std::size_t i = 0; i < 8; ++i)
        std::ranges::copy(S.row(7 - i), reversed.row(i).begin());
    const DenseMatrix E = embed_2d(S, EmbedMethod::Pca2d, 1);
    const DenseMatrix ER = embed_2d(reversed, EmbedMethod::Pca2d, 1);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(E.at(7 - i, 0) == ER.at(i, 0));
        CHECK(E.at(7 - i, 1) == ER.at(i, 1));
    }
}

TEST_CASE("neighbor embedding: deterministic per seed, finite, separates clusters") {
    // two Gaussian clusters 10 sigma apart in 5-D
    std::mt19937_64 gen(33);
    std::normal_distribution<double> noise(0.0, 1.0);
    const std::size_t per = 20;
    DenseMatrix S(2 * per, 5);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 2 * per; ++i) {
        const bool second = i >= per;
        labels.push_back(second ? "b" : "a");
        for (std::size_t j = 0; j < 5; ++j)
            S.at(i, j) = noise(gen) + (second && j == 0 ? 10.0 : 0.0);
    }

    const DenseMatrix E1 = embed_2d(S, EmbedMethod::Neighbor, 7);
    const DenseMatrix E2 = embed_2d(S, EmbedMethod::Neighbor, 7);
    CHECK(E1 == E2); // bit-identical across runs
    const DenseMatrix E3 = embed_2d(S, EmbedMethod::Neighbor, 8);
    CHECK(E1 != E3); // different seed moves coordinates

    for (double v : E1.data)
        CHECK(std::isfinite(v));

    CHECK(testsupport::silhouette(to_rows(E1), labels) > 0.5);
    CHECK(testsupport::silhouette(to_rows(embed_2d(S, EmbedMethod::Pca2d, 7)), labels) >
          0.5);

    CHECK_THROWS_AS(embed_2d(DenseMatrix(2, 3), EmbedMethod::Neighbor, 1),
                    DegenerateInput);
}
