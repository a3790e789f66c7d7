#include "doctest.h"

#include <cmath>
#include <random>

#include "scribe/errors.hpp"
#include "scribe/learn.hpp"
#include "support/ocsvm_oracle.hpp"

using namespace scribe;
using namespace scribe::learn;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    DenseMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("ocsvm: degenerate cluster of identical points") {
    DenseMatrix X(10, 3);
    for (std::size_t i = 0; i < 10; ++i) {
        X.at(i, 0) = 1.0;
        X.at(i, 1) = 2.0;
        X.at(i, 2) = 3.0;
    }
    OcsvmParams params;
    params.gamma = 1.0;
    const OcsvmModel model = ocsvm_train(X, params);

    DenseMatrix queries(2, 3);
    queries.at(0, 0) = 1.0;
    queries.at(0, 1) = 2.0;
    queries.at(0, 2) = 3.0;
    queries.at(1, 0) = 101.0; // p + 100 * e1
    queries.at(1, 1) = 2.0;
    queries.at(1, 2) = 3.0;
    const OcsvmPrediction pred = ocsvm_predict(model, queries);
    CHECK(pred.labels[0] == 1);
    CHECK(pred.labels[1] == -1);
    CHECK(pred.decision_values[1] < pred.decision_values[0]);
}

TEST_CASE("ocsvm: dual coefficients sum to 1 and respect the box") {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(30, 4);
    for (double& v : X.data)
        v = noise(gen);
    OcsvmParams params;
    params.nu = 0.3;
    const OcsvmModel model = ocsvm_train(X, params);
    const double C = 1.0 / (0.3 * 30);
    double sum = 0;
    for (double a : model.dual_coefs) {
        CHECK(a >= 0.0);
        CHECK(a <= C + 1e-9);
        sum += a;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("ocsvm matches the brute-force dual-grid oracle") {
    // fixed set of <= 4-point 1-D instances
    const std::vector<std::vector<std::vector<double>>> instances = {
        {{0.0}, {0.1}, {0.2}},
        {{0.0}, {1.0}},
        {{-0.4}, {0.0}, {0.5}, {0.6}},
        {{0.0}, {0.05}, {1.0}},
        {{-1.0}, {-0.9}, {0.9}, {1.0}},
    };
    const std::vector<double> queries = {-1.5, -0.3, 0.0, 0.15, 0.7, 2.0};
    for (const auto& inst : instances) {
        const double nu = 0.5, gamma = 1.0;
        const auto grid = testsupport::ocsvm_grid_solve(inst, nu, gamma);
        OcsvmParams params;
        params.nu = nu;
        params.gamma = gamma;
        const OcsvmModel model = ocsvm_train(from_rows(inst), params);

        for (double q : queries) {
            DenseMatrix Q(1, 1);
            Q.at(0, 0) = q;
            const double dec = ocsvm_predict(model, Q).decision_values[0];
            const double oracle_dec =
                testsupport::ocsvm_grid_decision(inst, grid, nu, gamma, {q});
            CHECK(std::abs(dec - oracle_dec) <= 1e-2);
        }
    }
}

TEST_CASE("ocsvm: spec 3-point instance dual coefficients vs grid") {
    const std::vector<std::vector<double>> inst = {{0.0}, {0.1}, {0.2}};
    const auto grid = testsupport::ocsvm_grid_solve(inst, 0.5, 1.0);
    OcsvmParams params;
    params.nu = 0.5;
    params.gamma = 1.0;
    const OcsvmModel model = ocsvm_train(from_rows(inst), params);
    // the model keeps only positive coefficients; rebuild the full vector
    std::vector<double> full(3, 0.0);
    for (std::size_t s = 0; s < model.support_vectors.rows; ++s)
        for (std::size_t j = 0; j < 3; ++j)
            if (model.support_vectors.at(s, 0) == inst[j][0])
                full[j] = model.dual_coefs[s];
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(full[i] - grid.alpha[i]) <= 1e-2);
}

TEST_CASE("ocsvm nu-property on gaussian data") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> noise(0.0, 1.0);
        const std::size_t n = 200;
        DenseMatrix X(n, 2);
        for (double& v : X.data)
            v = noise(gen);
        OcsvmParams params;
        params.nu = 0.1;
        const OcsvmModel model = ocsvm_train(X, params);
        const OcsvmPrediction pred = ocsvm_predict(model, X);
        std::size_t outliers = 0;
        for (int label : pred.labels)
            outliers += label == -1 ? 1 : 0;
        const double fraction = static_cast<double>(outliers) / n;
        CHECK(fraction <= 0.1 + 2.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("ocsvm predict: labels follow decision sign, far points are outliers") {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(40, 2);
    for (double& v : X.data)
        v = noise(gen);
    const OcsvmModel model = ocsvm_train(X, OcsvmParams{});
    DenseMatrix Q(3, 2);
    Q.at(0, 0) = 0.1;
    Q.at(1, 0) = 1e6; // kernel vanishes: decision -> -rho < 0
    Q.at(2, 1) = -1e6;
    const OcsvmPrediction pred = ocsvm_predict(model, Q);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(pred.labels[i] == (pred.decision_values[i] >= 0 ? 1 : -1));
    CHECK(pred.labels[1] == -1);
    CHECK(pred.decision_values[1] == doctest::Approx(-model.rho));
    CHECK(model.rho > 0.0);

    DenseMatrix wrong(1, 3);
    CHECK_THROWS_AS(ocsvm_predict(model, wrong), DimensionMismatch);
}

TEST_CASE("ocsvm rejects bad inputs") {
    DenseMatrix X(5, 2);
    OcsvmParams params;
    params.nu = 0.0;
    CHECK_THROWS_AS(ocsvm_train(X, params), BadHyperparameter);
    params.nu = 1.5;
    CHECK_THROWS_AS(ocsvm_train(X, params), BadHyperparameter);
    DenseMatrix bad(3, 1);
    bad.at(1, 0) = std::nan("");
    CHECK_THROWS_AS(ocsvm_train(bad, OcsvmParams{}), NonFiniteInput);
    CHECK_THROWS_AS(ocsvm_train(DenseMatrix(1, 2), OcsvmParams{}), DegenerateInput);
}

TEST_CASE("ocsvm model serialization round trip") {
    std::mt19937_64 gen(13);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(15, 3);
    for (double& v : X.data)
        v = noise(gen);
    const OcsvmModel model = ocsvm_train(X, OcsvmParams{});
    const OcsvmModel back = OcsvmModel::from_json(model.to_json());
    CHECK(back.support_vectors == model.support_vectors);
    CHECK(back.dual_coefs == model.dual_coefs);
    CHECK(back.rho == model.rho);
    const OcsvmPrediction a = ocsvm_predict(model, X);
    const OcsvmPrediction b = ocsvm_predict(back, X);
    CHECK(a.decision_values == b.decision_values);
}

// ---------------------------------------------------------------------------

TEST_CASE("forest: perfect separator with constant padding") {
    DenseMatrix X(20, 10);
    std::vector<int> y(20);
    for (std::size_t i = 0; i < 20; ++i) {
        y[i] = i < 10 ? 0 : 1;
        X.at(i, 4) = y[i] == 1 ? 1.0 : -1.0; // feature 4 separates
        for (std::size_t j = 0; j < 10; ++j)
            if (j != 4)
                X.at(i, j) = 0.5; // constants
    }
    ForestParams params;
    params.n_trees = 50;
    const ForestModel forest = rf_train(X, y, params);
    CHECK(rf_predict(forest, X) == y);

    const std::vector<double> mdi = rf_mdi(forest);
    double sum = 0;
    for (double v : mdi)
        sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mdi[4] >= 0.95);
    for (std::size_t j = 0; j < 10; ++j)
        if (j != 4)
            CHECK(mdi[j] == 0.0);
}

TEST_CASE("forest determinism: same seed gives identical forests") {
    std::mt19937_64 gen(17);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(30, 5);
    for (double& v : X.data)
        v = noise(gen);
    std::vector<int> y(30);
    for (std::size_t i = 0; i < 30; ++i)
        y[i] = X.at(i, 2) > 0 ? 1 : 0;
    ForestParams params;
    params.n_trees = 20;
    params.seed = 99;
    const ForestModel a = rf_train(X, y, params);
    const ForestModel b = rf_train(X, y, params);
    CHECK(a.to_json() == b.to_json());
    params.seed = 100;
    const ForestModel c = rf_train(X, y, params);
    CHECK(a.to_json() != c.to_json());
}

TEST_CASE("forest solves XOR at depth 2") {
    DenseMatrix X(8, 2);
    std::vector<int> y;
    const double pts[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < 8; ++i) {
        X.at(i, 0) = pts[i % 4][0];
        X.at(i, 1) = pts[i % 4][1];
        y.push_back(static_cast<int>(X.at(i, 0)) ^ static_cast<int>(X.at(i, 1)));
    }
    ForestParams params;
    params.n_trees = 40;
    params.features_per_split = 2;
    const ForestModel forest = rf_train(X, y, params);
    CHECK(rf_predict(forest, X) == y);
}

TEST_CASE("single class rejected") {
    DenseMatrix X(4, 2);
    CHECK_THROWS_AS(rf_train(X, {1, 1, 1, 1}, ForestParams{}), SingleClassInput);
    CHECK_THROWS_AS(rf_train(X, {0, 0, 0, 0}, ForestParams{}), SingleClassInput);
}

TEST_CASE("mdi hand-computed single stump") {
    // one stump over 4 samples, 2/2 split, pure children: parent Gini 0.5,
    // children 0 -> weighted decrease 0.5 -> importance 1 after normalizing
    ForestModel forest;
    forest.n_features = 3;
    forest.params.n_trees = 1;
    Tree tree;
    TreeNode root;
    root.feature = 1;
    root.threshold = 0.5;
    root.impurity = 0.5;
    root.n_samples = 4;
    root.counts[0] = 2;
    root.counts[1] = 2;
    root.left = 1;
    root.right = 2;
    TreeNode left;
    left.impurity = 0.0;
    left.n_samples = 2;
    left.counts[0] = 2;
    TreeNode right;
    right.impurity = 0.0;
    right.n_samples = 2;
    right.counts[1] = 2;
    tree.nodes = {root, left, right};
    forest.trees.push_back(tree);

    const std::vector<double> mdi = rf_mdi(forest);
    CHECK(mdi[0] == 0.0);
    CHECK(mdi[1] == 1.0);
    CHECK(mdi[2] == 0.0);
}

TEST_CASE("mdi permutation equivariance on deterministic forests") {
    // with all features offered at each split the drawn order cannot
    // matter; swapping two feature columns must swap their importances
    std::mt19937_64 gen(23);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(40, 3);
    for (std::size_t i = 0; i < 40; ++i) {
        X.at(i, 0) = noise(gen);
        X.at(i, 1) = i < 20 ? -1.0 + 0.01 * static_cast<double>(i) : 1.0;
        X.at(i, 2) = noise(gen) * 0.1;
    }
    std::vector<int> y(40);
    for (std::size_t i = 0; i < 40; ++i)
        y[i] = i < 20 ? 0 : 1;

    ForestParams params;
    params.n_trees = 10;
    params.features_per_split = 3;
    const std::vector<double> base = rf_mdi(rf_train(X, y, params));

    DenseMatrix swapped(40, 3);
    for (std::size_t i = 0; i < 40; ++i) {
        swapped.at(i, 0) = X.at(i, 1);
        swapped.at(i, 1) = X.at(i, 0);
        swapped.at(i, 2) = X.at(i, 2);
    }
    const std::vector<double> perm = rf_mdi(rf_train(swapped, y, params));
    CHECK(perm[0] == doctest::Approx(base[1]).epsilon(1e-9));
    CHECK(perm[1] == doctest::Approx(base[0]).epsilon(1e-9));
    CHECK(perm[2] == doctest::Approx(base[2]).epsilon(1e-9));
}

TEST_CASE("forest serialization round trip") {
    DenseMatrix X(12, 3);
    std::vector<int> y(12);
    std::mt19937_64 gen(29);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (double& v : X.data)
        v = noise(gen);
    for (std::size_t i = 0; i < 12; ++i)
        y[i] = X.at(i, 0) > 0 ? 1 : 0;
    ForestParams params;
    params.n_trees = 5;
    params.max_depth = 3;
    const ForestModel forest = rf_train(X, y, params);
    const ForestModel back = ForestModel::from_json(forest.to_json());
    CHECK(back.to_json() == forest.to_json());
    CHECK(rf_predict(back, X) == rf_predict(forest, X));
}

// ---------------------------------------------------------------------------

TEST_CASE("knn basics") {
    const DenseMatrix X = from_rows({{0.0}, {0.1}, {10.0}, {10.1}});
    const std::vector<std::string> y = {"A", "A", "B", "B"};
    const double q1[] = {0.05};
    CHECK(knn_classify(X, y, q1, 2) == "A");
    const double q2[] = {10.05};
    CHECK(knn_classify(X, y, q2, 1) == "B");
    const double q3[] = {0.1};
    CHECK(knn_classify(X, y, q3, 1) == "A"); // exact training row

    CHECK_THROWS_AS(knn_classify(DenseMatrix(0, 1), {}, q1, 1), EmptyTrainingSet);
    CHECK_THROWS_AS(knn_classify(X, y, q1, 5), BadHyperparameter);
    const double wrong[] = {1.0, 2.0};
    CHECK_THROWS_AS(knn_classify(X, y, wrong, 1), DimensionMismatch);
}

TEST_CASE("knn tie-breaks: summed distance then first-seen label") {
    // k=2 with one neighbor from each class: B is closer in sum
    const DenseMatrix X = from_rows({{0.0}, {1.0}});
    const std::vector<std::string> y = {"A", "B"};
    const double q[] = {0.6};
    CHECK(knn_classify(X, y, q, 2) == "B");
    // perfectly symmetric: first-seen label order wins
    const double mid[] = {0.5};
    CHECK(knn_classify(X, y, mid, 2) == "A");
    const std::vector<std::string> y2 = {"B", "A"};
    CHECK(knn_classify(X, y2, mid, 2) == "B");
}

TEST_CASE("knn k=1 training error is zero on distinct rows") {
    std::mt19937_64 gen(31);
    std::normal_distribution<double> noise(0.0, 1.0);
    DenseMatrix X(25, 3);
    for (double& v : X.data)
        v = noise(gen);
    std::vector<std::string> y;
    for (std::size_t i = 0; i < 25; ++i)
        y.push_back("label" + std::to_string(i % 5));
    for (std::size_t i = 0; i < 25; ++i)
        CHECK(knn_classify(X, y, X.row(i), 1) == y[i]);
}
