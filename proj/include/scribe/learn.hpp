#ifndef SCRIBE_LEARN_HPP
#define SCRIBE_LEARN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scribe/matrix.hpp"

namespace scribe::learn {

// ---------------------------------------------------------------------------
// One-class SVM (RBF kernel), trained by sequential minimal optimization
// on the dual: minimize 1/2 a'Ka  s.t.  0 <= a_i <= 1/(nu*n), sum a = 1.

struct OcsvmParams {
    double nu = 0.1;
    /// gamma <= 0 means "scale": 1 / (d * var(X)).
    double gamma = 0.0;
    double tol = 1e-4;
    std::size_t max_iter = 10000;
};

struct OcsvmModel {
    DenseMatrix support_vectors; // rows with dual coefficient > 0
    std::vector<double> dual_coefs;
    double rho = 0.0;
    double gamma = 0.0;
    double nu = 0.0;

    nlohmann::json to_json() const;
    static OcsvmModel from_json(const nlohmann::json& j);
};

OcsvmModel ocsvm_train(const DenseMatrix& X, const OcsvmParams& params = {});

struct OcsvmPrediction {
    std::vector<int> labels;            // +1 inlier, -1 outlier (ties inlier)
    std::vector<double> decision_values;
};

OcsvmPrediction ocsvm_predict(const OcsvmModel& model, const DenseMatrix& X);

// ---------------------------------------------------------------------------
// Random forest (binary, Gini) with Mean-Decrease-in-Impurity importances.

struct ForestParams {
    std::size_t n_trees = 200;
    std::optional<std::size_t> max_depth; // unlimited when unset
    std::size_t min_samples_split = 2;
    /// 0 means ceil(sqrt(d)).
    std::size_t features_per_split = 0;
    std::uint64_t seed = 42;
};

struct TreeNode {
    // internal node: feature >= 0; leaf: feature == -1
    int feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;
    std::size_t n_samples = 0;
    std::size_t counts[2] = {0, 0};
    int left = -1;
    int right = -1;
};

struct Tree {
    std::vector<TreeNode> nodes; // node 0 is the root
};

struct ForestModel {
    std::vector<Tree> trees;
    ForestParams params;
    std::size_t n_features = 0;

    nlohmann::json to_json() const;
    static ForestModel from_json(const nlohmann::json& j);
};

/// y entries must be 0 or 1, both present. Trees grow on seeded bootstrap
/// samples; per-tree RNG streams derive from the master seed, so results
/// do not depend on thread count.
ForestModel rf_train(const DenseMatrix& X, const std::vector<int>& y,
                     const ForestParams& params = {});

std::vector<int> rf_predict(const ForestModel& forest, const DenseMatrix& X);

/// Weighted impurity decrease summed per feature over all splits, averaged
/// over trees, normalized to sum to 1. Never-split features get exactly 0.
std::vector<double> rf_mdi(const ForestModel& forest);

// ---------------------------------------------------------------------------
// k-nearest-neighbour classification (Euclidean).

/// Majority label among the k nearest training rows; ties break by
/// smallest summed distance, then by first appearance in train_y.
std::string knn_classify(const DenseMatrix& train_X,
                         const std::vector<std::string>& train_y,
                         std::span<const double> x, std::size_t k = 1);

} // namespace scribe::learn

#endif
