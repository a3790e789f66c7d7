#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "scribe/errors.hpp"
#include "scribe/learn.hpp"
#include "scribe/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scribe::learn {

namespace {

double gini(std::size_t c0, std::size_t c1) {
    const double n = static_cast<double>(c0 + c1);
    if (n == 0.0)
        return 0.0;
    const double p0 = static_cast<double>(c0) / n;
    const double p1 = static_cast<double>(c1) / n;
    return 1.0 - p0 * p0 - p1 * p1;
}

struct SplitChoice {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double decrease = -1.0; // weighted impurity decrease, node-relative
    std::vector<std::size_t> left, right;
};

struct TreeBuilder {
    const DenseMatrix& X;
    const std::vector<int>& y;
    std::size_t m; // non-constant features to evaluate per node
    std::optional<std::size_t> max_depth;
    std::size_t min_samples_split;
    rng::Engine eng;
    Tree tree;

    // Evaluates the best threshold for one feature at a node. Returns false
    // when the feature is constant across the node's samples.
    bool eval_feature(const std::vector<std::size_t>& samples, std::size_t f,
                      double node_gini, SplitChoice& best) {
        thread_local std::vector<std::pair<double, int>> vals;
        vals.clear();
        vals.reserve(samples.size());
        for (std::size_t idx : samples)
            vals.push_back({X.at(idx, f), y[idx]});
        std::ranges::sort(vals, [](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return a.second < b.second;
        });
        if (vals.front().first == vals.back().first)
            return false;

        std::size_t total1 = 0;
        for (auto& [v, label] : vals)
            total1 += static_cast<std::size_t>(label);
        const std::size_t n = vals.size();
        std::size_t left1 = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            left1 += static_cast<std::size_t>(vals[i].second);
            if (vals[i].first == vals[i + 1].first)
                continue;
            const std::size_t n_left = i + 1;
            const std::size_t n_right = n - n_left;
            const double g_left = gini(n_left - left1, left1);
            const double g_right = gini(n_right - (total1 - left1), total1 - left1);
            const double weighted =
                (static_cast<double>(n_left) * g_left +
                 static_cast<double>(n_right) * g_right) /
                static_cast<double>(n);
            const double decrease = node_gini - weighted;
            if (!best.found || decrease > best.decrease) {
                best.found = true;
                best.feature = static_cast<int>(f);
                best.threshold = (vals[i].first + vals[i + 1].first) / 2.0;
                best.decrease = decrease;
            }
        }
        return true;
    }

    SplitChoice best_split(const std::vector<std::size_t>& samples, double node_gini) {
        SplitChoice best;
        const std::size_t d = X.cols;
        // partial Fisher-Yates over features; constant-at-node features do
        // not count toward the m evaluated candidates
        std::vector<std::size_t> features(d);
        std::iota(features.begin(), features.end(), 0);
        std::size_t evaluated = 0;
        for (std::size_t i = 0; i < d && evaluated < m; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(eng.below(d - i));
            std::swap(features[i], features[j]);
            if (eval_feature(samples, features[i], node_gini, best))
                ++evaluated;
        }
        if (best.found) {
            for (std::size_t idx : samples) {
                if (X.at(idx, static_cast<std::size_t>(best.feature)) <= best.threshold)
                    best.left.push_back(idx);
                else
                    best.right.push_back(idx);
            }
        }
        return best;
    }

    int build(const std::vector<std::size_t>& samples, std::size_t depth) {
        std::size_t c1 = 0;
        for (std::size_t idx : samples)
            c1 += static_cast<std::size_t>(y[idx]);
        const std::size_t c0 = samples.size() - c1;

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        TreeNode& node = tree.nodes[static_cast<std::size_t>(node_id)];
        node.impurity = gini(c0, c1);
        node.n_samples = samples.size();
        node.counts[0] = c0;
        node.counts[1] = c1;

        const bool depth_ok = !max_depth || depth < *max_depth;
        if (node.impurity <= 0.0 || samples.size() < min_samples_split || !depth_ok)
            return node_id;

        SplitChoice split = best_split(samples, node.impurity);
        if (!split.found)
            return node_id; // all features constant here

        const int left = build(split.left, depth + 1);
        const int right = build(split.right, depth + 1);
        TreeNode& n = tree.nodes[static_cast<std::size_t>(node_id)];
        n.feature = split.feature;
        n.threshold = split.threshold;
        n.left = left;
        n.right = right;
        return node_id;
    }
};

const TreeNode& descend(const Tree& tree, std::span<const double> row) {
    const TreeNode* node = &tree.nodes[0];
    while (node->feature >= 0) {
        const int next = row[static_cast<std::size_t>(node->feature)] <= node->threshold
                             ? node->left
                             : node->right;
        node = &tree.nodes[static_cast<std::size_t>(next)];
    }
    return *node;
}

} // namespace

ForestModel rf_train(const DenseMatrix& X, const std::vector<int>& y,
                     const ForestParams& params) {
    const std::size_t n = X.rows;
    if (y.size() != n)
        throw DimensionMismatch("labels/rows mismatch");
    std::size_t ones = 0;
    for (int v : y) {
        if (v != 0 && v != 1)
            throw AnalysisError("labels must be 0 or 1");
        ones += static_cast<std::size_t>(v);
    }
    if (ones == 0 || ones == n)
        throw SingleClassInput("both classes must be present");
    for (double v : X.data)
        if (!std::isfinite(v))
            throw NonFiniteInput("training matrix contains non-finite values");
    if (params.n_trees == 0)
        throw BadHyperparameter("n_trees must be >= 1");

    ForestModel forest;
    forest.params = params;
    forest.n_features = X.cols;
    forest.trees.resize(params.n_trees);
    const std::size_t m =
        params.features_per_split > 0
            ? std::min(params.features_per_split, X.cols)
            : static_cast<std::size_t>(
                  std::ceil(std::sqrt(static_cast<double>(X.cols))));

    const std::int64_t t_count = static_cast<std::int64_t>(params.n_trees);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t t = 0; t < t_count; ++t) {
        rng::Engine eng(rng::mix(params.seed, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> sample(n);
        for (std::size_t i = 0; i < n; ++i)
            sample[i] = static_cast<std::size_t>(eng.below(n));
        TreeBuilder builder{X, y, m, params.max_depth, params.min_samples_split,
                            std::move(eng), {}};
        builder.build(sample, 0);
        forest.trees[static_cast<std::size_t>(t)] = std::move(builder.tree);
    }
    return forest;
}

std::vector<int> rf_predict(const ForestModel& forest, const DenseMatrix& X) {
    if (X.cols != forest.n_features)
        throw DimensionMismatch("expected " + std::to_string(forest.n_features) +
                                " features, got " + std::to_string(X.cols));
    std::vector<int> out(X.rows, 0);
    for (std::size_t i = 0; i < X.rows; ++i) {
        double p1 = 0.0;
        for (const Tree& tree : forest.trees) {
            const TreeNode& leaf = descend(tree, X.row(i));
            const double total = static_cast<double>(leaf.counts[0] + leaf.counts[1]);
            p1 += static_cast<double>(leaf.counts[1]) / total;
        }
        p1 /= static_cast<double>(forest.trees.size());
        out[i] = p1 > 0.5 ? 1 : 0;
    }
    return out;
}

std::vector<double> rf_mdi(const ForestModel& forest) {
    std::vector<double> importance(forest.n_features, 0.0);
    for (const Tree& tree : forest.trees) {
        if (tree.nodes.empty())
            continue;
        const double n_root = static_cast<double>(tree.nodes[0].n_samples);
        for (const TreeNode& node : tree.nodes) {
            if (node.feature < 0)
                continue;
            const TreeNode& l = tree.nodes[static_cast<std::size_t>(node.left)];
            const TreeNode& r = tree.nodes[static_cast<std::size_t>(node.right)];
            const double decrease =
                (static_cast<double>(node.n_samples) * node.impurity -
                 static_cast<double>(l.n_samples) * l.impurity -
                 static_cast<double>(r.n_samples) * r.impurity) /
                n_root;
            importance[static_cast<std::size_t>(node.feature)] += decrease;
        }
    }
    for (double& v : importance)
        v /= static_cast<double>(forest.trees.size());
    double total = 0.0;
    for (double v : importance)
        total += v;
    if (total > 0.0)
        for (double& v : importance)
            v /= total;
    return importance;
}

nlohmann::json ForestModel::to_json() const {
    nlohmann::json j;
    j["format"] = "random_forest";
    j["version"] = 1;
    j["n_features"] = n_features;
    j["params"] = {{"n_trees", params.n_trees},
                   {"min_samples_split", params.min_samples_split},
                   {"features_per_split", params.features_per_split},
                   {"seed", params.seed}};
    if (params.max_depth)
        j["params"]["max_depth"] = *params.max_depth;
    nlohmann::json trees_j = nlohmann::json::array();
    for (const Tree& tree : trees) {
        nlohmann::json nodes_j = nlohmann::json::array();
        for (const TreeNode& n : tree.nodes)
            nodes_j.push_back({n.feature, n.threshold, n.impurity, n.n_samples,
                               n.counts[0], n.counts[1], n.left, n.right});
        trees_j.push_back(std::move(nodes_j));
    }
    j["trees"] = std::move(trees_j);
    return j;
}

ForestModel ForestModel::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "random_forest" || j.value("version", 0) != 1)
        throw DataError("unsupported forest model format");
    ForestModel m;
    m.n_features = j.at("n_features").get<std::size_t>();
    const auto& p = j.at("params");
    m.params.n_trees = p.at("n_trees").get<std::size_t>();
    m.params.min_samples_split = p.at("min_samples_split").get<std::size_t>();
    m.params.features_per_split = p.at("features_per_split").get<std::size_t>();
    m.params.seed = p.at("seed").get<std::uint64_t>();
    if (p.contains("max_depth"))
        m.params.max_depth = p.at("max_depth").get<std::size_t>();
    for (const auto& nodes_j : j.at("trees")) {
        Tree tree;
        for (const auto& nj : nodes_j) {
            TreeNode n;
            n.feature = nj.at(0).get<int>();
            n.threshold = nj.at(1).get<double>();
            n.impurity = nj.at(2).get<double>();
            n.n_samples = nj.at(3).get<std::size_t>();
            n.counts[0] = nj.at(4).get<std::size_t>();
            n.counts[1] = nj.at(5).get<std::size_t>();
            n.left = nj.at(6).get<int>();
            n.right = nj.at(7).get<int>();
            tree.nodes.push_back(n);
        }
        m.trees.push_back(std::move(tree));
    }
    return m;
}

} // namespace scribe::learn
