#include <algorithm>
#include <cmath>
#include <map>

#include "scribe/errors.hpp"
#include "scribe/learn.hpp"

namespace scribe::learn {

std::string knn_classify(const DenseMatrix& train_X,
                         const std::vector<std::string>& train_y,
                         std::span<const double> x, std::size_t k) {
    const std::size_t n = train_X.rows;
    if (n == 0)
        throw EmptyTrainingSet("no training rows");
    if (train_y.size() != n)
        throw DimensionMismatch("labels/rows mismatch");
    if (x.size() != train_X.cols)
        throw DimensionMismatch("query dimensionality mismatch");
    if (k < 1 || k > n)
        throw BadHyperparameter("k must be in [1, n]");

    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        const auto row = train_X.row(i);
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = row[j] - x[j];
            s += d * d;
        }
        dist[i] = {s, i};
    }
    std::ranges::sort(dist); // distance, then index: deterministic neighbor set

    // first-seen order of labels for the final tie-break
    std::map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < n; ++i)
        first_seen.try_emplace(train_y[i], i);

    struct Tally {
        std::size_t votes = 0;
        double summed_dist = 0.0;
    };
    std::map<std::string, Tally> tallies;
    for (std::size_t i = 0; i < k; ++i) {
        Tally& t = tallies[train_y[dist[i].second]];
        ++t.votes;
        t.summed_dist += std::sqrt(dist[i].first);
    }

    const std::string* best = nullptr;
    const Tally* best_tally = nullptr;
    for (const auto& [label, tally] : tallies) {
        if (!best) {
            best = &label;
            best_tally = &tally;
            continue;
        }
        const bool wins =
            tally.votes > best_tally->votes ||
            (tally.votes == best_tally->votes &&
             (tally.summed_dist < best_tally->summed_dist ||
              (tally.summed_dist == best_tally->summed_dist &&
               first_seen[label] < first_seen[*best])));
        if (wins) {
            best = &label;
            best_tally = &tally;
        }
    }
    return *best;
}

} // namespace scribe::learn
