#ifndef SCRIBE_ANALYZE_HPP
#define SCRIBE_ANALYZE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scribe/features.hpp"
#include "scribe/learn.hpp"
#include "scribe/metrics.hpp"
#include "scribe/reduce.hpp"

namespace scribe::analyze {

struct PipelineParams {
    std::size_t segment_size = kDefaultSegmentSize;
    std::size_t top_k = 100;
    std::size_t pca_dims = 25;
    EmbedMethod method = EmbedMethod::Pca2d;
    std::size_t min_segments = 10;
    double nu = 0.1;
    double gamma = 0.0; // <= 0 means "scale"
    std::size_t n_trees = 200;
    std::size_t knn_k = 1;
    std::uint64_t seed = 42;
};

struct EmbeddingResult {
    DenseMatrix coords; // n x 2
    std::vector<SegmentRef> labels;
    EmbedMethod method = EmbedMethod::Pca2d;
    std::uint64_t seed = 0;
};

/// The standard pipeline over a pre-selected segment set: brevigraph-bigram
/// vocabulary (top_k) -> TF-IDF -> PCA (pca_dims, clamped to the valid
/// range) -> 2-D embedding. Exposed for reuse by the workflows below.
EmbeddingResult run_embedding_pipeline(std::span<const Segment> segments,
                                       const PipelineParams& params);

/// Figs 10-style scatter: scribes contributing fewer than min_segments
/// segments are dropped before the vocabulary is fitted. Throws
/// InsufficientScribes when fewer than two scribes survive.
EmbeddingResult scatter_analysis(std::span<const ProductionUnitDoc> corpus,
                                 const PipelineParams& params);

/// scatter_analysis restricted to two labels (vocabulary refit on the
/// subset). Throws DuplicateLabel when the labels coincide.
EmbeddingResult pairwise_scatter(std::span<const ProductionUnitDoc> corpus,
                                 const std::string& label_a, const std::string& label_b,
                                 const PipelineParams& params);

/// Balanced scatter: exactly n_per_scribe segments sampled per label,
/// without replacement. Per-label streams derive from hash(label, seed) so
/// adding a scribe never perturbs another scribe's sample.
EmbeddingResult downsampled_scatter(std::span<const ProductionUnitDoc> corpus,
                                    std::span<const std::string> labels,
                                    std::size_t n_per_scribe,
                                    const PipelineParams& params);

enum class AggregateBy { Unit, Codex };

struct OutlierRow {
    std::string codex_id;
    std::string unit_id; // empty at codex aggregation
    std::size_t n_segments = 0;
    std::size_t n_inliers = 0;
    std::size_t n_outliers = 0;
    double outlier_fraction = 0.0;
};

struct OutlierReport {
    std::string scribe;
    AggregateBy aggregated_by = AggregateBy::Codex;
    std::vector<OutlierRow> rows;
    PipelineParams params;
};

/// Leave-one-unit-out one-class SVM over one scribe's segments: for each
/// production unit, train on all the scribe's other segments and predict
/// the held-out unit. TF-IDF features come from one vocabulary fitted on
/// all of the scribe's segments.
OutlierReport loo_outlier_analysis(std::span<const ProductionUnitDoc> corpus,
                                   const std::string& scribe,
                                   const PipelineParams& params,
                                   AggregateBy aggregate_by = AggregateBy::Codex);

struct ImportanceFeature {
    Bigram bigram;
    double mdi = 0.0;
    double target_mean_tfidf = 0.0;
    double rest_mean_tfidf = 0.0;
    metrics::BoxStats target_box;
    metrics::BoxStats rest_box;
};

struct ImportanceReport {
    std::string scribe;
    std::string target_codex;
    std::string target_unit;
    std::size_t top_m = 10; // how many features the plot shows
    std::vector<ImportanceFeature> features; // all vocab features, MDI descending
    PipelineParams params;
};

/// Random-forest contrast of one production unit against the rest of the
/// scribe's segments; features ranked by Mean Decrease in Impurity, with
/// per-class TF-IDF distribution summaries.
ImportanceReport importance_analysis(std::span<const ProductionUnitDoc> corpus,
                                     const std::string& scribe,
                                     const std::string& target_codex,
                                     const std::string& target_unit,
                                     const PipelineParams& params,
                                     std::size_t top_m = 10);

struct AttributionRow {
    SegmentRef segment;
    std::string predicted;
};

struct AttributionReport {
    std::string query_label;
    std::string verdict;
    std::vector<AttributionRow> rows;
    std::map<std::string, std::size_t> votes;
    PipelineParams params;
};

/// k-NN attribution of every query-label segment against the reference
/// labels' segments (vocabulary fit on references plus query); the verdict
/// is the majority over query segments.
AttributionReport attribute_segments(std::span<const ProductionUnitDoc> corpus,
                                     const std::string& query_label,
                                     std::span<const std::string> reference_labels,
                                     const PipelineParams& params);

} // namespace scribe::analyze

#endif
