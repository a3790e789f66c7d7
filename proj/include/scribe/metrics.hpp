#ifndef SCRIBE_METRICS_HPP
#define SCRIBE_METRICS_HPP

#include <span>
#include <string>
#include <vector>

#include "scribe/corpus.hpp"
#include "scribe/segmentation.hpp"

namespace scribe::metrics {

/// Brevigraph clusters / (letter + brevigraph clusters). Whitespace and
/// Other clusters count toward neither side. Throws EmptyDocument when
/// no letter-like cluster exists.
double abbreviation_density_chars(const ClusterSeq& seq);

/// Words containing at least one brevigraph / total words, a word being a
/// maximal run of non-whitespace clusters. Throws EmptyDocument.
double abbreviation_density_words(const ClusterSeq& seq);

/// Distinct word forms (exact cluster-sequence equality) / word tokens.
double type_token_ratio(const ClusterSeq& seq);

/// Distinct grapheme-cluster code-point sequences, whitespace excluded.
std::size_t unique_characters(const ClusterSeq& seq);

enum class GroupBy { Scribe, Codex, Unit, CodexUnit };
enum class DensityLevel { Character, Word };
/// Unit: one density sample per production unit. Segment: one per
/// 5,000-cluster segment (short units contribute none).
enum class SampleGranularity { Unit, Segment };

struct DensityRow {
    std::string key;
    std::size_t n_samples = 0;
    double mean_density_char = 0.0;
    double mean_density_word = 0.0;
    /// Densities at the report's level, one per sample, in corpus order.
    std::vector<double> per_sample;
};

struct BoxStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

/// Quartiles by linear interpolation on the sorted sample.
BoxStats box_stats(std::vector<double> values);

struct DensityReport {
    GroupBy group_by = GroupBy::Scribe;
    DensityLevel level = DensityLevel::Character;
    SampleGranularity granularity = SampleGranularity::Unit;
    bool pooled = false;
    std::vector<DensityRow> rows; // sorted by key
};

struct DensityOptions {
    SampleGranularity granularity = SampleGranularity::Unit;
    std::size_t segment_size = kDefaultSegmentSize;
    /// Pooled: group density from summed counts instead of the unweighted
    /// mean over samples (the mean is what the boxplot figures show).
    bool pooled = false;
};

DensityReport density_report(std::span<const ProductionUnitDoc> docs, GroupBy group_by,
                             DensityLevel level, const DensityOptions& opts = {});

std::string group_key(const ProductionUnitDoc& doc, GroupBy group_by);

/// Per-scribe descriptive statistics: codices, production units, character
/// counts in both modes, full-segment count, unique characters, and the
/// pooled type-token ratio.
struct ScribeStats {
    std::string scribe;
    std::size_t codices = 0;
    std::size_t units = 0;
    std::size_t chars_codepoint = 0;
    std::size_t chars_grapheme = 0;
    std::size_t segments = 0;
    std::size_t unique_characters = 0;
    double ttr = 0.0;
};

std::vector<ScribeStats> corpus_stats(std::span<const ProductionUnitDoc> docs,
                                      std::size_t segment_size = kDefaultSegmentSize);

} // namespace scribe::metrics

#endif
