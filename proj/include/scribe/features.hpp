#ifndef SCRIBE_FEATURES_HPP
#define SCRIBE_FEATURES_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scribe/matrix.hpp"
#include "scribe/segmentation.hpp"

namespace scribe {

/// A pair of adjacent grapheme clusters, stored by feature key (UTF-8;
/// whitespace clusters canonicalized to a single U+0020). Ordering is
/// lexicographic by code points, which byte-wise UTF-8 comparison gives
/// for free.
struct Bigram {
    std::string first;
    std::string second;
    bool first_brevi = false;
    bool second_brevi = false;

    bool has_brevigraph() const { return first_brevi || second_brevi; }
    std::string repr() const { return first + second; }

    friend std::strong_ordering operator<=>(const Bigram& a, const Bigram& b) {
        if (auto c = a.first <=> b.first; c != 0)
            return c;
        return a.second <=> b.second;
    }
    friend bool operator==(const Bigram& a, const Bigram& b) {
        return a.first == b.first && a.second == b.second;
    }
};

struct VocabEntry {
    Bigram bigram;
    std::uint64_t count = 0;
};

struct SegmentRef {
    std::string codex_id;
    std::string unit_id;
    std::string scribe;
    std::size_t index = 0;
};

struct FeatureMatrix {
    enum class Weighting { Raw, Tfidf };

    std::vector<SegmentRef> row_labels;
    std::vector<Bigram> col_labels;
    DenseMatrix values;
    Weighting weighting = Weighting::Raw;
};

/// All consecutive cluster pairs of a segment, in order: size() - 1
/// bigrams (word boundaries crossed via the space cluster).
std::vector<Bigram> extract_bigrams(const ClusterSeq& seq);

/// Keeps exactly the bigrams with at least one brevigraph-class member.
std::vector<Bigram> filter_brevigraph_bigrams(std::span<const Bigram> bigrams);

/// The k most frequent brevigraph bigrams over all segments; ties break
/// by code-point order. Fewer than k distinct bigrams means all are kept.
std::vector<VocabEntry> build_vocab(std::span<const Segment> segments,
                                    std::size_t k = 100);

/// Integer counts of each vocabulary bigram per segment; out-of-vocabulary
/// bigrams are ignored.
FeatureMatrix vectorize(std::span<const Segment> segments,
                        std::span<const VocabEntry> vocab);

/// Smoothed TF-IDF: idf(j) = ln((1 + N) / (1 + df_j)) + 1, then each row
/// L2-normalized (all-zero rows stay zero).
FeatureMatrix tfidf(const FeatureMatrix& raw);

} // namespace scribe

#endif
