#include "scribe/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "scribe/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scribe {

std::vector<Bigram> extract_bigrams(const ClusterSeq& seq) {
    std::vector<Bigram> out;
    if (seq.size() < 2)
        return out;
    out.reserve(seq.size() - 1);
    ClusterView prev = seq[0];
    std::string prev_key = prev.key();
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const ClusterView cur = seq[i];
        std::string cur_key = cur.key();
        out.push_back(Bigram{prev_key, cur_key, prev.is_brevigraph(),
                             cur.is_brevigraph()});
        prev = cur;
        prev_key = std::move(cur_key);
    }
    return out;
}

std::vector<Bigram> filter_brevigraph_bigrams(std::span<const Bigram> bigrams) {
    std::vector<Bigram> out;
    for (const Bigram& b : bigrams)
        if (b.has_brevigraph())
            out.push_back(b);
    return out;
}

std::vector<VocabEntry> build_vocab(std::span<const Segment> segments, std::size_t k) {
    std::map<Bigram, std::uint64_t> counts;
    for (const Segment& seg : segments) {
        for (const Bigram& b : extract_bigrams(seg.clusters))
            if (b.has_brevigraph())
                ++counts[b];
    }
    std::vector<VocabEntry> entries;
    entries.reserve(counts.size());
    for (auto& [bigram, count] : counts)
        entries.push_back({bigram, count});
    // count desc, then code-point order; the map already yields the latter
    std::ranges::stable_sort(entries, [](const VocabEntry& a, const VocabEntry& b) {
        return a.count > b.count;
    });
    if (entries.size() > k)
        entries.resize(k);
    return entries;
}

FeatureMatrix vectorize(std::span<const Segment> segments,
                        std::span<const VocabEntry> vocab) {
    std::map<Bigram, std::size_t> col_of;
    for (std::size_t j = 0; j < vocab.size(); ++j)
        col_of.emplace(vocab[j].bigram, j);

    FeatureMatrix fm;
    fm.weighting = FeatureMatrix::Weighting::Raw;
    fm.col_labels.reserve(vocab.size());
    for (const VocabEntry& v : vocab)
        fm.col_labels.push_back(v.bigram);
    fm.row_labels.reserve(segments.size());
    for (const Segment& s : segments)
        fm.row_labels.push_back({s.codex_id, s.unit_id, s.scribe, s.index});
    fm.values = DenseMatrix(segments.size(), vocab.size());

    const std::int64_t n = static_cast<std::int64_t>(segments.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        auto row = fm.values.row(static_cast<std::size_t>(i));
        for (const Bigram& b : extract_bigrams(segments[i].clusters)) {
            if (!b.has_brevigraph())
                continue;
            auto it = col_of.find(b);
            if (it != col_of.end())
                row[it->second] += 1.0;
        }
    }
    return fm;
}

FeatureMatrix tfidf(const FeatureMatrix& raw) {
    if (raw.weighting != FeatureMatrix::Weighting::Raw)
        throw AnalysisError("tfidf expects a raw-count matrix");
    const std::size_t n = raw.values.rows;
    const std::size_t d = raw.values.cols;

    std::vector<double> idf(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t df = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (raw.values.at(i, j) > 0)
                ++df;
        idf[j] = std::log((1.0 + static_cast<double>(n)) /
                          (1.0 + static_cast<double>(df))) +
                 1.0;
    }

    FeatureMatrix out;
    out.row_labels = raw.row_labels;
    out.col_labels = raw.col_labels;
    out.weighting = FeatureMatrix::Weighting::Tfidf;
    out.values = DenseMatrix(n, d);
    const std::int64_t rows = static_cast<std::int64_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto src = raw.values.row(static_cast<std::size_t>(i));
        auto dst = out.values.row(static_cast<std::size_t>(i));
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            dst[j] = src[j] * idf[j];
            norm_sq += dst[j] * dst[j];
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (std::size_t j = 0; j < d; ++j)
                dst[j] *= inv;
        }
    }
    return out;
}

} // namespace scribe
