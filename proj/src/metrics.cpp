#include "scribe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "scribe/errors.hpp"

namespace scribe::metrics {

namespace {

struct WordCounts {
    std::size_t words = 0;
    std::size_t abbreviated = 0;
};

// Walks maximal runs of non-whitespace clusters.
template <typename Fn>
void for_each_word(const ClusterSeq& seq, Fn&& fn) {
    std::size_t i = 0;
    const std::size_t n = seq.size();
    while (i < n) {
        while (i < n && seq[i].is_whitespace())
            ++i;
        if (i >= n)
            break;
        const std::size_t begin = i;
        while (i < n && !seq[i].is_whitespace())
            ++i;
        fn(begin, i);
    }
}

WordCounts count_words(const ClusterSeq& seq) {
    WordCounts wc;
    for_each_word(seq, [&](std::size_t begin, std::size_t end) {
        ++wc.words;
        for (std::size_t j = begin; j < end; ++j) {
            if (seq[j].is_brevigraph()) {
                ++wc.abbreviated;
                break;
            }
        }
    });
    return wc;
}

struct CharCounts {
    std::size_t letters = 0;
    std::size_t brevigraphs = 0;
};

CharCounts count_chars(const ClusterSeq& seq) {
    CharCounts cc;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        switch (seq.classes[i]) {
        case ClusterClass::Letter:
            ++cc.letters;
            break;
        case ClusterClass::Brevigraph:
            ++cc.brevigraphs;
            break;
        default:
            break;
        }
    }
    return cc;
}

} // namespace

double abbreviation_density_chars(const ClusterSeq& seq) {
    const CharCounts cc = count_chars(seq);
    const std::size_t denom = cc.letters + cc.brevigraphs;
    if (denom == 0)
        throw EmptyDocument("no letter or brevigraph clusters");
    return static_cast<double>(cc.brevigraphs) / static_cast<double>(denom);
}

double abbreviation_density_words(const ClusterSeq& seq) {
    const WordCounts wc = count_words(seq);
    if (wc.words == 0)
        throw EmptyDocument("no words");
    return static_cast<double>(wc.abbreviated) / static_cast<double>(wc.words);
}

double type_token_ratio(const ClusterSeq& seq) {
    std::size_t tokens = 0;
    std::set<std::u32string> forms;
    for_each_word(seq, [&](std::size_t begin, std::size_t end) {
        ++tokens;
        std::u32string form;
        for (std::size_t j = begin; j < end; ++j) {
            const ClusterView c = seq[j];
            form.append(c.cps.begin(), c.cps.end());
        }
        forms.insert(std::move(form));
    });
    if (tokens == 0)
        throw EmptyDocument("no words");
    return static_cast<double>(forms.size()) / static_cast<double>(tokens);
}

std::size_t unique_characters(const ClusterSeq& seq) {
    std::set<std::u32string> shapes;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const ClusterView c = seq[i];
        if (c.is_whitespace())
            continue;
        shapes.emplace(c.cps.begin(), c.cps.end());
    }
    return shapes.size();
}

BoxStats box_stats(std::vector<double> values) {
    BoxStats bs;
    if (values.empty())
        return bs;
    std::ranges::sort(values);
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + (values[hi] - values[lo]) * frac;
    };
    bs.min = values.front();
    bs.q1 = quantile(0.25);
    bs.median = quantile(0.5);
    bs.q3 = quantile(0.75);
    bs.max = values.back();
    return bs;
}

std::string group_key(const ProductionUnitDoc& doc, GroupBy group_by) {
    switch (group_by) {
    case GroupBy::Scribe:
        return doc.scribe;
    case GroupBy::Codex:
        return doc.codex_id;
    case GroupBy::Unit:
        return doc.unit_id;
    case GroupBy::CodexUnit:
        return doc.codex_id + " / " + doc.unit_id;
    }
    return {};
}

DensityReport density_report(std::span<const ProductionUnitDoc> docs, GroupBy group_by,
                             DensityLevel level, const DensityOptions& opts) {
    struct Accum {
        std::vector<double> char_densities;
        std::vector<double> word_densities;
        std::size_t letters = 0, brevigraphs = 0, words = 0, abbreviated = 0;
    };
    std::map<std::string, Accum> groups;

    auto add_sample = [&](const std::string& key, const ClusterSeq& seq) {
        Accum& acc = groups[key];
        acc.char_densities.push_back(abbreviation_density_chars(seq));
        acc.word_densities.push_back(abbreviation_density_words(seq));
        const CharCounts cc = count_chars(seq);
        const WordCounts wc = count_words(seq);
        acc.letters += cc.letters;
        acc.brevigraphs += cc.brevigraphs;
        acc.words += wc.words;
        acc.abbreviated += wc.abbreviated;
    };

    for (const ProductionUnitDoc& doc : docs) {
        const std::string key = group_key(doc, group_by);
        if (opts.granularity == SampleGranularity::Unit) {
            add_sample(key, doc.view());
        } else {
            for (const Segment& seg : segment_unit(doc, opts.segment_size))
                add_sample(key, seg.clusters);
        }
        groups.try_emplace(key); // keep the group visible even if sample-less
    }

    DensityReport report;
    report.group_by = group_by;
    report.level = level;
    report.granularity = opts.granularity;
    report.pooled = opts.pooled;
    for (auto& [key, acc] : groups) {
        if (acc.char_densities.empty())
            throw EmptyGroup(key);
        DensityRow row;
        row.key = key;
        row.n_samples = acc.char_densities.size();
        auto mean = [](const std::vector<double>& v) {
            double s = 0;
            for (double x : v)
                s += x;
            return s / static_cast<double>(v.size());
        };
        if (opts.pooled) {
            row.mean_density_char = static_cast<double>(acc.brevigraphs) /
                                    static_cast<double>(acc.letters + acc.brevigraphs);
            row.mean_density_word = static_cast<double>(acc.abbreviated) /
                                    static_cast<double>(acc.words);
        } else {
            row.mean_density_char = mean(acc.char_densities);
            row.mean_density_word = mean(acc.word_densities);
        }
        row.per_sample = level == DensityLevel::Character ? acc.char_densities
                                                          : acc.word_densities;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<ScribeStats> corpus_stats(std::span<const ProductionUnitDoc> docs,
                                      std::size_t segment_size) {
    struct Accum {
        std::set<std::string> codices;
        std::size_t units = 0;
        std::size_t chars_cp = 0;
        std::size_t chars_g = 0;
        std::size_t segments = 0;
        std::set<std::u32string> shapes;
        std::set<std::u32string> word_forms;
        std::size_t word_tokens = 0;
    };
    std::map<std::string, Accum> by_scribe;
    for (const ProductionUnitDoc& doc : docs) {
        Accum& acc = by_scribe[doc.scribe];
        acc.codices.insert(doc.codex_id);
        ++acc.units;
        const ClusterSeq seq = doc.view();
        acc.chars_cp += seq.cps.size();
        acc.chars_g += seq.size();
        acc.segments += seq.size() / segment_size;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const ClusterView c = seq[i];
            if (!c.is_whitespace())
                acc.shapes.emplace(c.cps.begin(), c.cps.end());
        }
        for_each_word(seq, [&](std::size_t begin, std::size_t end) {
            ++acc.word_tokens;
            std::u32string form;
            for (std::size_t j = begin; j < end; ++j) {
                const ClusterView c = seq[j];
                form.append(c.cps.begin(), c.cps.end());
            }
            acc.word_forms.insert(std::move(form));
        });
    }
    std::vector<ScribeStats> out;
    for (auto& [scribe, acc] : by_scribe) {
        ScribeStats st;
        st.scribe = scribe;
        st.codices = acc.codices.size();
        st.units = acc.units;
        st.chars_codepoint = acc.chars_cp;
        st.chars_grapheme = acc.chars_g;
        st.segments = acc.segments;
        st.unique_characters = acc.shapes.size();
        st.ttr = acc.word_tokens > 0 ? static_cast<double>(acc.word_forms.size()) /
                                           static_cast<double>(acc.word_tokens)
                                     : 0.0;
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace scribe::metrics
