#include "scribe/analyze.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scribe/errors.hpp"
#include "scribe/rng.hpp"

namespace scribe::analyze {

namespace {

std::pair<FeatureMatrix, FeatureMatrix> fit_tfidf(std::span<const Segment> segments,
                                                  std::size_t top_k) {
    const std::vector<VocabEntry> vocab = build_vocab(segments, top_k);
    if (vocab.empty())
        throw DegenerateInput("no brevigraph bigrams in the segment set");
    FeatureMatrix raw = vectorize(segments, vocab);
    FeatureMatrix weighted = tfidf(raw);
    return {std::move(raw), std::move(weighted)};
}

std::map<std::string, std::size_t> segments_per_scribe(std::span<const Segment> segs) {
    std::map<std::string, std::size_t> counts;
    for (const Segment& s : segs)
        ++counts[s.scribe];
    return counts;
}

} // namespace

EmbeddingResult run_embedding_pipeline(std::span<const Segment> segments,
                                       const PipelineParams& params) {
    auto [raw, weighted] = fit_tfidf(segments, params.top_k);
    const std::size_t n = weighted.values.rows;
    const std::size_t d = weighted.values.cols;
    if (n < 2)
        throw DegenerateInput("embedding needs at least 2 segments");
    const std::size_t k = std::clamp<std::size_t>(params.pca_dims, 1,
                                                  std::min(n - 1, d));
    PcaResult pca = pca_fit_transform(weighted.values, k);

    EmbeddingResult res;
    res.coords = embed_2d(pca.scores, params.method, params.seed);
    res.labels = std::move(weighted.row_labels);
    res.method = params.method;
    res.seed = params.seed;
    return res;
}

EmbeddingResult scatter_analysis(std::span<const ProductionUnitDoc> corpus,
                                 const PipelineParams& params) {
    const std::vector<Segment> all = segment_corpus(corpus, params.segment_size);
    const auto counts = segments_per_scribe(all);
    std::vector<Segment> retained;
    for (const Segment& s : all)
        if (counts.at(s.scribe) >= params.min_segments)
            retained.push_back(s);
    std::set<std::string> scribes;
    for (const Segment& s : retained)
        scribes.insert(s.scribe);
    if (scribes.size() < 2)
        throw InsufficientScribes("only " + std::to_string(scribes.size()) +
                                  " scribe(s) contribute >= " +
                                  std::to_string(params.min_segments) + " segments");
    return run_embedding_pipeline(retained, params);
}

EmbeddingResult pairwise_scatter(std::span<const ProductionUnitDoc> corpus,
                                 const std::string& label_a, const std::string& label_b,
                                 const PipelineParams& params) {
    if (label_a == label_b)
        throw DuplicateLabel(label_a);
    std::vector<Segment> segs;
    for (const ProductionUnitDoc& doc : corpus) {
        if (doc.scribe != label_a && doc.scribe != label_b)
            continue;
        std::vector<Segment> s = segment_unit(doc, params.segment_size);
        segs.insert(segs.end(), std::make_move_iterator(s.begin()),
                    std::make_move_iterator(s.end()));
    }
    const auto counts = segments_per_scribe(segs);
    std::vector<Segment> retained;
    for (const Segment& s : segs)
        if (counts.at(s.scribe) >= params.min_segments)
            retained.push_back(s);
    std::set<std::string> scribes;
    for (const Segment& s : retained)
        scribes.insert(s.scribe);
    if (scribes.size() < 2)
        throw InsufficientScribes("pairwise labels do not both reach min_segments");
    return run_embedding_pipeline(retained, params);
}

EmbeddingResult downsampled_scatter(std::span<const ProductionUnitDoc> corpus,
                                    std::span<const std::string> labels,
                                    std::size_t n_per_scribe,
                                    const PipelineParams& params) {
    {
        std::set<std::string> uniq(labels.begin(), labels.end());
        if (uniq.size() != labels.size())
            throw DuplicateLabel("downsample label list repeats a label");
    }
    const std::vector<Segment> all = segment_corpus(corpus, params.segment_size);
    std::vector<Segment> retained;
    for (const std::string& label : labels) {
        std::vector<const Segment*> pool;
        for (const Segment& s : all)
            if (s.scribe == label)
                pool.push_back(&s);
        if (pool.size() < n_per_scribe)
            throw NotEnoughSegments(label + " has " + std::to_string(pool.size()) +
                                    " segments, need " + std::to_string(n_per_scribe));
        rng::Engine eng(rng::mix(params.seed, label));
        for (std::size_t idx :
             rng::sample_without_replacement(eng, pool.size(), n_per_scribe))
            retained.push_back(*pool[idx]);
    }
    return run_embedding_pipeline(retained, params);
}

OutlierReport loo_outlier_analysis(std::span<const ProductionUnitDoc> corpus,
                                   const std::string& scribe,
                                   const PipelineParams& params,
                                   AggregateBy aggregate_by) {
    std::vector<Segment> segs;
    for (const ProductionUnitDoc& doc : corpus) {
        if (doc.scribe != scribe)
            continue;
        std::vector<Segment> s = segment_unit(doc, params.segment_size);
        segs.insert(segs.end(), std::make_move_iterator(s.begin()),
                    std::make_move_iterator(s.end()));
    }
    if (segs.empty())
        throw EmptyDocument("scribe " + scribe + " has no segments");

    // unit keys in corpus order
    std::vector<std::pair<std::string, std::string>> units;
    for (const Segment& s : segs) {
        const std::pair<std::string, std::string> key{s.codex_id, s.unit_id};
        if (std::ranges::find(units, key) == units.end())
            units.push_back(key);
    }
    if (units.size() < 2)
        throw SingleUnit("scribe " + scribe + " has a single production unit");

    auto [raw, weighted] = fit_tfidf(segs, params.top_k);
    const DenseMatrix& X = weighted.values;

    learn::OcsvmParams oc;
    oc.nu = params.nu;
    oc.gamma = params.gamma;

    OutlierReport report;
    report.scribe = scribe;
    report.aggregated_by = aggregate_by;
    report.params = params;

    std::vector<OutlierRow> unit_rows;
    for (const auto& [codex, unit] : units) {
        std::vector<std::size_t> in_idx, out_idx;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].codex_id == codex && segs[i].unit_id == unit)
                out_idx.push_back(i);
            else
                in_idx.push_back(i);
        }
        if (in_idx.size() < 2)
            throw DegenerateInput("fewer than 2 training segments when holding out " +
                                  codex + " / " + unit);
        DenseMatrix train(in_idx.size(), X.cols);
        for (std::size_t r = 0; r < in_idx.size(); ++r)
            std::ranges::copy(X.row(in_idx[r]), train.row(r).begin());
        DenseMatrix test(out_idx.size(), X.cols);
        for (std::size_t r = 0; r < out_idx.size(); ++r)
            std::ranges::copy(X.row(out_idx[r]), test.row(r).begin());

        const learn::OcsvmModel model = learn::ocsvm_train(train, oc);
        const learn::OcsvmPrediction pred = learn::ocsvm_predict(model, test);

        OutlierRow row;
        row.codex_id = codex;
        row.unit_id = unit;
        row.n_segments = out_idx.size();
        for (int label : pred.labels)
            label == 1 ? ++row.n_inliers : ++row.n_outliers;
        row.outlier_fraction =
            static_cast<double>(row.n_outliers) / static_cast<double>(row.n_segments);
        unit_rows.push_back(std::move(row));
    }

    if (aggregate_by == AggregateBy::Unit) {
        report.rows = std::move(unit_rows);
        return report;
    }
    // codex aggregation, first-appearance order
    std::vector<std::string> codices;
    for (const OutlierRow& r : unit_rows)
        if (std::ranges::find(codices, r.codex_id) == codices.end())
            codices.push_back(r.codex_id);
    for (const std::string& codex : codices) {
        OutlierRow agg;
        agg.codex_id = codex;
        for (const OutlierRow& r : unit_rows) {
            if (r.codex_id != codex)
                continue;
            agg.n_segments += r.n_segments;
            agg.n_inliers += r.n_inliers;
            agg.n_outliers += r.n_outliers;
        }
        agg.outlier_fraction =
            static_cast<double>(agg.n_outliers) / static_cast<double>(agg.n_segments);
        report.rows.push_back(std::move(agg));
    }
    return report;
}

ImportanceReport importance_analysis(std::span<const ProductionUnitDoc> corpus,
                                     const std::string& scribe,
                                     const std::string& target_codex,
                                     const std::string& target_unit,
                                     const PipelineParams& params, std::size_t top_m) {
    std::vector<Segment> segs;
    for (const ProductionUnitDoc& doc : corpus) {
        if (doc.scribe != scribe)
            continue;
        std::vector<Segment> s = segment_unit(doc, params.segment_size);
        segs.insert(segs.end(), std::make_move_iterator(s.begin()),
                    std::make_move_iterator(s.end()));
    }
    std::vector<int> y;
    std::size_t n_target = 0;
    for (const Segment& s : segs) {
        const bool is_target = s.codex_id == target_codex && s.unit_id == target_unit;
        y.push_back(is_target ? 1 : 0);
        n_target += is_target ? 1u : 0u;
    }
    if (n_target == 0)
        throw EmptyClass("target unit " + target_codex + " / " + target_unit +
                         " has no segments");
    if (n_target == y.size())
        throw EmptyClass("no segments outside the target unit");

    auto [raw, weighted] = fit_tfidf(segs, params.top_k);
    const DenseMatrix& X = weighted.values;

    learn::ForestParams fp;
    fp.n_trees = params.n_trees;
    fp.seed = params.seed;
    const learn::ForestModel forest = learn::rf_train(X, y, fp);
    const std::vector<double> mdi = learn::rf_mdi(forest);

    std::vector<std::size_t> order(mdi.size());
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) {
        return mdi[a] > mdi[b];
    });

    ImportanceReport report;
    report.scribe = scribe;
    report.target_codex = target_codex;
    report.target_unit = target_unit;
    report.top_m = top_m;
    report.params = params;
    for (std::size_t j : order) {
        ImportanceFeature f;
        f.bigram = weighted.col_labels[j];
        f.mdi = mdi[j];
        std::vector<double> target_vals, rest_vals;
        for (std::size_t i = 0; i < X.rows; ++i)
            (y[i] == 1 ? target_vals : rest_vals).push_back(X.at(i, j));
        auto mean = [](const std::vector<double>& v) {
            double s = 0;
            for (double x : v)
                s += x;
            return v.empty() ? 0.0 : s / static_cast<double>(v.size());
        };
        f.target_mean_tfidf = mean(target_vals);
        f.rest_mean_tfidf = mean(rest_vals);
        f.target_box = metrics::box_stats(std::move(target_vals));
        f.rest_box = metrics::box_stats(std::move(rest_vals));
        report.features.push_back(std::move(f));
    }
    return report;
}

AttributionReport attribute_segments(std::span<const ProductionUnitDoc> corpus,
                                     const std::string& query_label,
                                     std::span<const std::string> reference_labels,
                                     const PipelineParams& params) {
    std::set<std::string> refs(reference_labels.begin(), reference_labels.end());
    if (refs.size() != reference_labels.size() || refs.contains(query_label))
        throw DuplicateLabel("reference labels must be distinct from each other "
                             "and from the query");
    const std::vector<Segment> all = segment_corpus(corpus, params.segment_size);
    std::vector<Segment> used;
    for (const Segment& s : all)
        if (s.scribe == query_label || refs.contains(s.scribe))
            used.push_back(s);

    std::size_t n_query = 0, n_ref = 0;
    for (const Segment& s : used)
        s.scribe == query_label ? ++n_query : ++n_ref;
    if (n_query == 0)
        throw EmptyQuery("no segments for query label " + query_label);
    if (n_ref == 0)
        throw EmptyReference("no segments for the reference labels");

    auto [raw, weighted] = fit_tfidf(used, params.top_k);
    const DenseMatrix& X = weighted.values;

    DenseMatrix ref_X(n_ref, X.cols);
    std::vector<std::string> ref_y;
    std::vector<std::size_t> query_rows;
    std::size_t r = 0;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i].scribe == query_label) {
            query_rows.push_back(i);
            continue;
        }
        std::ranges::copy(X.row(i), ref_X.row(r).begin());
        ref_y.push_back(used[i].scribe);
        ++r;
    }

    AttributionReport report;
    report.query_label = query_label;
    report.params = params;
    for (std::size_t qi : query_rows) {
        AttributionRow row;
        row.segment = weighted.row_labels[qi];
        row.predicted = learn::knn_classify(ref_X, ref_y, X.row(qi), params.knn_k);
        ++report.votes[row.predicted];
        report.rows.push_back(std::move(row));
    }
    // majority verdict; ties break by reference-label order
    std::size_t best_votes = 0;
    for (const std::string& label : reference_labels) {
        auto it = report.votes.find(label);
        const std::size_t v = it == report.votes.end() ? 0 : it->second;
        if (v > best_votes) {
            best_votes = v;
            report.verdict = label;
        }
    }
    return report;
}

} // namespace scribe::analyze
