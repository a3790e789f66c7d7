#include "scribe/report_io.hpp"

#include <cstdio>

namespace scribe::io {

namespace {

const char* aggregate_name(analyze::AggregateBy a) {
    return a == analyze::AggregateBy::Codex ? "codex" : "unit";
}

const char* group_name(metrics::GroupBy g) {
    switch (g) {
    case metrics::GroupBy::Scribe:
        return "scribe";
    case metrics::GroupBy::Codex:
        return "codex";
    case metrics::GroupBy::Unit:
        return "unit";
    case metrics::GroupBy::CodexUnit:
        return "codex+unit";
    }
    return "?";
}

const char* level_name(metrics::DensityLevel l) {
    return l == metrics::DensityLevel::Character ? "character" : "word";
}

const char* method_name(EmbedMethod m) {
    return m == EmbedMethod::Pca2d ? "pca2d" : "neighbor";
}

nlohmann::json box_json(const metrics::BoxStats& b) {
    return {{"min", b.min}, {"q1", b.q1}, {"median", b.median}, {"q3", b.q3},
            {"max", b.max}};
}

nlohmann::json segment_ref_json(const SegmentRef& ref) {
    return {{"codex", ref.codex_id}, {"unit", ref.unit_id}, {"scribe", ref.scribe},
            {"segment", ref.index}};
}

} // namespace

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(std::span<const metrics::ScribeStats> stats) {
    std::string out = "scribe,codices,production_units,chars_codepoint,"
                      "chars_grapheme,segments,unique_characters,ttr\n";
    for (const metrics::ScribeStats& s : stats) {
        out += csv_escape(s.scribe) + ',' + std::to_string(s.codices) + ',' +
               std::to_string(s.units) + ',' + std::to_string(s.chars_codepoint) + ',' +
               std::to_string(s.chars_grapheme) + ',' + std::to_string(s.segments) +
               ',' + std::to_string(s.unique_characters) + ',' + fmt_double(s.ttr) +
               '\n';
    }
    return out;
}

nlohmann::json to_json(std::span<const metrics::ScribeStats> stats) {
    nlohmann::json rows = nlohmann::json::array();
    for (const metrics::ScribeStats& s : stats)
        rows.push_back({{"scribe", s.scribe},
                        {"codices", s.codices},
                        {"production_units", s.units},
                        {"chars_codepoint", s.chars_codepoint},
                        {"chars_grapheme", s.chars_grapheme},
                        {"segments", s.segments},
                        {"unique_characters", s.unique_characters},
                        {"ttr", s.ttr}});
    return rows;
}

std::string to_csv(const metrics::DensityReport& report) {
    std::string out = "group,n_samples,mean_density_char,mean_density_word,"
                      "min,q1,median,q3,max,per_sample\n";
    for (const metrics::DensityRow& row : report.rows) {
        const metrics::BoxStats box = metrics::box_stats(row.per_sample);
        nlohmann::json dist = row.per_sample;
        out += csv_escape(row.key) + ',' + std::to_string(row.n_samples) + ',' +
               fmt_double(row.mean_density_char) + ',' +
               fmt_double(row.mean_density_word) + ',' + fmt_double(box.min) + ',' +
               fmt_double(box.q1) + ',' + fmt_double(box.median) + ',' +
               fmt_double(box.q3) + ',' + fmt_double(box.max) + ',' +
               csv_escape(dist.dump()) + '\n';
    }
    return out;
}

nlohmann::json to_json(const metrics::DensityReport& report) {
    nlohmann::json j;
    j["group_by"] = group_name(report.group_by);
    j["level"] = level_name(report.level);
    j["granularity"] =
        report.granularity == metrics::SampleGranularity::Unit ? "unit" : "segment";
    j["pooled"] = report.pooled;
    j["rows"] = nlohmann::json::array();
    for (const metrics::DensityRow& row : report.rows) {
        nlohmann::json rj;
        rj["key"] = row.key;
        rj["n_samples"] = row.n_samples;
        rj["mean_density_char"] = row.mean_density_char;
        rj["mean_density_word"] = row.mean_density_word;
        rj["box"] = box_json(metrics::box_stats(row.per_sample));
        rj["per_sample"] = row.per_sample;
        j["rows"].push_back(std::move(rj));
    }
    return j;
}

std::string to_csv(const analyze::EmbeddingResult& result) {
    std::string out = "x,y,scribe,codex,unit,segment\n";
    for (std::size_t i = 0; i < result.coords.rows; ++i) {
        const SegmentRef& ref = result.labels[i];
        out += fmt_double(result.coords.at(i, 0)) + ',' +
               fmt_double(result.coords.at(i, 1)) + ',' + csv_escape(ref.scribe) + ',' +
               csv_escape(ref.codex_id) + ',' + csv_escape(ref.unit_id) + ',' +
               std::to_string(ref.index) + '\n';
    }
    return out;
}

nlohmann::json to_json(const analyze::EmbeddingResult& result) {
    nlohmann::json j;
    j["method"] = method_name(result.method);
    j["seed"] = result.seed;
    j["points"] = nlohmann::json::array();
    for (std::size_t i = 0; i < result.coords.rows; ++i) {
        nlohmann::json p = segment_ref_json(result.labels[i]);
        p["x"] = result.coords.at(i, 0);
        p["y"] = result.coords.at(i, 1);
        j["points"].push_back(std::move(p));
    }
    return j;
}

std::string to_csv(const analyze::OutlierReport& report) {
    std::string out = "codex,unit,n_segments,n_inliers,n_outliers,outlier_fraction\n";
    for (const analyze::OutlierRow& row : report.rows) {
        out += csv_escape(row.codex_id) + ',' + csv_escape(row.unit_id) + ',' +
               std::to_string(row.n_segments) + ',' + std::to_string(row.n_inliers) +
               ',' + std::to_string(row.n_outliers) + ',' +
               fmt_double(row.outlier_fraction) + '\n';
    }
    return out;
}

nlohmann::json to_json(const analyze::OutlierReport& report) {
    nlohmann::json j;
    j["scribe"] = report.scribe;
    j["aggregated_by"] = aggregate_name(report.aggregated_by);
    j["nu"] = report.params.nu;
    j["gamma"] = report.params.gamma <= 0 ? nlohmann::json("scale")
                                          : nlohmann::json(report.params.gamma);
    j["seed"] = report.params.seed;
    j["rows"] = nlohmann::json::array();
    for (const analyze::OutlierRow& row : report.rows) {
        nlohmann::json rj;
        rj["codex"] = row.codex_id;
        if (!row.unit_id.empty())
            rj["unit"] = row.unit_id;
        rj["n_segments"] = row.n_segments;
        rj["n_inliers"] = row.n_inliers;
        rj["n_outliers"] = row.n_outliers;
        rj["outlier_fraction"] = row.outlier_fraction;
        j["rows"].push_back(std::move(rj));
    }
    return j;
}

std::string to_csv(const analyze::ImportanceReport& report) {
    std::string out =
        "rank,bigram,mdi,target_mean_tfidf,rest_mean_tfidf,"
        "target_min,target_q1,target_median,target_q3,target_max,"
        "rest_min,rest_q1,rest_median,rest_q3,rest_max\n";
    std::size_t rank = 1;
    for (const analyze::ImportanceFeature& f : report.features) {
        out += std::to_string(rank++) + ',' + csv_escape(f.bigram.repr()) + ',' +
               fmt_double(f.mdi) + ',' + fmt_double(f.target_mean_tfidf) + ',' +
               fmt_double(f.rest_mean_tfidf) + ',' + fmt_double(f.target_box.min) +
               ',' + fmt_double(f.target_box.q1) + ',' +
               fmt_double(f.target_box.median) + ',' + fmt_double(f.target_box.q3) +
               ',' + fmt_double(f.target_box.max) + ',' + fmt_double(f.rest_box.min) +
               ',' + fmt_double(f.rest_box.q1) + ',' + fmt_double(f.rest_box.median) +
               ',' + fmt_double(f.rest_box.q3) + ',' + fmt_double(f.rest_box.max) +
               '\n';
    }
    return out;
}

nlohmann::json to_json(const analyze::ImportanceReport& report) {
    nlohmann::json j;
    j["scribe"] = report.scribe;
    j["target"] = {{"codex", report.target_codex}, {"unit", report.target_unit}};
    j["top_m"] = report.top_m;
    j["n_trees"] = report.params.n_trees;
    j["seed"] = report.params.seed;
    j["features"] = nlohmann::json::array();
    for (const analyze::ImportanceFeature& f : report.features) {
        nlohmann::json fj;
        fj["bigram"] = f.bigram.repr();
        fj["first"] = f.bigram.first;
        fj["second"] = f.bigram.second;
        fj["mdi"] = f.mdi;
        fj["target_mean_tfidf"] = f.target_mean_tfidf;
        fj["rest_mean_tfidf"] = f.rest_mean_tfidf;
        fj["target_box"] = box_json(f.target_box);
        fj["rest_box"] = box_json(f.rest_box);
        j["features"].push_back(std::move(fj));
    }
    return j;
}

std::string to_csv(const analyze::AttributionReport& report) {
    std::string out = "codex,unit,segment,predicted\n";
    for (const analyze::AttributionRow& row : report.rows) {
        out += csv_escape(row.segment.codex_id) + ',' +
               csv_escape(row.segment.unit_id) + ',' +
               std::to_string(row.segment.index) + ',' + csv_escape(row.predicted) +
               '\n';
    }
    return out;
}

nlohmann::json to_json(const analyze::AttributionReport& report) {
    nlohmann::json j;
    j["query"] = report.query_label;
    j["verdict"] = report.verdict;
    j["k"] = report.params.knn_k;
    j["votes"] = report.votes;
    j["segments"] = nlohmann::json::array();
    for (const analyze::AttributionRow& row : report.rows) {
        nlohmann::json rj = segment_ref_json(row.segment);
        rj["predicted"] = row.predicted;
        j["segments"].push_back(std::move(rj));
    }
    return j;
}

std::string to_csv(const FeatureMatrix& matrix) {
    std::string out = "codex,unit,scribe,segment";
    for (const Bigram& b : matrix.col_labels)
        out += ',' + csv_escape(b.repr());
    out += '\n';
    for (std::size_t i = 0; i < matrix.values.rows; ++i) {
        const SegmentRef& ref = matrix.row_labels[i];
        out += csv_escape(ref.codex_id) + ',' + csv_escape(ref.unit_id) + ',' +
               csv_escape(ref.scribe) + ',' + std::to_string(ref.index);
        for (std::size_t j = 0; j < matrix.values.cols; ++j)
            out += ',' + fmt_double(matrix.values.at(i, j));
        out += '\n';
    }
    return out;
}

nlohmann::json vocab_to_json(std::span<const VocabEntry> vocab) {
    nlohmann::json j = nlohmann::json::array();
    for (const VocabEntry& v : vocab)
        j.push_back({{"first", v.bigram.first},
                     {"second", v.bigram.second},
                     {"count", v.count}});
    return j;
}

std::string segment_table_csv(std::span<const Segment> segments) {
    std::string out = "codex,unit,scribe,segment,n_clusters\n";
    for (const Segment& s : segments) {
        out += csv_escape(s.codex_id) + ',' + csv_escape(s.unit_id) + ',' +
               csv_escape(s.scribe) + ',' + std::to_string(s.index) + ',' +
               std::to_string(s.clusters.size()) + '\n';
    }
    return out;
}

} // namespace scribe::io
