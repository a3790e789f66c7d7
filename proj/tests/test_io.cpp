#include "doctest.h"

#include "scribe/report_io.hpp"
#include "scribe/svg.hpp"
#include "support/corpora.hpp"

using namespace scribe;

TEST_CASE("csv escaping") {
    CHECK(io::csv_escape("plain") == "plain");
    CHECK(io::csv_escape("a,b") == "\"a,b\"");
    CHECK(io::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(io::csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(io::csv_escape("Vienna, ÖNB, SN 65") == "\"Vienna, ÖNB, SN 65\"");
}

TEST_CASE("fmt_double is deterministic and compact") {
    CHECK(io::fmt_double(0.5) == "0.5");
    CHECK(io::fmt_double(1.0) == "1");
    CHECK(io::fmt_double(1.0 / 3.0) == io::fmt_double(1.0 / 3.0));
}

TEST_CASE("stats csv and json carry the table columns") {
    const auto corpus = testsupport::two_scribe_corpus(2, 900, 3);
    const auto stats = metrics::corpus_stats(corpus, 400);
    const std::string csv = io::to_csv(stats);
    CHECK(csv.find("scribe,codices,production_units,chars_codepoint,"
                   "chars_grapheme,segments,unique_characters,ttr") == 0);
    CHECK(csv.find("alpha") != std::string::npos);
    const nlohmann::json j = io::to_json(stats);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0].contains("ttr"));
}

TEST_CASE("density report serialization") {
    const auto corpus = testsupport::two_scribe_corpus(2, 900, 5);
    const auto report = metrics::density_report(corpus, metrics::GroupBy::Scribe,
                                                metrics::DensityLevel::Character);
    const std::string csv = io::to_csv(report);
    CHECK(csv.find("group,n_samples") == 0);
    const nlohmann::json j = io::to_json(report);
    CHECK(j["group_by"] == "scribe");
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["box"].contains("median"));
    CHECK(j["rows"][0]["per_sample"].size() == 2);
}

TEST_CASE("embedding, outlier, importance, attribution serialization") {
    const auto corpus = testsupport::two_scribe_corpus(2, 1700, 7);
    analyze::PipelineParams params;
    params.segment_size = 400;
    params.top_k = 30;
    params.pca_dims = 8;
    params.min_segments = 2;

    const auto emb = analyze::scatter_analysis(corpus, params);
    const std::string emb_csv = io::to_csv(emb);
    CHECK(emb_csv.find("x,y,scribe,codex,unit,segment") == 0);
    CHECK(io::to_json(emb)["points"].size() == emb.coords.rows);
    const std::string svg_text = svg::scatter_plot(emb, "scatter");
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("alpha") != std::string::npos); // legend label
    CHECK(svg_text.find("</svg>") != std::string::npos);

    const auto outliers = analyze::loo_outlier_analysis(corpus, "alpha", params);
    CHECK(io::to_csv(outliers).find("codex,unit,n_segments") == 0);
    CHECK(io::to_json(outliers)["scribe"] == "alpha");
    CHECK(svg::outlier_bars(outliers, "bars").find("</svg>") != std::string::npos);

    const auto imp =
        analyze::importance_analysis(corpus, "alpha", "Codex A", "1", params, 3);
    const nlohmann::json ij = io::to_json(imp);
    CHECK(ij["features"].size() == imp.features.size());
    CHECK(io::to_csv(imp).find("rank,bigram,mdi") == 0);
    CHECK(svg::importance_boxplot(imp, "imp").find("</svg>") != std::string::npos);

    const std::vector<std::string> refs = {"beta"};
    const auto att = analyze::attribute_segments(corpus, "alpha", refs, params);
    CHECK(io::to_csv(att).find("codex,unit,segment,predicted") == 0);
    CHECK(io::to_json(att)["verdict"] == "beta"); // only reference available
}

TEST_CASE("feature matrix export") {
    const auto corpus = testsupport::two_scribe_corpus(1, 900, 9);
    const auto segs = segment_corpus(corpus, 400);
    const auto vocab = build_vocab(segs, 10);
    const FeatureMatrix fm = vectorize(segs, vocab);
    const std::string csv = io::to_csv(fm);
    CHECK(csv.find("codex,unit,scribe,segment") == 0);
    const nlohmann::json vj = io::vocab_to_json(vocab);
    CHECK(vj.size() == vocab.size());
    CHECK(vj[0].contains("count"));

    const std::string seg_csv = io::segment_table_csv(segs);
    CHECK(seg_csv.find("codex,unit,scribe,segment,n_clusters") == 0);
}

TEST_CASE("svg output is deterministic") {
    const auto corpus = testsupport::two_scribe_corpus(2, 900, 11);
    analyze::PipelineParams params;
    params.segment_size = 400;
    params.top_k = 20;
    params.pca_dims = 4;
    params.min_segments = 2;
    const auto emb = analyze::scatter_analysis(corpus, params);
    CHECK(svg::scatter_plot(emb, "t") == svg::scatter_plot(emb, "t"));
}
