#include "doctest.h"

#include <set>

#include "scribe/analyze.hpp"
#include "scribe/errors.hpp"
#include "support/corpora.hpp"
#include "support/silhouette.hpp"

using namespace scribe;
using namespace scribe::analyze;

namespace {

PipelineParams small_params() {
    PipelineParams p;
    p.segment_size = 400; // desk-scale segments keep the tests quick
    p.top_k = 40;
    p.pca_dims = 10;
    p.min_segments = 3;
    p.seed = 42;
    return p;
}

std::vector<std::vector<double>> coord_rows(const EmbeddingResult& r) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < r.coords.rows; ++i)
        rows.push_back({r.coords.at(i, 0), r.coords.at(i, 1)});
    return rows;
}

std::vector<std::string> scribe_labels(const EmbeddingResult& r) {
    std::vector<std::string> out;
    for (const SegmentRef& ref : r.labels)
        out.push_back(ref.scribe);
    return out;
}

} // namespace

TEST_CASE("scatter separates two disjoint habit profiles") {
    // ~8 segments per scribe at 400 clusters per segment
    const auto corpus = testsupport::two_scribe_corpus(2, 1700, 7);
    const PipelineParams params = small_params();
    const EmbeddingResult res = scatter_analysis(corpus, params);
    CHECK(res.coords.rows == 16);
    CHECK(testsupport::silhouette(coord_rows(res), scribe_labels(res)) > 0.5);
}

TEST_CASE("scatter drops scribes below min_segments") {
    auto corpus = testsupport::two_scribe_corpus(2, 1700, 11);
    // a third scribe with a single short unit: 2 segments < min_segments=3
    auto extra = testsupport::units_from_profile(testsupport::tironian_profile(5),
                                                 "gamma", "Codex C", 1, 900);
    corpus.insert(corpus.end(), extra.begin(), extra.end());

    const EmbeddingResult res = scatter_analysis(corpus, small_params());
    std::set<std::string> seen;
    for (const SegmentRef& ref : res.labels)
        seen.insert(ref.scribe);
    CHECK(seen == std::set<std::string>{"alpha", "beta"});
}

TEST_CASE("scatter needs two surviving scribes") {
    const auto corpus = testsupport::units_from_profile(
        testsupport::macron_profile(3), "alpha", "Codex A", 2, 1700);
    CHECK_THROWS_AS(scatter_analysis(corpus, small_params()), InsufficientScribes);
}

TEST_CASE("pairwise scatter rejects identical labels and separates habits") {
    const auto corpus = testsupport::two_scribe_corpus(2, 1700, 19);
    CHECK_THROWS_AS(pairwise_scatter(corpus, "alpha", "alpha", small_params()),
                    DuplicateLabel);
    const EmbeddingResult res = pairwise_scatter(corpus, "alpha", "beta", small_params());
    CHECK(testsupport::silhouette(coord_rows(res), scribe_labels(res)) > 0.5);
}

TEST_CASE("exclusion rerun never changes the retained rows") {
    auto corpus = testsupport::two_scribe_corpus(2, 1700, 23);
    auto extra = testsupport::units_from_profile(testsupport::tironian_profile(29),
                                                 "gamma", "Codex C", 2, 1700);
    corpus.insert(corpus.end(), extra.begin(), extra.end());

    const EmbeddingResult with_gamma = scatter_analysis(corpus, small_params());
    const EmbeddingResult pair = pairwise_scatter(corpus, "alpha", "beta", small_params());

    std::vector<SegmentRef> kept;
    for (const SegmentRef& ref : with_gamma.labels)
        if (ref.scribe != "gamma")
            kept.push_back(ref);
    REQUIRE(kept.size() == pair.labels.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        CHECK(kept[i].codex_id == pair.labels[i].codex_id);
        CHECK(kept[i].unit_id == pair.labels[i].unit_id);
        CHECK(kept[i].index == pair.labels[i].index);
    }
}

TEST_CASE("downsampled scatter: counts, determinism, errors") {
    auto corpus = testsupport::two_scribe_corpus(3, 1700, 31); // 12 segments each
    auto extra = testsupport::units_from_profile(testsupport::tironian_profile(37),
                                                 "gamma", "Codex C", 2, 1700);
    corpus.insert(corpus.end(), extra.begin(), extra.end()); // 8 segments

    const std::vector<std::string> labels = {"alpha", "beta", "gamma"};
    PipelineParams params = small_params();
    const EmbeddingResult res = downsampled_scatter(corpus, labels, 5, params);
    std::map<std::string, std::size_t> counts;
    for (const SegmentRef& ref : res.labels)
        ++counts[ref.scribe];
    CHECK(res.coords.rows == 15);
    CHECK(counts["alpha"] == 5);
    CHECK(counts["beta"] == 5);
    CHECK(counts["gamma"] == 5);

    // same seed: bit-identical; different seed: different sample
    const EmbeddingResult res2 = downsampled_scatter(corpus, labels, 5, params);
    CHECK(res.coords == res2.coords);
    params.seed = 43;
    const EmbeddingResult res3 = downsampled_scatter(corpus, labels, 5, params);
    bool same_rows = res3.labels.size() == res.labels.size();
    if (same_rows)
        for (std::size_t i = 0; i < res.labels.size(); ++i)
            same_rows = same_rows && res.labels[i].unit_id == res3.labels[i].unit_id &&
                        res.labels[i].index == res3.labels[i].index;
    CHECK_FALSE(same_rows);

    CHECK_THROWS_AS(downsampled_scatter(corpus, labels, 10, params), NotEnoughSegments);
    const std::vector<std::string> dup = {"alpha", "alpha"};
    CHECK_THROWS_AS(downsampled_scatter(corpus, dup, 2, params), DuplicateLabel);
}

TEST_CASE("per-label downsampling streams are independent") {
    auto corpus = testsupport::two_scribe_corpus(3, 1700, 41);
    PipelineParams params = small_params();
    const std::vector<std::string> both = {"alpha", "beta"};
    const std::vector<std::string> alpha_only = {"alpha"};

    const EmbeddingResult ab = downsampled_scatter(corpus, both, 5, params);
    // adding beta must not change which alpha segments are drawn
    std::vector<std::pair<std::string, std::size_t>> alpha_rows_ab;
    for (const SegmentRef& ref : ab.labels)
        if (ref.scribe == "alpha")
            alpha_rows_ab.push_back({ref.unit_id, ref.index});

    const EmbeddingResult a = downsampled_scatter(corpus, alpha_only, 5, params);
    std::vector<std::pair<std::string, std::size_t>> alpha_rows_a;
    for (const SegmentRef& ref : a.labels)
        alpha_rows_a.push_back({ref.unit_id, ref.index});
    CHECK(alpha_rows_ab == alpha_rows_a);
}

TEST_CASE("leave-one-unit-out outlier analysis finds the planted unit") {
    // 8 units from the macron habit, 1 planted unit from the tilde habit;
    // 8 segments per unit keeps the held-out boundary effect small
    auto docs = testsupport::units_from_profile(testsupport::macron_profile(51),
                                                "alpha", "Codex A", 8, 5100);
    auto planted = testsupport::units_from_profile(testsupport::tilde_profile(52),
                                                   "alpha", "Codex P", 1, 5100);
    docs.insert(docs.end(), planted.begin(), planted.end());

    PipelineParams params = small_params();
    params.segment_size = 600;
    params.top_k = 40;
    const OutlierReport by_unit =
        loo_outlier_analysis(docs, "alpha", params, AggregateBy::Unit);
    REQUIRE(by_unit.rows.size() == 9);

    double planted_fraction = -1;
    double normal_sum = 0;
    std::size_t total_segments = 0;
    for (const OutlierRow& row : by_unit.rows) {
        CHECK(row.n_inliers + row.n_outliers == row.n_segments);
        total_segments += row.n_segments;
        if (row.codex_id == "Codex P")
            planted_fraction = row.outlier_fraction;
        else
            normal_sum += row.outlier_fraction;
    }
    CHECK(total_segments == 9 * 8);
    CHECK(planted_fraction >= 0.9);
    CHECK(normal_sum / 8.0 <= params.nu + 0.15);

    // codex-level aggregation partitions the unit rows
    const OutlierReport by_codex =
        loo_outlier_analysis(docs, "alpha", params, AggregateBy::Codex);
    REQUIRE(by_codex.rows.size() == 2);
    std::size_t agg_total = 0;
    for (const OutlierRow& row : by_codex.rows)
        agg_total += row.n_segments;
    CHECK(agg_total == total_segments);
    CHECK(by_codex.rows[1].codex_id == "Codex P");
    CHECK(by_codex.rows[1].outlier_fraction >= 0.9);
}

TEST_CASE("duplicated unit is in-distribution") {
    auto docs = testsupport::units_from_profile(testsupport::macron_profile(61),
                                                "alpha", "Codex A", 8, 5100);
    // unit 99 duplicates unit 1's text
    ProductionUnitDoc dup = docs[0];
    dup.unit_id = "99";
    docs.push_back(std::move(dup));

    PipelineParams params = small_params();
    params.segment_size = 600;
    params.top_k = 40;
    const OutlierReport rep =
        loo_outlier_analysis(docs, "alpha", params, AggregateBy::Unit);
    const OutlierRow& dup_row = rep.rows.back();
    CHECK(dup_row.unit_id == "99");
    // nu bounds the boundary effect: duplicates of training rows can only
    // be flagged when their twins are bounded support vectors
    CHECK(dup_row.outlier_fraction <= 0.25);
}

TEST_CASE("loo outlier analysis needs two units") {
    const auto docs = testsupport::units_from_profile(testsupport::macron_profile(71),
                                                      "alpha", "Codex A", 1, 1700);
    CHECK_THROWS_AS(loo_outlier_analysis(docs, "alpha", small_params()), SingleUnit);
}

TEST_CASE("importance analysis ranks the planted contrast on top") {
    // target unit lacks the macron habit that the rest of the corpus has
    auto docs = testsupport::units_from_profile(testsupport::macron_profile(81),
                                                "alpha", "Codex A", 5, 1700);
    auto target = testsupport::units_from_profile(testsupport::tilde_profile(82),
                                                  "alpha", "Codex T", 1, 1700);
    docs.insert(docs.end(), target.begin(), target.end());

    PipelineParams params = small_params();
    params.n_trees = 100;
    const ImportanceReport rep =
        importance_analysis(docs, "alpha", "Codex T", "1", params, 5);

    REQUIRE(!rep.features.empty());
    double sum = 0;
    double prev = 1e300;
    for (const ImportanceFeature& f : rep.features) {
        CHECK(f.mdi <= prev + 1e-12);
        prev = f.mdi;
        sum += f.mdi;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    // a macron bigram must rank in the top 3
    bool macron_on_top = false;
    for (std::size_t i = 0; i < 3 && i < rep.features.size(); ++i)
        if (rep.features[i].bigram.repr().find("ē") != std::string::npos ||
            rep.features[i].bigram.repr().find("ī") != std::string::npos)
            macron_on_top = true;
    CHECK(macron_on_top);

    CHECK_THROWS_AS(
        importance_analysis(docs, "alpha", "Codex X", "1", params, 5), EmptyClass);
}

TEST_CASE("attribution: duplicated habits vote for their source") {
    auto corpus = testsupport::two_scribe_corpus(3, 1700, 91);
    // query scribe writes exactly like alpha (same profile, different seed)
    auto query = testsupport::units_from_profile(testsupport::macron_profile(97),
                                                 "query", "Codex Q", 2, 1700);
    corpus.insert(corpus.end(), query.begin(), query.end());

    const std::vector<std::string> refs = {"alpha", "beta"};
    const AttributionReport rep =
        attribute_segments(corpus, "query", refs, small_params());
    CHECK(rep.verdict == "alpha");
    CHECK(rep.rows.size() == 8);
    CHECK(rep.votes.at("alpha") >= 5);

    CHECK_THROWS_AS(attribute_segments(corpus, "nobody", refs, small_params()),
                    EmptyQuery);
    const std::vector<std::string> none = {"ghost"};
    CHECK_THROWS_AS(attribute_segments(corpus, "query", none, small_params()),
                    EmptyReference);
    const std::vector<std::string> dup = {"alpha", "alpha"};
    CHECK_THROWS_AS(attribute_segments(corpus, "query", dup, small_params()),
                    DuplicateLabel);
}

TEST_CASE("query segments duplicated from a reference attribute perfectly") {
    auto corpus = testsupport::two_scribe_corpus(2, 1700, 101);
    // clone alpha's first unit as the query scribe
    ProductionUnitDoc clone = corpus[0];
    clone.scribe = "query";
    clone.codex_id = "Codex Q";
    corpus.push_back(std::move(clone));

    const std::vector<std::string> refs = {"alpha", "beta"};
    const AttributionReport rep =
        attribute_segments(corpus, "query", refs, small_params());
    CHECK(rep.verdict == "alpha");
    for (const AttributionRow& row : rep.rows)
        CHECK(row.predicted == "alpha");
}

TEST_CASE("workflows are deterministic") {
    const auto corpus = testsupport::two_scribe_corpus(2, 1700, 111);
    const PipelineParams params = small_params();
    const EmbeddingResult a = scatter_analysis(corpus, params);
    const EmbeddingResult b = scatter_analysis(corpus, params);
    CHECK(a.coords == b.coords);

    const OutlierReport oa = loo_outlier_analysis(corpus, "alpha", params);
    const OutlierReport ob = loo_outlier_analysis(corpus, "alpha", params);
    REQUIRE(oa.rows.size() == ob.rows.size());
    for (std::size_t i = 0; i < oa.rows.size(); ++i)
        CHECK(oa.rows[i].n_outliers == ob.rows[i].n_outliers);
}
