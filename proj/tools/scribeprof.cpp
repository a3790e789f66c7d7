// scribeprof: scribal-profiling toolkit for graphematic transcriptions.
//
// Subcommands: stats | density | scatter | pairwise | downsample |
// outliers | importance | attribute | synth. Every command is seeded and
// writes byte-identical reports for identical (config, corpus) inputs.
// Exit codes: 0 ok, 2 config error, 3 data error, 4 analysis error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scribe/analyze.hpp"
#include "scribe/corpus.hpp"
#include "scribe/errors.hpp"
#include "scribe/report_io.hpp"
#include "scribe/rng.hpp"
#include "scribe/svg.hpp"
#include "scribe/synth.hpp"

namespace {

namespace fs = std::filesystem;
using namespace scribe;

struct RunConfig {
    std::string manifest_path;
    std::string inventory_path;
    std::size_t segment_size = kDefaultSegmentSize;
    std::size_t top_k = 100;
    std::size_t pca_dims = 25;
    std::string embed_method = "pca2d";
    double nu = 0.1;
    std::string gamma = "scale";
    std::size_t n_trees = 200;
    std::size_t min_segments = 10;
    std::size_t knn_k = 1;
    std::uint64_t seed = 42;
    std::string output_dir = ".";
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config file: ") + e.what());
    }
    if (j.contains("manifest"))
        cfg.manifest_path = j["manifest"].get<std::string>();
    if (j.contains("inventory"))
        cfg.inventory_path = j["inventory"].get<std::string>();
    if (j.contains("segment_size"))
        cfg.segment_size = j["segment_size"].get<std::size_t>();
    if (j.contains("top_k"))
        cfg.top_k = j["top_k"].get<std::size_t>();
    if (j.contains("pca_dims"))
        cfg.pca_dims = j["pca_dims"].get<std::size_t>();
    if (j.contains("embed_method"))
        cfg.embed_method = j["embed_method"].get<std::string>();
    if (j.contains("nu"))
        cfg.nu = j["nu"].get<double>();
    if (j.contains("gamma"))
        cfg.gamma = j["gamma"].is_number()
                        ? io::fmt_double(j["gamma"].get<double>())
                        : j["gamma"].get<std::string>();
    if (j.contains("trees"))
        cfg.n_trees = j["trees"].get<std::size_t>();
    if (j.contains("min_segments"))
        cfg.min_segments = j["min_segments"].get<std::size_t>();
    if (j.contains("knn_k"))
        cfg.knn_k = j["knn_k"].get<std::size_t>();
    if (j.contains("seed"))
        cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out"))
        cfg.output_dir = j["out"].get<std::string>();
}

analyze::PipelineParams pipeline_params(const RunConfig& cfg) {
    analyze::PipelineParams p;
    p.segment_size = cfg.segment_size;
    p.top_k = cfg.top_k;
    p.pca_dims = cfg.pca_dims;
    if (cfg.embed_method == "pca2d")
        p.method = EmbedMethod::Pca2d;
    else if (cfg.embed_method == "neighbor")
        p.method = EmbedMethod::Neighbor;
    else
        throw ConfigError("embed method must be pca2d or neighbor, got " +
                          cfg.embed_method);
    p.min_segments = cfg.min_segments;
    p.nu = cfg.nu;
    if (cfg.gamma == "scale") {
        p.gamma = 0.0;
    } else {
        try {
            p.gamma = std::stod(cfg.gamma);
        } catch (...) {
            throw ConfigError("gamma must be 'scale' or a number, got " + cfg.gamma);
        }
        if (p.gamma <= 0.0)
            throw ConfigError("numeric gamma must be > 0");
    }
    p.n_trees = cfg.n_trees;
    p.knn_k = cfg.knn_k;
    p.seed = cfg.seed;
    if (p.nu <= 0.0 || p.nu > 1.0)
        throw ConfigError("nu must be in (0, 1]");
    if (p.segment_size == 0 || p.top_k == 0 || p.pca_dims == 0 || p.n_trees == 0 ||
        p.knn_k == 0)
        throw ConfigError("segment-size, top-k, pca-dims, trees and knn-k must be >= 1");
    return p;
}

IngestOptions ingest_options(const RunConfig& cfg) {
    IngestOptions opts;
    if (!cfg.inventory_path.empty())
        opts.inventory = BrevigraphInventory::from_json_file(cfg.inventory_path);
    return opts;
}

std::vector<ProductionUnitDoc> load(const RunConfig& cfg) {
    if (cfg.manifest_path.empty())
        throw ConfigError("--manifest is required for this command");
    const Manifest manifest = load_manifest(cfg.manifest_path);
    return load_corpus(manifest, ingest_options(cfg));
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << content;
}

void write_outputs(const RunConfig& cfg, const std::string& command,
                   const std::string& csv, const nlohmann::json& json,
                   const std::optional<std::string>& svg = std::nullopt) {
    const fs::path dir(cfg.output_dir);
    write_file(dir / (command + ".csv"), csv);
    write_file(dir / (command + ".json"), json.dump(2) + "\n");
    if (svg)
        write_file(dir / (command + ".svg"), *svg);
}

CLI::App* add_sub(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough(); // global flags may follow the subcommand
    return sub;
}

int run(int argc, char** argv) {
    CLI::App app{"scribal profiling from graphematic transcriptions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_file;
    app.add_option("--config", config_file, "JSON config file (flags win)");
    app.add_option("--manifest", cfg.manifest_path, "corpus manifest (JSON array)");
    app.add_option("--inventory", cfg.inventory_path, "brevigraph inventory JSON");
    app.add_option("--segment-size", cfg.segment_size, "grapheme clusters per segment");
    app.add_option("--top-k", cfg.top_k, "bigram vocabulary size");
    app.add_option("--pca-dims", cfg.pca_dims, "PCA dimensionality");
    app.add_option("--embed-method", cfg.embed_method, "pca2d | neighbor");
    app.add_option("--nu", cfg.nu, "one-class SVM nu");
    app.add_option("--gamma", cfg.gamma, "RBF gamma ('scale' or a number)");
    app.add_option("--trees", cfg.n_trees, "random forest size");
    app.add_option("--min-segments", cfg.min_segments, "scatter scribe filter");
    app.add_option("--knn-k", cfg.knn_k, "neighbours for attribution");
    app.add_option("--seed", cfg.seed, "master RNG seed");
    app.add_option("--out", cfg.output_dir, "output directory");

    auto* cmd_stats = add_sub(app, "stats", "per-scribe corpus statistics");
    auto* cmd_density = add_sub(app, "density", "abbreviation densities");
    std::string group_by = "scribe";
    std::string level = "character";
    std::string granularity = "unit";
    bool pooled = false;
    cmd_density->add_option("--group-by", group_by, "scribe | codex | unit | codex-unit");
    cmd_density->add_option("--level", level, "character | word");
    cmd_density->add_option("--granularity", granularity, "unit | segment samples");
    cmd_density->add_flag("--pooled", pooled, "pooled counts instead of sample means");

    auto* cmd_scatter = add_sub(app, "scatter", "2-D stylometric scatter");
    auto* cmd_pairwise = add_sub(app, "pairwise", "two-scribe scatter");
    std::vector<std::string> pair_labels;
    cmd_pairwise->add_option("--scribes", pair_labels, "exactly two labels")
        ->expected(2)
        ->required();

    auto* cmd_down = add_sub(app, "downsample", "balanced scatter");
    std::vector<std::string> down_labels;
    std::size_t n_per_scribe = 0;
    cmd_down->add_option("--scribes", down_labels, "labels to include")->required();
    cmd_down->add_option("--per-scribe", n_per_scribe, "segments per label")->required();

    auto* cmd_outliers = add_sub(app, "outliers", "leave-one-unit-out OCSVM");
    std::string outlier_scribe;
    std::string aggregate = "codex";
    cmd_outliers->add_option("--scribe", outlier_scribe, "scribe label")->required();
    cmd_outliers->add_option("--aggregate-by", aggregate, "codex | unit");

    auto* cmd_importance = add_sub(app, "importance", "RF feature importances");
    std::string imp_scribe, imp_codex, imp_unit;
    std::size_t top_m = 10;
    cmd_importance->add_option("--scribe", imp_scribe)->required();
    cmd_importance->add_option("--target-codex", imp_codex)->required();
    cmd_importance->add_option("--target-unit", imp_unit)->required();
    cmd_importance->add_option("--top-m", top_m, "features plotted");

    auto* cmd_attribute = add_sub(app, "attribute", "kNN attribution");
    std::string query_label;
    std::vector<std::string> ref_labels;
    cmd_attribute->add_option("--query", query_label)->required();
    cmd_attribute->add_option("--refs", ref_labels, "reference labels")->required();

    auto* cmd_synth = add_sub(app, "synth", "generate a synthetic corpus");
    std::string profiles_path;
    std::size_t synth_units = 4;
    std::size_t synth_clusters = 12000;
    cmd_synth->add_option("--profiles", profiles_path, "JSON list of habit profiles")
        ->required();
    cmd_synth->add_option("--units", synth_units, "production units per profile");
    cmd_synth->add_option("--unit-clusters", synth_clusters, "clusters per unit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!config_file.empty()) {
        // precedence: flag > config file > built-in default
        RunConfig file_cfg;
        apply_config_file(file_cfg, config_file);
        auto fill = [&](const char* flag, auto& target, const auto& from_file) {
            if (app.count(flag) == 0)
                target = from_file;
        };
        fill("--manifest", cfg.manifest_path, file_cfg.manifest_path);
        fill("--inventory", cfg.inventory_path, file_cfg.inventory_path);
        fill("--segment-size", cfg.segment_size, file_cfg.segment_size);
        fill("--top-k", cfg.top_k, file_cfg.top_k);
        fill("--pca-dims", cfg.pca_dims, file_cfg.pca_dims);
        fill("--embed-method", cfg.embed_method, file_cfg.embed_method);
        fill("--nu", cfg.nu, file_cfg.nu);
        fill("--gamma", cfg.gamma, file_cfg.gamma);
        fill("--trees", cfg.n_trees, file_cfg.n_trees);
        fill("--min-segments", cfg.min_segments, file_cfg.min_segments);
        fill("--knn-k", cfg.knn_k, file_cfg.knn_k);
        fill("--seed", cfg.seed, file_cfg.seed);
        fill("--out", cfg.output_dir, file_cfg.output_dir);
    }

    if (cmd_stats->parsed()) {
        const auto docs = load(cfg);
        const auto stats = metrics::corpus_stats(docs, cfg.segment_size);
        write_outputs(cfg, "stats", io::to_csv(stats), io::to_json(stats));
        std::cout << "stats: " << stats.size() << " scribes, "
                  << docs.size() << " production units\n";
        return 0;
    }
    if (cmd_density->parsed()) {
        const auto docs = load(cfg);
        metrics::GroupBy gb;
        if (group_by == "scribe")
            gb = metrics::GroupBy::Scribe;
        else if (group_by == "codex")
            gb = metrics::GroupBy::Codex;
        else if (group_by == "unit")
            gb = metrics::GroupBy::Unit;
        else if (group_by == "codex-unit")
            gb = metrics::GroupBy::CodexUnit;
        else
            throw ConfigError("bad --group-by " + group_by);
        metrics::DensityLevel lv;
        if (level == "character")
            lv = metrics::DensityLevel::Character;
        else if (level == "word")
            lv = metrics::DensityLevel::Word;
        else
            throw ConfigError("bad --level " + level);
        metrics::DensityOptions opts;
        if (granularity == "segment")
            opts.granularity = metrics::SampleGranularity::Segment;
        else if (granularity != "unit")
            throw ConfigError("bad --granularity " + granularity);
        opts.segment_size = cfg.segment_size;
        opts.pooled = pooled;
        const auto report = metrics::density_report(docs, gb, lv, opts);
        write_outputs(cfg, "density", io::to_csv(report), io::to_json(report),
                      svg::density_boxplot(report, "Abbreviation density (" + level +
                                                       " level) by " + group_by));
        std::cout << "density: " << report.rows.size() << " groups\n";
        return 0;
    }
    if (cmd_scatter->parsed()) {
        const auto docs = load(cfg);
        const auto result = analyze::scatter_analysis(docs, pipeline_params(cfg));
        write_outputs(cfg, "scatter", io::to_csv(result), io::to_json(result),
                      svg::scatter_plot(result, "Stylometric scatter"));
        std::cout << "scatter: " << result.coords.rows << " segments embedded\n";
        return 0;
    }
    if (cmd_pairwise->parsed()) {
        const auto docs = load(cfg);
        const auto result = analyze::pairwise_scatter(docs, pair_labels[0],
                                                      pair_labels[1],
                                                      pipeline_params(cfg));
        write_outputs(cfg, "pairwise", io::to_csv(result), io::to_json(result),
                      svg::scatter_plot(result, pair_labels[0] + " vs " +
                                                    pair_labels[1]));
        std::cout << "pairwise: " << result.coords.rows << " segments embedded\n";
        return 0;
    }
    if (cmd_down->parsed()) {
        const auto docs = load(cfg);
        const auto result = analyze::downsampled_scatter(docs, down_labels,
                                                         n_per_scribe,
                                                         pipeline_params(cfg));
        write_outputs(cfg, "downsample", io::to_csv(result), io::to_json(result),
                      svg::scatter_plot(result, "Balanced scatter"));
        std::cout << "downsample: " << result.coords.rows << " segments embedded\n";
        return 0;
    }
    if (cmd_outliers->parsed()) {
        const auto docs = load(cfg);
        analyze::AggregateBy agg;
        if (aggregate == "codex")
            agg = analyze::AggregateBy::Codex;
        else if (aggregate == "unit")
            agg = analyze::AggregateBy::Unit;
        else
            throw ConfigError("bad --aggregate-by " + aggregate);
        const auto report =
            analyze::loo_outlier_analysis(docs, outlier_scribe, pipeline_params(cfg), agg);
        write_outputs(cfg, "outliers", io::to_csv(report), io::to_json(report),
                      svg::outlier_bars(report, "Outlier proportions: " + outlier_scribe));
        std::cout << "outliers: " << report.rows.size() << " " << aggregate
                  << " rows for scribe " << outlier_scribe << "\n";
        return 0;
    }
    if (cmd_importance->parsed()) {
        const auto docs = load(cfg);
        const auto report = analyze::importance_analysis(
            docs, imp_scribe, imp_codex, imp_unit, pipeline_params(cfg), top_m);
        write_outputs(cfg, "importance", io::to_csv(report), io::to_json(report),
                      svg::importance_boxplot(report, imp_codex + " / " + imp_unit +
                                                          " vs rest"));
        std::cout << "importance: top feature "
                  << (report.features.empty() ? std::string("-")
                                              : report.features.front().bigram.repr())
                  << "\n";
        return 0;
    }
    if (cmd_attribute->parsed()) {
        const auto docs = load(cfg);
        const auto report = analyze::attribute_segments(docs, query_label, ref_labels,
                                                        pipeline_params(cfg));
        write_outputs(cfg, "attribute", io::to_csv(report), io::to_json(report));
        std::cout << "attribute: " << query_label << " -> " << report.verdict << "\n";
        return 0;
    }
    if (cmd_synth->parsed()) {
        std::ifstream in(profiles_path);
        if (!in)
            throw MissingFile("cannot open profiles " + profiles_path);
        nlohmann::json pj;
        try {
            in >> pj;
        } catch (const nlohmann::json::exception& e) {
            throw DataError(std::string("bad profiles file: ") + e.what());
        }
        std::vector<synth::HabitProfile> profiles;
        if (pj.is_array())
            for (const auto& item : pj)
                profiles.push_back(synth::HabitProfile::from_json(item));
        else
            profiles.push_back(synth::HabitProfile::from_json(pj));

        const fs::path dir(cfg.output_dir);
        fs::create_directories(dir);
        nlohmann::json manifest = nlohmann::json::array();
        const IngestOptions opts = ingest_options(cfg);
        for (const synth::HabitProfile& profile : profiles) {
            for (std::size_t u = 0; u < synth_units; ++u) {
                const std::string unit_id = std::to_string(u + 1);
                const std::string codex_id = "synthetic:" + profile.name;
                const ProductionUnitDoc doc = synth::generate_unit(
                    profile, synth_clusters, codex_id, unit_id, profile.name,
                    rng::mix(cfg.seed, codex_id + "#" + unit_id), opts);
                const std::string fname = profile.name + "_u" + unit_id + ".txt";
                write_file(dir / fname, doc.text());
                manifest.push_back({{"file", fname},
                                    {"codex", codex_id},
                                    {"unit", unit_id},
                                    {"scribe", profile.name}});
            }
        }
        write_file(dir / "manifest.json", manifest.dump(2) + "\n");
        std::cout << "synth: " << manifest.size() << " units written to "
                  << dir.string() << "\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const AnalysisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
