#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "support/proc.hpp"

namespace fs = std::filesystem;
using testsupport::run_command;
using testsupport::slurp;

namespace {

const std::string kBin = SCRIBEPROF_BIN;

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() /
              ("scribeprof_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
    std::string p(const std::string& rel) const { return (dir / rel).string(); }
};

void write(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// two-profile corpus via the synth subcommand itself
void make_corpus(const Workspace& ws) {
    write(ws.dir / "profiles.json", R"([
      {"name": "alpha", "seed": 7,
       "base_lexicon": ["ende", "mensche", "minne", "ware", "god", "lesen"],
       "abbreviation_rules": [
         {"full": "ende", "abbreviated": "ēde", "probability": 0.6},
         {"full": "minne", "abbreviated": "mīne", "probability": 0.6}]},
      {"name": "beta", "seed": 8,
       "base_lexicon": ["ende", "mensche", "minne", "ware", "god", "lesen"],
       "abbreviation_rules": [
         {"full": "ende", "abbreviated": "eñ", "probability": 0.6},
         {"full": "ware", "abbreviated": "wãre", "probability": 0.6}]}
    ])");
    const auto res = run_command(kBin + " --out " + ws.p("corpus") + " synth --profiles " +
                                 ws.p("profiles.json") +
                                 " --units 3 --unit-clusters 1700");
    REQUIRE(res.exit_code == 0);
}

std::string common_flags(const Workspace& ws, const std::string& out_sub) {
    return " --manifest " + ws.p("corpus/manifest.json") +
           " --segment-size 400 --top-k 30 --pca-dims 8 --min-segments 2 --out " +
           ws.p(out_sub);
}

} // namespace

TEST_CASE("synth + stats round trip") {
    Workspace ws;
    make_corpus(ws);
    CHECK(fs::exists(ws.dir / "corpus" / "manifest.json"));
    CHECK(fs::exists(ws.dir / "corpus" / "alpha_u1.txt"));

    const auto res = run_command(kBin + common_flags(ws, "out") + " stats");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "stats.csv"));
    CHECK(fs::exists(ws.dir / "out" / "stats.json"));
    const std::string csv = slurp(ws.p("out/stats.csv"));
    CHECK(csv.find("alpha") != std::string::npos);
    CHECK(csv.find("beta") != std::string::npos);
}

TEST_CASE("empty manifest gives an empty table and exit 0") {
    Workspace ws;
    write(ws.dir / "empty.json", "[]");
    const auto res = run_command(kBin + " --manifest " + ws.p("empty.json") + " --out " +
                                 ws.p("out") + " stats");
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(ws.p("out/stats.csv"));
    CHECK(csv == "scribe,codices,production_units,chars_codepoint,"
                 "chars_grapheme,segments,unique_characters,ttr\n");
}

TEST_CASE("exit codes: config 2, data 3, analysis 4") {
    Workspace ws;
    make_corpus(ws);

    // config: bad embed method
    auto res = run_command(kBin + common_flags(ws, "o1") +
                           " --embed-method bogus scatter");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("embed method") != std::string::npos);

    // config: missing manifest flag
    res = run_command(kBin + " --out " + ws.p("o2") + " stats");
    CHECK(res.exit_code == 2);

    // data: manifest referencing a missing file
    write(ws.dir / "bad.json", R"([{"file": "gone.txt", "codex": "C", "unit": "I",
                                    "scribe": "s"}])");
    res = run_command(kBin + " --manifest " + ws.p("bad.json") + " --out " + ws.p("o3") +
                      " stats");
    CHECK(res.exit_code == 3);
    CHECK(res.output.find("MissingFile") != std::string::npos);

    // analysis: min-segments filter removes everyone
    res = run_command(kBin + " --manifest " + ws.p("corpus/manifest.json") +
                      " --segment-size 400 --min-segments 1000 --out " + ws.p("o4") +
                      " scatter");
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("InsufficientScribes") != std::string::npos);
}

TEST_CASE("scatter/outliers/attribute write reports") {
    Workspace ws;
    make_corpus(ws);

    auto res = run_command(kBin + common_flags(ws, "out") + " scatter");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "scatter.csv"));
    CHECK(fs::exists(ws.dir / "out" / "scatter.json"));
    CHECK(fs::exists(ws.dir / "out" / "scatter.svg"));

    res = run_command(kBin + common_flags(ws, "out") + " outliers --scribe alpha");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "outliers.csv"));

    res = run_command(kBin + common_flags(ws, "out") +
                      " attribute --query alpha --refs beta");
    CHECK(res.exit_code == 0);
    const std::string att = slurp(ws.p("out/attribute.json"));
    CHECK(att.find("\"verdict\"") != std::string::npos);

    res = run_command(kBin + common_flags(ws, "out") +
                      " importance --scribe alpha --target-codex \"synthetic:alpha\""
                      " --target-unit 1 --trees 50");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "importance.csv"));

    res = run_command(kBin + common_flags(ws, "out") +
                      " downsample --scribes alpha beta --per-scribe 4");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "downsample.csv"));

    res = run_command(kBin + common_flags(ws, "out") + " density --group-by codex");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "density.svg"));

    res = run_command(kBin + common_flags(ws, "out") + " pairwise --scribes alpha beta");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(ws.dir / "out" / "pairwise.csv"));
}

TEST_CASE("config file is honored and flags win") {
    Workspace ws;
    make_corpus(ws);
    write(ws.dir / "cfg.json", std::string("{\n") +
        "  \"manifest\": \"" + ws.p("corpus/manifest.json") + "\",\n" +
        "  \"segment_size\": 400, \"top_k\": 30, \"pca_dims\": 8,\n" +
        "  \"min_segments\": 2, \"seed\": 5\n}\n");

    const std::string down = " downsample --scribes alpha beta --per-scribe 4";

    auto res = run_command(kBin + " --config " + ws.p("cfg.json") + " --out " +
                           ws.p("c1") + down);
    REQUIRE(res.exit_code == 0);
    res = run_command(kBin + common_flags(ws, "c2") + " --seed 5" + down);
    REQUIRE(res.exit_code == 0);
    CHECK(slurp(ws.p("c1/downsample.csv")) == slurp(ws.p("c2/downsample.csv")));

    // a flag overrides the file's seed
    res = run_command(kBin + " --config " + ws.p("cfg.json") + " --seed 6 --out " +
                      ws.p("c3") + down);
    REQUIRE(res.exit_code == 0);
    res = run_command(kBin + common_flags(ws, "c4") + " --seed 6" + down);
    REQUIRE(res.exit_code == 0);
    CHECK(slurp(ws.p("c3/downsample.csv")) == slurp(ws.p("c4/downsample.csv")));
    CHECK(slurp(ws.p("c1/downsample.csv")) != slurp(ws.p("c3/downsample.csv")));
}

TEST_CASE("identical runs are byte-identical") {
    Workspace ws;
    make_corpus(ws);
    auto res = run_command(kBin + common_flags(ws, "r1") + " --seed 5 scatter");
    REQUIRE(res.exit_code == 0);
    res = run_command(kBin + common_flags(ws, "r2") + " --seed 5 scatter");
    REQUIRE(res.exit_code == 0);
    CHECK(slurp(ws.p("r1/scatter.csv")) == slurp(ws.p("r2/scatter.csv")));
    CHECK(slurp(ws.p("r1/scatter.json")) == slurp(ws.p("r2/scatter.json")));
    CHECK(slurp(ws.p("r1/scatter.svg")) == slurp(ws.p("r2/scatter.svg")));
}
