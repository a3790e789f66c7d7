#include "scribe/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scribe/errors.hpp"
#include "scribe/ucd.hpp"
#include "scribe/unicode.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scribe {

std::string ClusterView::utf8() const { return uni::encode_utf8(cps); }

std::string ClusterView::key() const {
    if (cls == ClusterClass::Whitespace)
        return " ";
    return uni::encode_utf8(cps);
}

std::string ClusterSeq::utf8() const {
    if (classes.empty())
        return {};
    const std::size_t lo = starts.front();
    const std::size_t hi = starts.back();
    return uni::encode_utf8(cps.subspan(lo, hi - lo));
}

void ClusterStore::push(std::span<const char32_t> cluster, ClusterClass cls) {
    cps_.insert(cps_.end(), cluster.begin(), cluster.end());
    starts_.push_back(static_cast<std::uint32_t>(cps_.size()));
    classes_.push_back(cls);
}

ClusterClass classify_cluster(std::span<const char32_t> cluster,
                              const BrevigraphInventory& inv) {
    bool all_ws = true;
    for (char32_t cp : cluster) {
        if (inv.contains(cp))
            return ClusterClass::Brevigraph;
        if (!ucd::is_white_space(cp))
            all_ws = false;
    }
    if (all_ws)
        return ClusterClass::Whitespace;
    if (ucd::is_other_base(cluster.front()))
        return ClusterClass::Other;
    return ClusterClass::Letter;
}

std::string clean_text(std::string_view raw, const BrevigraphInventory& inv,
                       const CleanOptions& opts) {
    const std::vector<char32_t> cps = uni::decode_utf8(raw);
    std::vector<char32_t> kept;
    kept.reserve(cps.size());
    for (char32_t cp : cps) {
        if (std::ranges::find(opts.punctuation_extras, cp) !=
            opts.punctuation_extras.end())
            continue;
        if (ucd::is_punctuation(cp) && !inv.contains(cp))
            continue;
        kept.push_back(cp);
    }
    std::vector<char32_t> out;
    out.reserve(kept.size());
    bool pending_space = false;
    for (char32_t cp : kept) {
        if (ucd::is_white_space(cp)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(U' ');
            pending_space = false;
        }
        out.push_back(cp);
    }
    return uni::encode_utf8(out);
}

ClusterStore segment_graphemes(std::string_view text, const BrevigraphInventory& inv) {
    const std::vector<char32_t> cps = uni::decode_utf8(text);
    const std::vector<std::size_t> breaks = uni::grapheme_breaks(cps);
    ClusterStore store;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const std::span<const char32_t> cluster(cps.data() + breaks[i],
                                                breaks[i + 1] - breaks[i]);
        store.push(cluster, classify_cluster(cluster, inv));
    }
    return store;
}

std::size_t count_characters(std::string_view text, CountMode mode) {
    const std::vector<char32_t> cps = uni::decode_utf8(text);
    if (mode == CountMode::Codepoint)
        return cps.size();
    return uni::count_graphemes(cps);
}

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw MissingFile("cannot open manifest " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedManifest(path.string() + ": " + e.what());
    }
    if (!j.is_array())
        throw MalformedManifest("manifest must be a JSON array");

    Manifest manifest;
    manifest.base_dir = path.has_parent_path() ? path.parent_path()
                                               : std::filesystem::path(".");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : j) {
        if (!e.is_object())
            throw MalformedManifest("manifest entries must be objects");
        ManifestEntry entry;
        try {
            entry.file = e.at("file").get<std::string>();
            entry.codex_id = e.at("codex").get<std::string>();
            entry.unit_id = e.at("unit").get<std::string>();
            entry.scribe = e.at("scribe").get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw MalformedManifest(std::string("entry missing field: ") + ex.what());
        }
        if (entry.scribe.empty())
            throw MalformedManifest("scribe label must be non-empty");
        if (e.contains("date_from"))
            entry.date_from = e.at("date_from").get<int>();
        if (e.contains("date_to"))
            entry.date_to = e.at("date_to").get<int>();
        if (e.contains("notes"))
            entry.notes = e.at("notes").get<std::string>();
        if (!seen.insert({entry.codex_id, entry.unit_id}).second)
            throw DuplicateUnit(entry.codex_id + " / " + entry.unit_id);
        if (!std::filesystem::exists(manifest.base_dir / entry.file))
            throw MissingFile((manifest.base_dir / entry.file).string());
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

ProductionUnitDoc ingest_text(std::string_view raw, const ManifestEntry& meta,
                              const IngestOptions& opts) {
    ProductionUnitDoc doc;
    doc.codex_id = meta.codex_id;
    doc.unit_id = meta.unit_id;
    doc.scribe = meta.scribe;
    if (meta.date_from && meta.date_to)
        doc.date_range = {*meta.date_from, *meta.date_to};

    const std::string cleaned = clean_text(raw, opts.inventory, opts.clean);
    const ClusterStore all = segment_graphemes(cleaned, opts.inventory);
    const ClusterSeq seq = all.view();

    // Drop Other clusters (digits, stray symbols); collapse the whitespace
    // runs this can open up; trim boundary whitespace.
    bool pending_space = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const ClusterView c = seq[i];
        if (c.cls == ClusterClass::Other)
            continue;
        if (c.cls == ClusterClass::Whitespace) {
            pending_space = doc.clusters.size() > 0;
            continue;
        }
        if (pending_space) {
            const char32_t space = U' ';
            doc.clusters.push(std::span<const char32_t>(&space, 1),
                              ClusterClass::Whitespace);
            pending_space = false;
        }
        doc.clusters.push(c.cps, c.cls);
    }
    return doc;
}

std::vector<ProductionUnitDoc> load_corpus(const Manifest& manifest,
                                           const IngestOptions& opts) {
    const std::size_t n = manifest.entries.size();
    std::vector<ProductionUnitDoc> docs(n);
    std::vector<std::string> failures(n);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const ManifestEntry& entry = manifest.entries[i];
        const std::filesystem::path p = manifest.base_dir / entry.file;
        std::ifstream in(p, std::ios::binary);
        if (!in) {
            failures[i] = "MissingFile: " + p.string();
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            docs[i] = ingest_text(buf.str(), entry, opts);
        } catch (const Error& e) {
            failures[i] = std::string(e.what()) + " (" + p.string() + ")";
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!failures[i].empty())
            throw DataError(failures[i]);
    return docs;
}

} // namespace scribe
