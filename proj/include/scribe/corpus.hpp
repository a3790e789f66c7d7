#ifndef SCRIBE_CORPUS_HPP
#define SCRIBE_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scribe/inventory.hpp"

namespace scribe {

enum class ClusterClass : std::uint8_t { Letter, Brevigraph, Whitespace, Other };

/// Non-owning view of one grapheme cluster.
struct ClusterView {
    std::span<const char32_t> cps;
    ClusterClass cls;

    bool is_brevigraph() const { return cls == ClusterClass::Brevigraph; }
    bool is_whitespace() const { return cls == ClusterClass::Whitespace; }
    bool is_letterlike() const {
        return cls == ClusterClass::Letter || cls == ClusterClass::Brevigraph;
    }
    std::string utf8() const;
    /// Feature key: whitespace clusters render as a single U+0020.
    std::string key() const;
};

/// Non-owning view of a classified cluster sequence. `starts` holds
/// size()+1 offsets into `cps`; slices share the underlying storage.
struct ClusterSeq {
    std::span<const char32_t> cps;
    std::span<const std::uint32_t> starts;
    std::span<const ClusterClass> classes;

    std::size_t size() const { return classes.size(); }
    bool empty() const { return classes.empty(); }
    ClusterView operator[](std::size_t i) const {
        return {cps.subspan(starts[i], starts[i + 1] - starts[i]), classes[i]};
    }
    ClusterSeq slice(std::size_t first, std::size_t count) const {
        return {cps, starts.subspan(first, count + 1), classes.subspan(first, count)};
    }
    /// UTF-8 text of the covered clusters.
    std::string utf8() const;
};

/// Owning columnar storage for a classified cluster sequence.
class ClusterStore {
public:
    void push(std::span<const char32_t> cluster, ClusterClass cls);
    std::size_t size() const { return classes_.size(); }
    ClusterSeq view() const { return {cps_, starts_, classes_}; }

private:
    std::vector<char32_t> cps_;
    std::vector<std::uint32_t> starts_{0};
    std::vector<ClusterClass> classes_;
};

struct ManifestEntry {
    std::string file;
    std::string codex_id;
    std::string unit_id;
    std::string scribe;
    std::optional<int> date_from;
    std::optional<int> date_to;
    std::string notes;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
    std::filesystem::path base_dir; // entry paths resolve against this
};

struct ProductionUnitDoc {
    std::string codex_id;
    std::string unit_id;
    std::string scribe;
    std::optional<std::pair<int, int>> date_range;
    ClusterStore clusters;

    ClusterSeq view() const { return clusters.view(); }
    std::string text() const { return clusters.view().utf8(); }
};

struct CleanOptions {
    /// Removed unconditionally, even when the inventory claims them.
    /// Default: the MUFI private-use punctus elevatus. P*-category code
    /// points are always removed unless the inventory claims them (the
    /// Tironian et is Po *and* an abbreviation sign; the inventory wins).
    std::vector<char32_t> punctuation_extras{0xF161};
};

struct IngestOptions {
    BrevigraphInventory inventory = BrevigraphInventory::default_inventory();
    CleanOptions clean;
};

/// Classify one cluster against an inventory. Brevigraph beats whitespace
/// beats Other (digits, leftover symbols); everything else is a letter.
ClusterClass classify_cluster(std::span<const char32_t> cluster,
                              const BrevigraphInventory& inv);

/// Remove punctuation, collapse whitespace runs (line breaks included) to
/// a single space, trim. Throws EncodingError on invalid UTF-8.
std::string clean_text(std::string_view raw, const BrevigraphInventory& inv,
                       const CleanOptions& opts = {});

/// Split cleaned text into classified extended grapheme clusters.
/// Concatenating the clusters reproduces the input exactly.
ClusterStore segment_graphemes(std::string_view text, const BrevigraphInventory& inv);

enum class CountMode { Codepoint, Grapheme };

std::size_t count_characters(std::string_view text, CountMode mode);

Manifest load_manifest(const std::filesystem::path& path);

/// Full ingestion for one transcription: clean, cluster, classify, then
/// drop Other-class clusters and re-collapse any whitespace runs that
/// opens up. Documents are immutable afterwards.
ProductionUnitDoc ingest_text(std::string_view raw, const ManifestEntry& meta,
                              const IngestOptions& opts);

/// Load every manifest entry (parallel across entries, order preserved).
std::vector<ProductionUnitDoc> load_corpus(const Manifest& manifest,
                                           const IngestOptions& opts);

} // namespace scribe

#endif
