#ifndef SCRIBE_SYNTH_HPP
#define SCRIBE_SYNTH_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "scribe/corpus.hpp"

namespace scribe::synth {

struct AbbreviationRule {
    std::string full;        // brevigraph-free word form
    std::string abbreviated; // contains at least one brevigraph cluster
    double probability = 0.0;
};

/// A parameterized scribal habit: a lexicon sampled i.i.d. plus per-word
/// abbreviation rules applied Bernoulli-wise.
struct HabitProfile {
    std::string name = "profile";
    std::vector<std::string> base_lexicon;
    std::vector<AbbreviationRule> abbreviation_rules;
    double target_density_char = 0.0; // descriptive; generation follows the rules
    std::uint64_t seed = 42;

    nlohmann::json to_json() const;
    static HabitProfile from_json(const nlohmann::json& j);
    static HabitProfile from_json_file(const std::filesystem::path& path);

    /// Analytic character-level density: ratio of expected brevigraph
    /// clusters to expected letter-like clusters per sampled word.
    double expected_density_chars(
        const BrevigraphInventory& inv = BrevigraphInventory::default_inventory()) const;
};

/// Samples words i.i.d., abbreviates per the rules, and truncates at
/// exactly n_clusters grapheme clusters. Deterministic per profile seed;
/// unit_salt varies the stream between units of one profile.
ProductionUnitDoc generate_unit(const HabitProfile& profile, std::size_t n_clusters,
                                const std::string& codex_id, const std::string& unit_id,
                                const std::string& scribe, std::uint64_t unit_salt = 0,
                                const IngestOptions& opts = {});

} // namespace scribe::synth

#endif
