// Synthetic corpora with planted scribal habits, shared by the analysis
// tests and the acceptance suite.
#ifndef TESTS_SUPPORT_CORPORA_HPP
#define TESTS_SUPPORT_CORPORA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scribe/corpus.hpp"
#include "scribe/rng.hpp"
#include "scribe/synth.hpp"

namespace testsupport {

// Macron-habit scribe: abbreviates with e/i-macron forms.
inline scribe::synth::HabitProfile macron_profile(std::uint64_t seed,
                                                  double p = 0.6) {
    scribe::synth::HabitProfile profile;
    profile.name = "macron";
    profile.base_lexicon = {"ende", "mensche", "minne", "ware",
                            "god",  "lesen",   "boec",  "der"};
    profile.abbreviation_rules = {
        {"ende", "ēde", p},      // e-macron
        {"mensche", "mēsche", p},
        {"minne", "mīne", p},    // i-macron
        {"lesen", "lesē", p},
    };
    profile.seed = seed;
    return profile;
}

// Tilde-habit scribe: same lexicon, tilde-based abbreviations.
inline scribe::synth::HabitProfile tilde_profile(std::uint64_t seed, double p = 0.6) {
    scribe::synth::HabitProfile profile;
    profile.name = "tilde";
    profile.base_lexicon = {"ende", "mensche", "minne", "ware",
                            "god",  "lesen",   "boec",  "der"};
    profile.abbreviation_rules = {
        {"ende", "eñ", p},       // n-tilde
        {"mensche", "mẽsche", p}, // e-tilde
        {"ware", "wãre", p},     // a-tilde
        {"der", "dñ", p},
    };
    profile.seed = seed;
    return profile;
}

// Tironian-habit scribe, a third clearly distinct hand.
inline scribe::synth::HabitProfile tironian_profile(std::uint64_t seed,
                                                    double p = 0.6) {
    scribe::synth::HabitProfile profile;
    profile.name = "tironian";
    profile.base_lexicon = {"ende", "mensche", "minne", "ware",
                            "god",  "lesen",   "boec",  "der"};
    profile.abbreviation_rules = {
        {"ende", "⁊", p},        // Tironian et
        {"mensche", "msche", p}, // PUA glyph
        {"boec", "bc", p},
        {"god", "gd", p},
    };
    profile.seed = seed;
    return profile;
}

inline std::vector<scribe::ProductionUnitDoc> units_from_profile(
    const scribe::synth::HabitProfile& profile, const std::string& scribe_label,
    const std::string& codex, std::size_t n_units, std::size_t clusters_per_unit,
    std::size_t first_unit = 1) {
    std::vector<scribe::ProductionUnitDoc> docs;
    for (std::size_t u = 0; u < n_units; ++u) {
        const std::string unit_id = std::to_string(first_unit + u);
        docs.push_back(scribe::synth::generate_unit(
            profile, clusters_per_unit, codex, unit_id, scribe_label,
            scribe::rng::mix(profile.seed, codex + "/" + unit_id)));
    }
    return docs;
}

/// Two scribes with disjoint brevigraph habits.
inline std::vector<scribe::ProductionUnitDoc> two_scribe_corpus(
    std::size_t units_per_scribe, std::size_t clusters_per_unit,
    std::uint64_t seed = 1) {
    auto docs = units_from_profile(macron_profile(seed), "alpha", "Codex A",
                                   units_per_scribe, clusters_per_unit);
    auto more = units_from_profile(tilde_profile(seed + 1), "beta", "Codex B",
                                   units_per_scribe, clusters_per_unit);
    docs.insert(docs.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
    return docs;
}

} // namespace testsupport

#endif
