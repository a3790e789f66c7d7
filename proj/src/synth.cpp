#include "scribe/synth.hpp"

#include <fstream>
#include <map>

#include "scribe/errors.hpp"
#include "scribe/rng.hpp"

namespace scribe::synth {

namespace {

struct WordShape {
    ClusterStore clusters;
    std::size_t letterlike = 0;
    std::size_t brevigraphs = 0;
};

WordShape shape_of(const std::string& word, const BrevigraphInventory& inv) {
    WordShape shape;
    shape.clusters = segment_graphemes(word, inv);
    const ClusterSeq seq = shape.clusters.view();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq.classes[i] == ClusterClass::Brevigraph) {
            ++shape.brevigraphs;
            ++shape.letterlike;
        } else if (seq.classes[i] == ClusterClass::Letter) {
            ++shape.letterlike;
        }
    }
    return shape;
}

} // namespace

double HabitProfile::expected_density_chars(const BrevigraphInventory& inv) const {
    if (base_lexicon.empty())
        throw EmptyLexicon(name);
    std::map<std::string, const AbbreviationRule*> rule_of;
    for (const AbbreviationRule& r : abbreviation_rules)
        rule_of.try_emplace(r.full, &r);
    double exp_brevi = 0.0;
    double exp_letterlike = 0.0;
    const double p_word = 1.0 / static_cast<double>(base_lexicon.size());
    for (const std::string& word : base_lexicon) {
        const WordShape full = shape_of(word, inv);
        auto it = rule_of.find(word);
        if (it == rule_of.end()) {
            exp_brevi += p_word * static_cast<double>(full.brevigraphs);
            exp_letterlike += p_word * static_cast<double>(full.letterlike);
            continue;
        }
        const WordShape abbr = shape_of(it->second->abbreviated, inv);
        const double p = it->second->probability;
        exp_brevi += p_word * (p * static_cast<double>(abbr.brevigraphs) +
                               (1.0 - p) * static_cast<double>(full.brevigraphs));
        exp_letterlike += p_word * (p * static_cast<double>(abbr.letterlike) +
                                    (1.0 - p) * static_cast<double>(full.letterlike));
    }
    return exp_letterlike > 0.0 ? exp_brevi / exp_letterlike : 0.0;
}

ProductionUnitDoc generate_unit(const HabitProfile& profile, std::size_t n_clusters,
                                const std::string& codex_id, const std::string& unit_id,
                                const std::string& scribe, std::uint64_t unit_salt,
                                const IngestOptions& opts) {
    if (profile.base_lexicon.empty())
        throw EmptyLexicon(profile.name);
    for (const AbbreviationRule& r : profile.abbreviation_rules) {
        if (r.probability < 0.0 || r.probability > 1.0)
            throw BadHyperparameter("rule probability out of [0, 1]");
        const WordShape abbr = shape_of(r.abbreviated, opts.inventory);
        if (abbr.brevigraphs == 0)
            throw BadHyperparameter("abbreviated form '" + r.abbreviated +
                                    "' contains no brevigraph");
        const WordShape full = shape_of(r.full, opts.inventory);
        if (full.brevigraphs != 0)
            throw BadHyperparameter("full form '" + r.full + "' contains a brevigraph");
    }

    std::map<std::string, const AbbreviationRule*> rule_of;
    for (const AbbreviationRule& r : profile.abbreviation_rules)
        rule_of.try_emplace(r.full, &r);

    std::map<std::string, WordShape> shapes;
    auto shape_for = [&](const std::string& w) -> const WordShape& {
        auto [it, inserted] = shapes.try_emplace(w);
        if (inserted)
            it->second = shape_of(w, opts.inventory);
        return it->second;
    };

    rng::Engine eng(rng::mix(profile.seed, unit_salt));
    ProductionUnitDoc doc;
    doc.codex_id = codex_id;
    doc.unit_id = unit_id;
    doc.scribe = scribe;

    const char32_t space = U' ';
    bool first_word = true;
    while (doc.clusters.size() < n_clusters) {
        const std::string& word =
            profile.base_lexicon[eng.below(profile.base_lexicon.size())];
        const AbbreviationRule* rule = nullptr;
        if (auto it = rule_of.find(word); it != rule_of.end())
            rule = it->second;
        const bool abbreviate = rule && eng.next_unit() < rule->probability;
        const WordShape& shape = shape_for(abbreviate ? rule->abbreviated : word);

        if (!first_word && doc.clusters.size() < n_clusters)
            doc.clusters.push(std::span<const char32_t>(&space, 1),
                              ClusterClass::Whitespace);
        first_word = false;
        const ClusterSeq seq = shape.clusters.view();
        for (std::size_t i = 0; i < seq.size() && doc.clusters.size() < n_clusters; ++i) {
            const ClusterView c = seq[i];
            doc.clusters.push(c.cps, c.cls);
        }
    }
    return doc;
}

nlohmann::json HabitProfile::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["base_lexicon"] = base_lexicon;
    j["abbreviation_rules"] = nlohmann::json::array();
    for (const AbbreviationRule& r : abbreviation_rules)
        j["abbreviation_rules"].push_back(
            {{"full", r.full}, {"abbreviated", r.abbreviated}, {"probability", r.probability}});
    j["target_density_char"] = target_density_char;
    j["seed"] = seed;
    return j;
}

HabitProfile HabitProfile::from_json(const nlohmann::json& j) {
    HabitProfile p;
    p.name = j.value("name", "profile");
    try {
        p.base_lexicon = j.at("base_lexicon").get<std::vector<std::string>>();
        if (j.contains("abbreviation_rules"))
            for (const auto& rj : j.at("abbreviation_rules"))
                p.abbreviation_rules.push_back({rj.at("full").get<std::string>(),
                                                rj.at("abbreviated").get<std::string>(),
                                                rj.at("probability").get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad habit profile: ") + e.what());
    }
    p.target_density_char = j.value("target_density_char", 0.0);
    p.seed = j.value("seed", std::uint64_t{42});
    return p;
}

HabitProfile HabitProfile::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw MissingFile("cannot open profile " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    return from_json(j);
}

} // namespace scribe::synth
