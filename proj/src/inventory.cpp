#include "scribe/inventory.hpp"

#include <algorithm>
#include <fstream>

#include "scribe/errors.hpp"

namespace scribe {

namespace {

#include "inventory_default_data.inc"

char32_t parse_hex_cp(const nlohmann::json& j, const char* field) {
    if (!j.is_string())
        throw MalformedInventory(std::string(field) + " entries must be hex strings");
    std::string s = j.get<std::string>();
    if (s.rfind("U+", 0) == 0 || s.rfind("u+", 0) == 0)
        s = s.substr(2);
    else if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)
        s = s.substr(2);
    if (s.empty() || s.size() > 6)
        throw MalformedInventory("bad code point '" + j.get<std::string>() + "'");
    char32_t cp = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw MalformedInventory("bad code point '" + j.get<std::string>() + "'");
        cp = cp * 16 + static_cast<char32_t>(d);
    }
    if (cp > 0x10FFFF)
        throw MalformedInventory("code point out of range");
    return cp;
}

std::string hex_str(char32_t cp) {
    static const char* digits = "0123456789ABCDEF";
    std::string s;
    for (char32_t v = cp; v; v >>= 4)
        s.insert(s.begin(), digits[v & 0xF]);
    while (s.size() < 4)
        s.insert(s.begin(), '0');
    return s;
}

bool is_ascii_letter(char32_t cp) {
    return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

} // namespace

BrevigraphInventory::BrevigraphInventory(
    std::vector<char32_t> code_points, std::vector<char32_t> combining_marks,
    std::vector<std::pair<char32_t, char32_t>> pua_ranges)
    : code_points_(std::move(code_points)),
      combining_marks_(std::move(combining_marks)),
      pua_ranges_(std::move(pua_ranges)) {
    std::ranges::sort(code_points_);
    code_points_.erase(std::unique(code_points_.begin(), code_points_.end()),
                       code_points_.end());
    std::ranges::sort(combining_marks_);
    combining_marks_.erase(
        std::unique(combining_marks_.begin(), combining_marks_.end()),
        combining_marks_.end());
    for (char32_t cp : code_points_)
        if (is_ascii_letter(cp))
            throw MalformedInventory("code point " + hex_str(cp) + " is a basic letter");
    for (char32_t cp : combining_marks_)
        if (is_ascii_letter(cp))
            throw MalformedInventory("combining mark " + hex_str(cp) + " is a basic letter");
    for (auto& [lo, hi] : pua_ranges_) {
        if (lo > hi)
            throw MalformedInventory("range " + hex_str(lo) + ".." + hex_str(hi) +
                                     " is not well-ordered");
        const bool hits_upper = lo <= U'Z' && hi >= U'A';
        const bool hits_lower = lo <= U'z' && hi >= U'a';
        if (hits_upper || hits_lower)
            throw MalformedInventory("range " + hex_str(lo) + ".." + hex_str(hi) +
                                     " overlaps basic letters");
    }
    std::ranges::sort(pua_ranges_);
}

const BrevigraphInventory& BrevigraphInventory::default_inventory() {
    static const BrevigraphInventory inv = [] {
        std::vector<char32_t> cps(std::begin(kDefaultCodePoints),
                                  std::end(kDefaultCodePoints));
        std::vector<char32_t> marks(std::begin(kDefaultCombiningMarks),
                                    std::end(kDefaultCombiningMarks));
        std::vector<std::pair<char32_t, char32_t>> ranges(
            std::begin(kDefaultPuaRanges), std::end(kDefaultPuaRanges));
        return BrevigraphInventory(std::move(cps), std::move(marks), std::move(ranges));
    }();
    return inv;
}

BrevigraphInventory BrevigraphInventory::from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw MalformedInventory("inventory must be a JSON object");
    std::vector<char32_t> cps;
    std::vector<char32_t> marks;
    std::vector<std::pair<char32_t, char32_t>> ranges;
    if (j.contains("code_points"))
        for (const auto& e : j.at("code_points"))
            cps.push_back(parse_hex_cp(e, "code_points"));
    if (j.contains("combining_marks"))
        for (const auto& e : j.at("combining_marks"))
            marks.push_back(parse_hex_cp(e, "combining_marks"));
    if (j.contains("pua_ranges"))
        for (const auto& e : j.at("pua_ranges")) {
            if (!e.is_array() || e.size() != 2)
                throw MalformedInventory("pua_ranges entries must be [lo, hi]");
            ranges.emplace_back(parse_hex_cp(e[0], "pua_ranges"),
                                parse_hex_cp(e[1], "pua_ranges"));
        }
    return BrevigraphInventory(std::move(cps), std::move(marks), std::move(ranges));
}

BrevigraphInventory BrevigraphInventory::from_json_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw MissingFile("cannot open inventory " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInventory(path.string() + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json BrevigraphInventory::to_json() const {
    nlohmann::json j;
    j["code_points"] = nlohmann::json::array();
    for (char32_t cp : code_points_)
        j["code_points"].push_back(hex_str(cp));
    j["combining_marks"] = nlohmann::json::array();
    for (char32_t cp : combining_marks_)
        j["combining_marks"].push_back(hex_str(cp));
    j["pua_ranges"] = nlohmann::json::array();
    for (auto& [lo, hi] : pua_ranges_)
        j["pua_ranges"].push_back({hex_str(lo), hex_str(hi)});
    return j;
}

bool BrevigraphInventory::contains(char32_t cp) const {
    if (std::ranges::binary_search(code_points_, cp))
        return true;
    if (std::ranges::binary_search(combining_marks_, cp))
        return true;
    auto it = std::upper_bound(pua_ranges_.begin(), pua_ranges_.end(), cp,
                               [](char32_t v, const auto& r) { return v < r.first; });
    return it != pua_ranges_.begin() && cp <= std::prev(it)->second;
}

} // namespace scribe
