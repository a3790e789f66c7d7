#ifndef SCRIBE_INVENTORY_HPP
#define SCRIBE_INVENTORY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace scribe {

/// The set of code points that mark a grapheme cluster as a brevigraph
/// (an abbreviation glyph). Three member kinds: standalone code points
/// (precomposed letters, Tironian signs, modifier letters), combining
/// marks (a cluster containing one is a brevigraph), and Private Use
/// Area ranges for MUFI-style glyphs.
///
/// The built-in default is closed under canonical equivalence: every
/// precomposed character whose NFD contains one of the combining marks
/// is itself a member, so NFC and NFD spellings classify identically.
class BrevigraphInventory {
public:
    BrevigraphInventory(std::vector<char32_t> code_points,
                        std::vector<char32_t> combining_marks,
                        std::vector<std::pair<char32_t, char32_t>> pua_ranges);

    static const BrevigraphInventory& default_inventory();
    static BrevigraphInventory from_json(const nlohmann::json& j);
    static BrevigraphInventory from_json_file(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    /// True iff cp is in any member set (code point, combining mark, or range).
    bool contains(char32_t cp) const;

    const std::vector<char32_t>& code_points() const { return code_points_; }
    const std::vector<char32_t>& combining_marks() const { return combining_marks_; }
    const std::vector<std::pair<char32_t, char32_t>>& pua_ranges() const {
        return pua_ranges_;
    }

    bool operator==(const BrevigraphInventory&) const = default;

private:
    std::vector<char32_t> code_points_;      // sorted
    std::vector<char32_t> combining_marks_;  // sorted
    std::vector<std::pair<char32_t, char32_t>> pua_ranges_;
};

} // namespace scribe

#endif
