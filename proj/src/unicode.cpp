#include "scribe/unicode.hpp"

#include "scribe/errors.hpp"
#include "scribe/ucd.hpp"

namespace scribe::uni {

namespace {

// Returns the decoded code point and advances i, or returns 0xFFFFFFFF on
// malformed input (without advancing past the offending byte).
constexpr char32_t kBad = 0xFFFFFFFF;

char32_t next_cp(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return kBad;
    }
    if (i + len > s.size())
        return kBad;
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80)
            return kBad;
        cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong encodings, surrogates, out-of-range values
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        return kBad;
    i += static_cast<std::size_t>(len);
    return cp;
}

} // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t at = i;
        const char32_t cp = next_cp(text, i);
        if (cp == kBad)
            throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(at));
        out.push_back(cp);
    }
    return out;
}

bool is_valid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (next_cp(text, i) == kBad)
            return false;
    }
    return true;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string encode_utf8(std::span<const char32_t> cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps)
        out += encode_utf8(cp);
    return out;
}

namespace {

using ucd::Gcb;

// UAX #29 extended grapheme cluster rules GB1-GB999. `prev`/`next` are the
// properties either side of the candidate boundary; `ri_run` counts the
// regional indicators immediately before it and `pict_zwj` marks the
// ExtPict Extend* ZWJ state for GB11.
bool is_break(Gcb prev, Gcb next, std::size_t ri_run, bool pict_zwj) {
    if (prev == Gcb::CR && next == Gcb::LF)
        return false; // GB3
    if (prev == Gcb::CR || prev == Gcb::LF || prev == Gcb::Control)
        return true; // GB4
    if (next == Gcb::CR || next == Gcb::LF || next == Gcb::Control)
        return true; // GB5
    if (prev == Gcb::HangulL &&
        (next == Gcb::HangulL || next == Gcb::HangulV || next == Gcb::HangulLV ||
         next == Gcb::HangulLVT))
        return false; // GB6
    if ((prev == Gcb::HangulLV || prev == Gcb::HangulV) &&
        (next == Gcb::HangulV || next == Gcb::HangulT))
        return false; // GB7
    if ((prev == Gcb::HangulLVT || prev == Gcb::HangulT) && next == Gcb::HangulT)
        return false; // GB8
    if (next == Gcb::Extend || next == Gcb::ZWJ)
        return false; // GB9
    if (next == Gcb::SpacingMark)
        return false; // GB9a
    if (prev == Gcb::Prepend)
        return false; // GB9b
    if (prev == Gcb::ZWJ && pict_zwj)
        return false; // GB11, caller checked next is ExtPict
    if (prev == Gcb::RegionalIndicator && next == Gcb::RegionalIndicator &&
        ri_run % 2 == 1)
        return false; // GB12/GB13
    return true; // GB999
}

} // namespace

std::vector<std::size_t> grapheme_breaks(std::span<const char32_t> cps) {
    std::vector<std::size_t> breaks;
    breaks.push_back(0);
    if (cps.empty())
        return breaks;

    Gcb prev = ucd::gcb_class(cps[0]);
    std::size_t ri_run = prev == Gcb::RegionalIndicator ? 1 : 0;
    // GB11 state: have we seen ExtPict Extend* up to (and including) a ZWJ?
    bool after_pict = ucd::is_extended_pictographic(cps[0]);
    bool pict_zwj = false;

    for (std::size_t i = 1; i < cps.size(); ++i) {
        const Gcb next = ucd::gcb_class(cps[i]);
        const bool next_pict = ucd::is_extended_pictographic(cps[i]);
        if (is_break(prev, next, ri_run, pict_zwj && next_pict))
            breaks.push_back(i);

        ri_run = next == Gcb::RegionalIndicator ? ri_run + 1 : 0;
        if (next == Gcb::Extend && after_pict) {
            // stay in ExtPict Extend* run
        } else if (next == Gcb::ZWJ && after_pict) {
            pict_zwj = true;
            after_pict = false;
        } else {
            pict_zwj = false;
            after_pict = next_pict;
        }
        prev = next;
    }
    breaks.push_back(cps.size());
    return breaks;
}

std::size_t count_graphemes(std::span<const char32_t> cps) {
    return grapheme_breaks(cps).size() - 1;
}

} // namespace scribe::uni
