#include "scribe/ucd.hpp"

#include <algorithm>

namespace scribe::ucd {

namespace {

bool in_ranges(const CpRange* table, std::size_t len, char32_t cp) {
    const CpRange* end = table + len;
    auto it = std::upper_bound(table, end, cp, [](char32_t v, const CpRange& r) {
        return v < r.lo;
    });
    return it != table && cp <= (it - 1)->hi;
}

} // namespace

Gcb gcb_class(char32_t cp) {
    // Hangul syllables are dense and regular; handled arithmetically.
    if (cp >= 0xAC00 && cp <= 0xD7A3)
        return (cp - 0xAC00) % 28 == 0 ? Gcb::HangulLV : Gcb::HangulLVT;
    const ClassedRange* end = kGcbRanges + kGcbRanges_len;
    auto it = std::upper_bound(kGcbRanges, end, cp, [](char32_t v, const ClassedRange& r) {
        return v < r.lo;
    });
    if (it != kGcbRanges && cp <= (it - 1)->hi)
        return (it - 1)->cls;
    return Gcb::Other;
}

bool is_extended_pictographic(char32_t cp) {
    return in_ranges(kExtPict, kExtPict_len, cp);
}

bool is_white_space(char32_t cp) {
    switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punctuation(char32_t cp) {
    return in_ranges(kPunctuation, kPunctuation_len, cp);
}

bool is_number(char32_t cp) {
    return in_ranges(kNumber, kNumber_len, cp);
}

bool is_other_base(char32_t cp) {
    return in_ranges(kOtherBase, kOtherBase_len, cp);
}

} // namespace scribe::ucd
