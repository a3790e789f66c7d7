#ifndef SCRIBE_UCD_HPP
#define SCRIBE_UCD_HPP

#include <cstddef>

namespace scribe::ucd {

// Grapheme_Cluster_Break property values (UAX #29).
enum class Gcb {
    Other,
    CR,
    LF,
    Control,
    Extend,
    ZWJ,
    RegionalIndicator,
    Prepend,
    SpacingMark,
    HangulL,
    HangulV,
    HangulT,
    HangulLV,
    HangulLVT,
};

struct CpRange {
    char32_t lo;
    char32_t hi;
};

struct ClassedRange {
    char32_t lo;
    char32_t hi;
    Gcb cls;
};

// Tables live in ucd_tables.cpp (generated).
extern const ClassedRange kGcbRanges[];
extern const std::size_t kGcbRanges_len;
extern const CpRange kExtPict[];
extern const std::size_t kExtPict_len;
extern const CpRange kPunctuation[];
extern const std::size_t kPunctuation_len;
extern const CpRange kNumber[];
extern const std::size_t kNumber_len;
extern const CpRange kOtherBase[];
extern const std::size_t kOtherBase_len;

Gcb gcb_class(char32_t cp);
bool is_extended_pictographic(char32_t cp);
bool is_white_space(char32_t cp);
bool is_punctuation(char32_t cp);   // general category P*
bool is_number(char32_t cp);        // Nd, Nl, No
bool is_other_base(char32_t cp);    // N* | S* | P* | Cc | Cf | Zl | Zp

} // namespace scribe::ucd

#endif
