#ifndef SCRIBE_UNICODE_HPP
#define SCRIBE_UNICODE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scribe::uni {

/// Decodes UTF-8 into Unicode scalar values. Throws EncodingError on
/// malformed input (overlong forms, surrogates, truncated sequences).
std::vector<char32_t> decode_utf8(std::string_view text);

/// True iff `text` is well-formed UTF-8.
bool is_valid_utf8(std::string_view text);

std::string encode_utf8(std::span<const char32_t> cps);
std::string encode_utf8(char32_t cp);

/// Extended grapheme cluster boundaries per UAX #29. Returns the start
/// index of every cluster plus a final entry equal to cps.size(), so
/// cluster i spans [breaks[i], breaks[i+1]). Empty input yields {0}.
std::vector<std::size_t> grapheme_breaks(std::span<const char32_t> cps);

/// Number of extended grapheme clusters in `cps`.
std::size_t count_graphemes(std::span<const char32_t> cps);

} // namespace scribe::uni

#endif
