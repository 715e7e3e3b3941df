#ifndef SPANTK_UNICODE_HPP
#define SPANTK_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace spantk {

/// NFC-normalize a UTF-8 string. Invalid byte sequences are replaced with
/// U+FFFD, so the result is always valid UTF-8.
std::string nfc(std::string_view text);

/// Number of code points in a UTF-8 string.
std::size_t count_codepoints(std::string_view text);

/// Byte offset of each code point boundary, with one trailing entry equal to
/// text.size(). boundaries[i] is where code point i starts.
std::vector<std::size_t> codepoint_boundaries(std::string_view text);

/// Substring by code point indices [from, to).
std::string slice_codepoints(std::string_view text, std::size_t from,
                             std::size_t to);

/// Unicode White_Space property.
bool is_whitespace(char32_t cp);

}  // namespace spantk

#endif  // SPANTK_UNICODE_HPP
