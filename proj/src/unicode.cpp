#include "spantk/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "spantk/errors.hpp"

namespace spantk {

std::string nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw error("unicode: NFC normalizer unavailable");
  }
  icu::UnicodeString input =
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = norm->normalize(input, status);
  if (U_FAILURE(status)) {
    throw error("unicode: NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::size_t count_codepoints(std::string_view text) {
  std::size_t count = 0;
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    UChar32 cp;
    U8_NEXT(text.data(), i, length, cp);
    ++count;
  }
  return count;
}

std::vector<std::size_t> codepoint_boundaries(std::string_view text) {
  std::vector<std::size_t> boundaries;
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    boundaries.push_back(static_cast<std::size_t>(i));
    UChar32 cp;
    U8_NEXT(text.data(), i, length, cp);
  }
  boundaries.push_back(text.size());
  return boundaries;
}

std::string slice_codepoints(std::string_view text, std::size_t from,
                             std::size_t to) {
  const auto boundaries = codepoint_boundaries(text);
  const std::size_t n = boundaries.size() - 1;
  if (from > to || to > n) {
    throw bounds_error("unicode: code point slice [" + std::to_string(from) +
                       ", " + std::to_string(to) + ") out of range for " +
                       std::to_string(n) + " code points");
  }
  return std::string(text.substr(boundaries[from], boundaries[to] - boundaries[from]));
}

bool is_whitespace(char32_t cp) {
  return u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_WHITE_SPACE) != 0;
}

}  // namespace spantk
