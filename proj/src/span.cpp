#include "spantk/span.hpp"

#include <unicode/utf8.h>

#include <algorithm>

#include "spantk/unicode.hpp"

namespace spantk {

std::string to_string(Span span) {
  return "[" + std::to_string(span.start) + ", " + std::to_string(span.end) + ")";
}

SpanSet::SpanSet(std::vector<Span> spans) : spans_(std::move(spans)) {
  for (const Span& s : spans_) {
    if (s.start >= s.end) {
      throw bounds_error("span " + to_string(s) + " is empty or inverted");
    }
  }
  std::sort(spans_.begin(), spans_.end());
  for (std::size_t i = 1; i < spans_.size(); ++i) {
    const Span& a = spans_[i - 1];
    const Span& b = spans_[i];
    if (a.end > b.start) {
      throw overlap_error("spans " + to_string(a) + " and " + to_string(b) +
                          " overlap");
    }
  }
}

std::size_t SpanSet::token_count() const {
  std::size_t total = 0;
  for (const Span& s : spans_) total += s.length();
  return total;
}

TokenizedContent tokenize(std::string_view text) {
  TokenizedContent content;
  content.text = nfc(text);

  const char* data = content.text.data();
  const auto byte_len = static_cast<int32_t>(content.text.size());
  int32_t byte_pos = 0;
  std::size_t char_pos = 0;

  std::size_t token_char_start = 0;
  int32_t token_byte_start = 0;
  bool in_token = false;

  while (byte_pos < byte_len) {
    const int32_t cp_byte_start = byte_pos;
    UChar32 cp;
    U8_NEXT(data, byte_pos, byte_len, cp);
    const bool space = is_whitespace(static_cast<char32_t>(cp));
    if (!space && !in_token) {
      in_token = true;
      token_char_start = char_pos;
      token_byte_start = cp_byte_start;
    } else if (space && in_token) {
      content.tokens.push_back(
          {std::string(content.text, token_byte_start, cp_byte_start - token_byte_start),
           token_char_start, char_pos});
      in_token = false;
    }
    ++char_pos;
  }
  if (in_token) {
    content.tokens.push_back(
        {std::string(content.text, token_byte_start, byte_len - token_byte_start),
         token_char_start, char_pos});
  }
  content.n_chars = char_pos;
  return content;
}

std::optional<Span> char_span_to_token_span(const TokenizedContent& content,
                                            std::size_t char_start,
                                            std::size_t char_end) {
  if (char_start >= char_end || char_end > content.n_chars) {
    throw bounds_error("character range [" + std::to_string(char_start) + ", " +
                       std::to_string(char_end) + ") out of range for content of " +
                       std::to_string(content.n_chars) + " characters");
  }
  const auto& tokens = content.tokens;
  // First token whose range ends after char_start.
  auto first = std::lower_bound(
      tokens.begin(), tokens.end(), char_start,
      [](const Token& t, std::size_t pos) { return t.char_end <= pos; });
  if (first == tokens.end() || first->char_start >= char_end) {
    return std::nullopt;
  }
  // One past the last token whose range starts before char_end.
  auto last = std::lower_bound(
      first, tokens.end(), char_end,
      [](const Token& t, std::size_t pos) { return t.char_start < pos; });
  const auto start_idx = static_cast<std::size_t>(first - tokens.begin());
  const auto end_idx = static_cast<std::size_t>(last - tokens.begin());
  return Span{start_idx, end_idx};
}

SpanSet validate_span_set(const TokenizedContent& content,
                          std::vector<Span> raw) {
  for (const Span& s : raw) {
    if (s.start >= s.end || s.end > content.n_tokens()) {
      throw bounds_error("span " + to_string(s) + " out of range for content of " +
                         std::to_string(content.n_tokens()) + " tokens");
    }
  }
  return SpanSet(std::move(raw));
}

SpanSet merge_union(std::span<const SpanSet> sets) {
  std::vector<Span> all;
  for (const SpanSet& set : sets) {
    all.insert(all.end(), set.begin(), set.end());
  }
  if (all.empty()) return SpanSet{};
  std::sort(all.begin(), all.end());

  std::vector<Span> merged;
  Span current = all.front();
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Span& next = all[i];
    if (next.start < current.end) {
      current.end = std::max(current.end, next.end);
    } else {
      merged.push_back(current);
      current = next;
    }
  }
  merged.push_back(current);
  return SpanSet(std::move(merged));
}

SpanSet merge_union(std::initializer_list<SpanSet> sets) {
  return merge_union(std::span<const SpanSet>(sets.begin(), sets.size()));
}

std::span<const Token> span_tokens(const TokenizedContent& content, Span span) {
  if (span.start >= span.end || span.end > content.n_tokens()) {
    throw bounds_error("span " + to_string(span) + " out of range for content of " +
                       std::to_string(content.n_tokens()) + " tokens");
  }
  return std::span<const Token>(content.tokens).subspan(span.start, span.length());
}

std::vector<std::size_t> covered_token_indices(const SpanSet& set) {
  std::vector<std::size_t> indices;
  indices.reserve(set.token_count());
  for (const Span& s : set) {
    for (std::size_t i = s.start; i < s.end; ++i) indices.push_back(i);
  }
  return indices;
}

}  // namespace spantk
