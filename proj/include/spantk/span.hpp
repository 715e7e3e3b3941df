#ifndef SPANTK_SPAN_HPP
#define SPANTK_SPAN_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantk/errors.hpp"

namespace spantk {

/// One whitespace-delimited token. Offsets are code point indices (not
/// bytes) into the owning content's text, half-open [char_start, char_end).
struct Token {
  std::string surface;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool operator==(const Token&) const = default;
};

/// Source text plus its token sequence. The text is NFC-normalized at
/// construction time; every offset in the toolkit refers to it.
struct TokenizedContent {
  std::string text;
  std::vector<Token> tokens;
  std::size_t n_chars = 0;

  std::size_t n_tokens() const { return tokens.size(); }

  bool operator==(const TokenizedContent&) const = default;
};

/// Half-open token interval [start, end). End is exclusive; a span is never
/// empty.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }

  auto operator<=>(const Span&) const = default;
};

std::string to_string(Span span);

/// Spans sorted by start and pairwise non-overlapping. Adjacent spans
/// (a.end == b.start) are distinct annotations and stay separate.
class SpanSet {
 public:
  SpanSet() = default;

  /// Sorts the spans and rejects inverted/empty spans and overlaps.
  explicit SpanSet(std::vector<Span> spans);

  const std::vector<Span>& spans() const { return spans_; }
  std::size_t size() const { return spans_.size(); }
  bool empty() const { return spans_.empty(); }
  auto begin() const { return spans_.begin(); }
  auto end() const { return spans_.end(); }

  /// Total number of tokens covered.
  std::size_t token_count() const;

  bool operator==(const SpanSet&) const = default;

 private:
  std::vector<Span> spans_;
};

/// Per-annotator span sets over a shared collection of samples, keyed by
/// sample id.
struct AnnotatorSpans {
  std::string annotator;
  std::map<std::string, SpanSet> by_sample;
};

/// Split text into maximal runs of non-whitespace code points after NFC
/// normalization. Deterministic; empty text yields zero tokens.
TokenizedContent tokenize(std::string_view text);

/// Minimal token span covering every token whose character range intersects
/// [char_start, char_end); nullopt when the range touches no token.
/// Throws bounds_error unless 0 <= char_start < char_end <= content.n_chars.
std::optional<Span> char_span_to_token_span(const TokenizedContent& content,
                                            std::size_t char_start,
                                            std::size_t char_end);

/// Sort and validate raw spans against the content: in-bounds and pairwise
/// non-overlapping. Throws bounds_error / overlap_error naming the offender.
SpanSet validate_span_set(const TokenizedContent& content,
                          std::vector<Span> raw);

/// Union of all input spans with every group of transitively overlapping
/// spans replaced by its covering span. Adjacency without overlap is kept.
SpanSet merge_union(std::span<const SpanSet> sets);
SpanSet merge_union(std::initializer_list<SpanSet> sets);

/// Tokens[span.start .. span.end). Throws bounds_error if out of range.
std::span<const Token> span_tokens(const TokenizedContent& content, Span span);

/// Sorted token indices covered by the set.
std::vector<std::size_t> covered_token_indices(const SpanSet& set);

}  // namespace spantk

#endif  // SPANTK_SPAN_HPP
