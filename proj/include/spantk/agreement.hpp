#ifndef SPANTK_AGREEMENT_HPP
#define SPANTK_AGREEMENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spantk/span.hpp"

namespace spantk {

/// Pairwise agreement between two annotators, averaged over shared samples.
struct AgreementReport {
  std::string annotator_a;  // lexicographically smaller of the pair
  std::string annotator_b;
  double dsc = 1.0;
  double lcs = 1.0;
  std::size_t n_samples = 0;
};

/// Dice coefficient over highlighted token index sets:
/// 2|A∩B| / (|A|+|B|); 1.0 when both sets are empty.
double dsc(const SpanSet& a, const SpanSet& b, const TokenizedContent& content);

/// Longest common subsequence between the two annotators' highlighted token
/// surface sequences (spans concatenated in document order), normalized as
/// 2·LCS / (|A|+|B|); 1.0 when both are empty. Surfaces, not positions, so
/// repeated words can match across different places in the content.
double lcs_agreement(const SpanSet& a, const SpanSet& b,
                     const TokenizedContent& content);

/// One report per unordered annotator pair, per-sample scores averaged.
/// All annotators must cover the same sample ids, and contents must cover
/// every sample id; otherwise throws input_error.
std::vector<AgreementReport> pairwise_agreement(
    const std::vector<AnnotatorSpans>& annotators,
    const std::map<std::string, TokenizedContent>& contents);

}  // namespace spantk

#endif  // SPANTK_AGREEMENT_HPP
