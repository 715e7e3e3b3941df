#ifndef SPANTK_METRICS_HPP
#define SPANTK_METRICS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spantk/span.hpp"

namespace spantk {

/// Partial-match crediting rule.
///
/// strict:   an output span earns recall credit only when it nests inside a
///           gold span (and the mirror for precision). A span that straddles
///           or fully contains the other side scores 0. This is the
///           formula-literal default.
/// coverage: additionally grants full credit when the scored span is itself
///           nested inside a span on the other side, so an output strictly
///           inside a gold span has precision 1 rather than 0.
enum class MatchMode { strict, coverage };

std::string_view to_string(MatchMode mode);
MatchMode match_mode_from_string(std::string_view name);

/// Per-sample partial-match evaluation result.
struct MatchReport {
  std::vector<std::pair<Span, double>> per_gold;    // gold span -> PM_r
  std::vector<std::pair<Span, double>> per_output;  // output span -> PM_p
  double rec_m = 1.0;
  double prec_m = 1.0;
  double f1_m = 1.0;
  MatchMode mode = MatchMode::strict;
};

/// Recall-side partial match for one gold span against the output set:
/// 1 on exact match, else the summed fraction of the gold span covered by
/// output spans nested inside it, else 0. Coverage mode also scores 1 when
/// the gold span is nested inside some output span.
double pm_recall(Span gold_span, const SpanSet& outputs,
                 const TokenizedContent& content, MatchMode mode);

/// Precision-side mirror of pm_recall, with denominator |output span|.
double pm_precision(Span output_span, const SpanSet& golds,
                    const TokenizedContent& content, MatchMode mode);

/// Full per-sample report. Empty gold gives rec_m = 1, empty output gives
/// prec_m = 1; F1 is the harmonic mean with 0 when rec_m + prec_m == 0.
MatchReport f1_m(const SpanSet& gold, const SpanSet& output,
                 const TokenizedContent& content, MatchMode mode);

/// Corpus-level macro average of per-sample scores.
struct CorpusScore {
  double f1_m = 0.0;
  double rec_m = 0.0;
  double prec_m = 0.0;
  std::size_t n_samples = 0;
};

/// Mean of per-sample f1_m / rec_m / prec_m over parallel arrays. Summation
/// is order-independent, so sample permutations give identical results.
/// Throws input_error on an empty or length-mismatched sample list.
CorpusScore avg_f1_m(std::span<const SpanSet> golds,
                     std::span<const SpanSet> outputs,
                     std::span<const TokenizedContent> contents,
                     MatchMode mode);

/// Mean of values computed independently of input order (sorts a copy).
double order_free_mean(std::vector<double> values);

}  // namespace spantk

#endif  // SPANTK_METRICS_HPP
