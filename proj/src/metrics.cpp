#include "spantk/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spantk {

namespace {

void check_in_bounds(const SpanSet& set, const TokenizedContent& content,
                     const char* label) {
  if (!set.empty() && set.spans().back().end > content.n_tokens()) {
    throw bounds_error(std::string(label) + " span set exceeds content of " +
                       std::to_string(content.n_tokens()) + " tokens");
  }
}

void check_span(Span span, const TokenizedContent& content, const char* label) {
  if (span.start >= span.end || span.end > content.n_tokens()) {
    throw bounds_error(std::string(label) + " span " + to_string(span) +
                       " out of range for content of " +
                       std::to_string(content.n_tokens()) + " tokens");
  }
}

bool nested_in(Span inner, Span outer) {
  return inner.start >= outer.start && inner.end <= outer.end;
}

// Shared case analysis: score `subject` against `others`, crediting spans of
// `others` nested inside it by |other| / |subject|.
double partial_match(Span subject, const SpanSet& others, MatchMode mode) {
  for (const Span& o : others) {
    if (o == subject) return 1.0;
  }
  if (mode == MatchMode::coverage) {
    for (const Span& o : others) {
      if (nested_in(subject, o)) return 1.0;
    }
  }
  double score = 0.0;
  const auto denom = static_cast<double>(subject.length());
  for (const Span& o : others) {
    if (nested_in(o, subject)) {
      score += static_cast<double>(o.length()) / denom;
    }
  }
  return score;
}

}  // namespace

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::strict ? "strict" : "coverage";
}

MatchMode match_mode_from_string(std::string_view name) {
  if (name == "strict") return MatchMode::strict;
  if (name == "coverage") return MatchMode::coverage;
  throw input_error("unknown match mode '" + std::string(name) +
                    "' (expected strict or coverage)");
}

double pm_recall(Span gold_span, const SpanSet& outputs,
                 const TokenizedContent& content, MatchMode mode) {
  check_span(gold_span, content, "gold");
  check_in_bounds(outputs, content, "output");
  return partial_match(gold_span, outputs, mode);
}

double pm_precision(Span output_span, const SpanSet& golds,
                    const TokenizedContent& content, MatchMode mode) {
  check_span(output_span, content, "output");
  check_in_bounds(golds, content, "gold");
  return partial_match(output_span, golds, mode);
}

MatchReport f1_m(const SpanSet& gold, const SpanSet& output,
                 const TokenizedContent& content, MatchMode mode) {
  check_in_bounds(gold, content, "gold");
  check_in_bounds(output, content, "output");

  MatchReport report;
  report.mode = mode;

  double rec_sum = 0.0;
  for (const Span& g : gold) {
    const double score = partial_match(g, output, mode);
    report.per_gold.emplace_back(g, score);
    rec_sum += score;
  }
  double prec_sum = 0.0;
  for (const Span& o : output) {
    const double score = partial_match(o, gold, mode);
    report.per_output.emplace_back(o, score);
    prec_sum += score;
  }

  report.rec_m = gold.empty() ? 1.0 : rec_sum / static_cast<double>(gold.size());
  report.prec_m =
      output.empty() ? 1.0 : prec_sum / static_cast<double>(output.size());
  const double denom = report.rec_m + report.prec_m;
  report.f1_m = denom == 0.0 ? 0.0 : 2.0 * report.rec_m * report.prec_m / denom;
  return report;
}

double order_free_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return sum / static_cast<double>(values.size());
}

CorpusScore avg_f1_m(std::span<const SpanSet> golds,
                     std::span<const SpanSet> outputs,
                     std::span<const TokenizedContent> contents,
                     MatchMode mode) {
  if (golds.empty()) {
    throw input_error("avg_f1_m: empty sample list");
  }
  if (golds.size() != outputs.size() || golds.size() != contents.size()) {
    throw input_error("avg_f1_m: gold/output/content lists differ in length");
  }
  std::vector<double> f1s, recs, precs;
  f1s.reserve(golds.size());
  recs.reserve(golds.size());
  precs.reserve(golds.size());
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const MatchReport report = f1_m(golds[i], outputs[i], contents[i], mode);
    f1s.push_back(report.f1_m);
    recs.push_back(report.rec_m);
    precs.push_back(report.prec_m);
  }
  CorpusScore score;
  score.n_samples = golds.size();
  score.f1_m = order_free_mean(std::move(f1s));
  score.rec_m = order_free_mean(std::move(recs));
  score.prec_m = order_free_mean(std::move(precs));
  return score;
}

}  // namespace spantk
