#include "spantk/agreement.hpp"

#include <algorithm>

#include "spantk/metrics.hpp"

namespace spantk {

namespace {

std::size_t intersection_size(const SpanSet& a, const SpanSet& b) {
  std::size_t total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    const std::size_t lo = std::max(ia->start, ib->start);
    const std::size_t hi = std::min(ia->end, ib->end);
    if (lo < hi) total += hi - lo;
    if (ia->end < ib->end) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return total;
}

std::vector<std::string_view> highlighted_surfaces(
    const SpanSet& set, const TokenizedContent& content) {
  std::vector<std::string_view> surfaces;
  surfaces.reserve(set.token_count());
  for (const Span& s : set) {
    for (const Token& t : span_tokens(content, s)) {
      surfaces.push_back(t.surface);
    }
  }
  return surfaces;
}

std::size_t lcs_length(const std::vector<std::string_view>& a,
                       const std::vector<std::string_view>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> prev(m + 1, 0);
  std::vector<std::size_t> cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

void check_bounds(const SpanSet& set, const TokenizedContent& content,
                  const char* label) {
  if (!set.empty() && set.spans().back().end > content.n_tokens()) {
    throw bounds_error(std::string(label) + " span set exceeds content of " +
                       std::to_string(content.n_tokens()) + " tokens");
  }
}

}  // namespace

double dsc(const SpanSet& a, const SpanSet& b, const TokenizedContent& content) {
  check_bounds(a, content, "first");
  check_bounds(b, content, "second");
  const std::size_t na = a.token_count();
  const std::size_t nb = b.token_count();
  if (na + nb == 0) return 1.0;
  return 2.0 * static_cast<double>(intersection_size(a, b)) /
         static_cast<double>(na + nb);
}

double lcs_agreement(const SpanSet& a, const SpanSet& b,
                     const TokenizedContent& content) {
  const auto sa = highlighted_surfaces(a, content);
  const auto sb = highlighted_surfaces(b, content);
  if (sa.empty() && sb.empty()) return 1.0;
  return 2.0 * static_cast<double>(lcs_length(sa, sb)) /
         static_cast<double>(sa.size() + sb.size());
}

std::vector<AgreementReport> pairwise_agreement(
    const std::vector<AnnotatorSpans>& annotators,
    const std::map<std::string, TokenizedContent>& contents) {
  if (annotators.size() < 2) {
    throw input_error("pairwise_agreement: need at least 2 annotators, got " +
                      std::to_string(annotators.size()));
  }
  const auto& reference = annotators.front();
  for (const AnnotatorSpans& a : annotators) {
    if (a.by_sample.size() != reference.by_sample.size() ||
        !std::equal(a.by_sample.begin(), a.by_sample.end(),
                    reference.by_sample.begin(),
                    [](const auto& lhs, const auto& rhs) {
                      return lhs.first == rhs.first;
                    })) {
      throw input_error("pairwise_agreement: annotator '" + a.annotator +
                        "' covers different samples than '" +
                        reference.annotator + "'");
    }
  }
  for (const auto& [sample_id, unused] : reference.by_sample) {
    if (!contents.contains(sample_id)) {
      throw input_error("pairwise_agreement: no content for sample '" +
                        sample_id + "'");
    }
  }

  std::vector<AgreementReport> reports;
  for (std::size_t i = 0; i < annotators.size(); ++i) {
    for (std::size_t j = i + 1; j < annotators.size(); ++j) {
      const AnnotatorSpans* first = &annotators[i];
      const AnnotatorSpans* second = &annotators[j];
      if (second->annotator < first->annotator) std::swap(first, second);

      std::vector<double> dscs;
      std::vector<double> lcss;
      for (const auto& [sample_id, a_set] : first->by_sample) {
        const SpanSet& b_set = second->by_sample.at(sample_id);
        const TokenizedContent& content = contents.at(sample_id);
        dscs.push_back(dsc(a_set, b_set, content));
        lcss.push_back(lcs_agreement(a_set, b_set, content));
      }
      AgreementReport report;
      report.annotator_a = first->annotator;
      report.annotator_b = second->annotator;
      report.n_samples = dscs.size();
      report.dsc = order_free_mean(std::move(dscs));
      report.lcs = order_free_mean(std::move(lcss));
      reports.push_back(std::move(report));
    }
  }
  std::sort(reports.begin(), reports.end(),
            [](const AgreementReport& x, const AgreementReport& y) {
              return std::tie(x.annotator_a, x.annotator_b) <
                     std::tie(y.annotator_a, y.annotator_b);
            });
  return reports;
}

}  // namespace spantk
