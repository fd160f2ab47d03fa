#include "stylo/report.hpp"

#include <algorithm>
#include <cmath>

#include "stylo/errors.hpp"

namespace stylo {

const AttributionReport::Candidate& AttributionReport::candidate(
    const std::string& author) const {
  for (const auto& c : candidates) {
    if (c.author == author) return c;
  }
  throw InvalidParameter("no such candidate in report: " + author);
}

AttributionReport make_report(std::string text_id, ScoreUnit unit,
                              std::vector<std::pair<std::string, double>> scores,
                              std::optional<double> average) {
  if (scores.empty()) throw InvalidParameter("report needs at least one candidate");

  AttributionReport report;
  report.text_id = std::move(text_id);
  report.unit = unit;

  std::sort(scores.begin(), scores.end());
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i].first == scores[i - 1].first) {
      throw InvalidParameter("duplicate candidate name: " + scores[i].first);
    }
  }
  for (const auto& [author, score] : scores) {
    AttributionReport::Candidate c;
    c.author = author;
    c.score = score;
    if (average) c.discounted = score - *average;
    report.candidates.push_back(std::move(c));
  }

  // Ascending score; equal scores (and the infinite-vs-infinite case) fall
  // back to name order, which the sort above already established.
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a].second < scores[b].second;
  });
  for (std::size_t i : order) report.ranking.push_back(scores[i].first);

  report.winner = report.ranking.front();
  if (order.size() >= 2) {
    const double best = scores[order[0]].second;
    const double second = scores[order[1]].second;
    if (std::isinf(best) && std::isinf(second)) {
      report.margin = 0.0;
      report.tie = true;
    } else {
      report.margin = second - best;
      report.tie = report.margin < AttributionReport::tie_tolerance;
    }
  }
  return report;
}

}  // namespace stylo
