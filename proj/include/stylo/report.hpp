#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stylo {

/// How the scores in a report are to be read: Nats marks relative entropies
/// (rendered as centinats in reports), Distance marks the unit-free scores
/// of the frequency-vector baselines.
enum class ScoreUnit { Nats, Distance };

/// Outcome of attributing one text among a candidate set. Candidates are
/// keyed by author name; ranking is ascending in the attribution score, so
/// ranking.front() == winner. Ties closer than tie_tolerance are broken by
/// author name and flagged.
struct AttributionReport {
  static constexpr double tie_tolerance = 1e-12;

  struct Candidate {
    std::string author;
    double score = 0.0;
    std::optional<double> discounted;
  };

  std::string text_id;
  ScoreUnit unit = ScoreUnit::Nats;
  std::vector<Candidate> candidates;  // sorted by author name
  std::vector<std::string> ranking;
  std::string winner;
  double margin = 0.0;  // second best minus best
  bool tie = false;

  const Candidate& candidate(const std::string& author) const;
};

/// Assembles a report from raw per-author scores: sorts, ranks, breaks ties
/// deterministically, and (when an average score is supplied) fills in the
/// discounted values score - average.
AttributionReport make_report(std::string text_id, ScoreUnit unit,
                              std::vector<std::pair<std::string, double>> scores,
                              std::optional<double> average = std::nullopt);

}  // namespace stylo
