#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "stylo/lexicon.hpp"
#include "stylo/play.hpp"

namespace stylo {

/// Occurrence counts of the first n lexicon words in a text, plus the
/// relative frequencies counts / total_tokens. total_tokens counts every
/// token in the text, not only function words.
struct FrequencyVector {
  Eigen::VectorXi counts;
  std::int64_t total_tokens = 0;
  Eigen::VectorXd relative;

  Eigen::Index lexicon_size() const { return counts.size(); }

  /// Relative frequencies over the first n words only.
  Eigen::VectorXd relative_prefix(Eigen::Index n) const {
    return relative.head(n);
  }
};

FrequencyVector frequency_vector(std::span<const TokenUnit> units,
                                 const FunctionWordLexicon& lexicon,
                                 std::size_t n);

}  // namespace stylo
