#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "stylo/lexicon.hpp"
#include "stylo/play.hpp"

namespace stylo {

/// Parameters of a word adjacency network: the per-step decay alpha, the
/// window size (how many positions ahead a pairing may reach), the lexicon,
/// and the prefix of the lexicon actually used as nodes.
struct WanParams {
  double alpha = 0.75;
  int window = 10;
  FunctionWordLexicon lexicon;
  std::size_t n_words = 0;

  void validate() const;
  bool compatible_with(const WanParams& other) const;
};

/// Unnormalized word adjacency network. q(i, j) accumulates, over each unit
/// and each occurrence of word i, alpha^(d-1) for every occurrence of word j
/// exactly d positions later within the same unit, d = 1..window. Distances
/// count every intervening token, lexicon member or not; pairings never
/// cross unit boundaries.
struct Wan {
  WanParams params;
  Eigen::MatrixXd q;
  std::int64_t token_count = 0;
};

Wan build_wan(std::span<const TokenUnit> units, const WanParams& params);

/// Elementwise sum of networks built with identical parameters.
Wan aggregate(std::span<const Wan> wans);

/// The network over the first n lexicon words. Because distances count all
/// tokens, this is exactly the leading n-by-n block of q.
Wan restrict_words(const Wan& wan, std::size_t n);

}  // namespace stylo
