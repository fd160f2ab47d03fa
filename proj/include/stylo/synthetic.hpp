#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stylo/experiments.hpp"
#include "stylo/lexicon.hpp"
#include "stylo/play.hpp"

namespace stylo {

/// A synthetic playwright: a first-order Markov generator over n function
/// words plus one filler symbol class (the last state). Texts sampled from
/// it are emitted as speeches of geometric length.
struct SyntheticAuthor {
  std::string name;
  Eigen::MatrixXd transition;  // (n+1) x (n+1), row-stochastic

  int function_words() const { return static_cast<int>(transition.rows()) - 1; }
};

struct SyntheticConfig {
  int function_words = 20;
  int authors = 6;
  double min_divergence = 0.05;    // nats, between function-word sub-chains
  double filler_share = 0.35;      // probability each step emits a filler token
  double uniform_mix = 0.05;       // keeps transitions strictly positive
  bool matched_stationary = false; // authors differ in adjacency only
  std::uint64_t seed = 1;
};

/// Deterministic synthetic lexicon "w01", "w02", ... with roughly the top
/// three quarters flagged for acts and the top half for scenes.
FunctionWordLexicon synthetic_lexicon(int n);

/// Author names "author01", "author02", ... so lexicographic order matches
/// creation order.
std::vector<std::string> synthetic_author_names(int count);

/// Draws generator chains until every ordered pair of authors is at least
/// min_divergence nats apart on the function-word sub-chain. Deterministic
/// in the seed.
std::vector<SyntheticAuthor> make_synthetic_authors(const SyntheticConfig& config);

/// Relative entropy between the row-normalized function-word blocks of two
/// generators, weighted by the first one's limiting distribution. In nats.
double generator_divergence(const SyntheticAuthor& a, const SyntheticAuthor& b);

/// Samples a single-act, single-scene play of exactly `tokens` tokens,
/// segmented into speeches of geometric length (mean mean_speech_tokens).
PlayDocument generate_play(const SyntheticAuthor& author, int tokens,
                           double mean_speech_tokens, std::mt19937_64& rng,
                           std::string title);

/// Samples a play whose act k is written by act_authors[k]; every act holds
/// scenes_per_act scenes of tokens_per_scene[k][s] tokens.
PlayDocument generate_collaboration(
    const std::vector<const SyntheticAuthor*>& act_authors,
    const std::vector<std::vector<int>>& tokens_per_scene,
    double mean_speech_tokens, std::mt19937_64& rng, std::string title);

/// A ready-to-use corpus of solo canons: plays_per_author plays of
/// tokens_per_play tokens for each author.
LoadedCorpus synthetic_corpus(const std::vector<SyntheticAuthor>& authors,
                              int plays_per_author, int tokens_per_play,
                              double mean_speech_tokens, std::mt19937_64& rng);

}  // namespace stylo
