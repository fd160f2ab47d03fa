#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stylo/experiments.hpp"
#include "stylo/synthetic.hpp"

namespace stylo {

/// Leave-one-out benchmark on a generated corpus, run with the network
/// method and every baseline.
struct SynthBenchConfig {
  SyntheticConfig generators;
  int plays_per_author = 12;
  int tokens_per_play = 20000;
  double mean_speech_tokens = 40.0;
  double alpha = 0.75;
  int window = 10;
  std::size_t words = 0;  // 0 = all generator function words
  Support support = Support::Common;
  std::vector<int> pca_components = {4, 16};
};

struct SynthBenchResult {
  double min_pairwise_divergence = 0.0;
  std::vector<std::string> method_order;           // reporting order
  std::vector<LeaveOneOutResult> results;          // aligned with method_order
  std::vector<std::string> notes;                  // skipped methods etc.

  const LeaveOneOutResult* find(const std::string& method) const;
};

SynthBenchResult run_synth_bench(const SynthBenchConfig& config);

/// Intraplay benchmark: solo canons for `generators.authors` authors plus
/// target plays whose acts alternate between two planned authors.
struct SynthIntraplayConfig {
  SyntheticConfig generators;     // defaults overridden to 8 authors
  int canon_plays = 6;
  int canon_tokens = 12000;
  int target_plays = 20;
  int acts_per_play = 5;
  int scenes_per_act = 3;
  int min_scene_tokens = 250;
  int max_scene_tokens = 1000;
  double mean_speech_tokens = 40.0;
  double alpha = 0.75;
  int window = 10;
  std::size_t act_words = 0;    // 0 = act sub-lexicon of the synthetic lexicon
  std::size_t scene_words = 0;  // 0 = scene sub-lexicon
  Support support = Support::Common;

  SynthIntraplayConfig() { generators.authors = 8; }
};

struct SynthIntraplayResult {
  int acts_total = 0;
  int acts_correct = 0;
  int scenes_total = 0;
  int scenes_sign_correct = 0;
  int long_scenes_total = 0;         // scenes with >= long_scene_tokens tokens
  int long_scenes_sign_correct = 0;
  int long_scene_tokens = 500;
  std::vector<IntraplayReport> reports;
  std::vector<std::vector<std::string>> plans;  // per play, per act

  double act_accuracy() const {
    return acts_total ? static_cast<double>(acts_correct) / acts_total : 0.0;
  }
  double scene_sign_accuracy_long() const {
    return long_scenes_total
               ? static_cast<double>(long_scenes_sign_correct) / long_scenes_total
               : 0.0;
  }
};

SynthIntraplayResult run_synth_intraplay(const SynthIntraplayConfig& config);

}  // namespace stylo
