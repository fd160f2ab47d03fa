#include "stylo/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double min_divergence(const std::vector<SyntheticAuthor>& authors) {
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < authors.size(); ++i) {
    for (std::size_t j = 0; j < authors.size(); ++j) {
      if (i == j) continue;
      smallest = std::min(smallest, generator_divergence(authors[i], authors[j]));
    }
  }
  return smallest;
}

}  // namespace

const LeaveOneOutResult* SynthBenchResult::find(const std::string& method) const {
  for (std::size_t i = 0; i < method_order.size(); ++i) {
    if (method_order[i] == method) return &results[i];
  }
  return nullptr;
}

SynthBenchResult run_synth_bench(const SynthBenchConfig& config) {
  auto authors = make_synthetic_authors(config.generators);
  std::mt19937_64 rng(config.generators.seed ^ 0xC0FFEEULL);
  LoadedCorpus corpus =
      synthetic_corpus(authors, config.plays_per_author, config.tokens_per_play,
                       config.mean_speech_tokens, rng);

  ExperimentParams params;
  params.wan.alpha = config.alpha;
  params.wan.window = config.window;
  params.wan.lexicon = synthetic_lexicon(config.generators.function_words);
  params.wan.n_words =
      config.words ? config.words
                   : static_cast<std::size_t>(config.generators.function_words);
  params.support = config.support;

  SynthBenchResult result;
  result.min_pairwise_divergence = min_divergence(authors);

  std::vector<AttributionMethod> methods;
  methods.emplace_back(WanMethod{});
  for (int k : config.pca_components) methods.emplace_back(PcaMethod{k});
  methods.emplace_back(DeltaMethod{DeltaMetric::Manhattan});
  methods.emplace_back(DeltaMethod{DeltaMetric::Euclidean});
  methods.emplace_back(DeltaMethod{DeltaMetric::Cosine});

  for (const auto& method : methods) {
    try {
      LeaveOneOutResult loo = leave_one_out(corpus, params, method);
      result.method_order.push_back(loo.method);
      result.results.push_back(std::move(loo));
    } catch (const Error& e) {
      result.notes.push_back(method_name(method) + " skipped: " + e.what());
    }
  }
  return result;
}

SynthIntraplayResult run_synth_intraplay(const SynthIntraplayConfig& config) {
  if (config.generators.authors < 2) {
    throw InvalidParameter("intraplay benchmark needs at least two authors");
  }
  auto authors = make_synthetic_authors(config.generators);
  std::mt19937_64 rng(config.generators.seed ^ 0xBEEFULL);
  LoadedCorpus corpus =
      synthetic_corpus(authors, config.canon_plays, config.canon_tokens,
                       config.mean_speech_tokens, rng);

  FunctionWordLexicon lexicon =
      synthetic_lexicon(config.generators.function_words);
  IntraplayParams params;
  params.alpha = config.alpha;
  params.window = config.window;
  params.act_lexicon = config.act_words ? lexicon.prefix(config.act_words)
                                        : lexicon.sub_lexicon(SubLexicon::Act);
  params.scene_lexicon = config.scene_words
                             ? lexicon.prefix(config.scene_words)
                             : lexicon.sub_lexicon(SubLexicon::Scene);
  params.support = config.support;

  SynthIntraplayResult result;
  for (int t = 0; t < config.target_plays; ++t) {
    // Two focal authors, then a per-act plan that uses both of them.
    const std::size_t first =
        static_cast<std::size_t>(uniform01(rng) * authors.size()) %
        authors.size();
    std::size_t second =
        static_cast<std::size_t>(uniform01(rng) * (authors.size() - 1)) %
        (authors.size() - 1);
    if (second >= first) ++second;

    std::vector<const SyntheticAuthor*> act_authors;
    std::vector<std::string> plan;
    for (int a = 0; a < config.acts_per_play; ++a) {
      std::size_t pick;
      if (a == 0) {
        pick = first;
      } else if (a == 1) {
        pick = second;
      } else {
        pick = uniform01(rng) < 0.5 ? first : second;
      }
      act_authors.push_back(&authors[pick]);
      plan.push_back(authors[pick].name);
    }

    std::vector<std::vector<int>> scene_tokens(
        static_cast<std::size_t>(config.acts_per_play));
    for (auto& act_tokens : scene_tokens) {
      for (int s = 0; s < config.scenes_per_act; ++s) {
        const int span = config.max_scene_tokens - config.min_scene_tokens;
        act_tokens.push_back(config.min_scene_tokens +
                             static_cast<int>(uniform01(rng) * span));
      }
    }

    LoadedPlay target;
    target.id = "target " + std::to_string(t + 1);
    target.doc = generate_collaboration(act_authors, scene_tokens,
                                        config.mean_speech_tokens, rng,
                                        target.id);

    IntraplayReport report =
        intraplay(target, corpus, authors[first].name, authors[second].name,
                  params);

    for (std::size_t a = 0; a < report.acts.size(); ++a) {
      ++result.acts_total;
      if (report.acts[a].report.winner == plan[a]) ++result.acts_correct;
    }
    for (const auto& scene : report.scenes) {
      const std::string& planned = plan[static_cast<std::size_t>(scene.act - 1)];
      const bool toward_first = scene.signed_margin_nats > 0.0;
      const bool correct = toward_first ? planned == report.focal_first
                                        : planned == report.focal_second;
      ++result.scenes_total;
      if (correct) ++result.scenes_sign_correct;
      if (scene.tokens >= static_cast<std::size_t>(result.long_scene_tokens)) {
        ++result.long_scenes_total;
        if (correct) ++result.long_scenes_sign_correct;
      }
    }

    result.reports.push_back(std::move(report));
    result.plans.push_back(std::move(plan));
  }
  return result;
}

}  // namespace stylo
