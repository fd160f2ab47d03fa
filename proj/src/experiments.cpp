#include "stylo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

std::string play_identifier(const PlayDocument& doc, const std::string& file) {
  if (!doc.title.empty()) return doc.title;
  return std::filesystem::path(file).stem().string();
}

LoadedCanon load_canon(const CorpusManifest::Canon& canon,
                       const std::filesystem::path& base_dir, ParseMode mode) {
  LoadedCanon out;
  out.name = canon.name;
  std::set<std::string> seen;
  for (const auto& file : canon.files) {
    LoadedPlay play;
    play.doc = load_play(base_dir / file, mode);
    play.id = play_identifier(play.doc, file);
    if (!seen.insert(play.id).second) {
      throw InvalidExperiment("canon '" + canon.name +
                              "' contains two plays with id '" + play.id + "'");
    }
    out.plays.push_back(std::move(play));
  }
  return out;
}

}  // namespace

LoadedCorpus LoadedCorpus::load(const CorpusManifest& manifest,
                                const std::filesystem::path& base_dir,
                                ParseMode mode) {
  LoadedCorpus corpus;
  for (const auto& canon : manifest.authors) {
    corpus.authors.push_back(load_canon(canon, base_dir, mode));
  }
  for (const auto& canon : manifest.joint_canons) {
    corpus.joint.push_back(load_canon(canon, base_dir, mode));
  }
  for (const auto& disputed : manifest.disputed) {
    LoadedDisputed d;
    d.play.doc = load_play(base_dir / disputed.file, mode);
    d.play.id = play_identifier(d.play.doc, disputed.file);
    d.candidates = disputed.candidates;
    corpus.disputed.push_back(std::move(d));
  }
  return corpus;
}

const LoadedCanon* LoadedCorpus::find_canon(const std::string& name) const {
  for (const auto& canon : authors) {
    if (canon.name == name) return &canon;
  }
  for (const auto& canon : joint) {
    if (canon.name == name) return &canon;
  }
  return nullptr;
}

std::vector<const LoadedCanon*> LoadedCorpus::all_canons() const {
  std::vector<const LoadedCanon*> out;
  for (const auto& canon : authors) out.push_back(&canon);
  for (const auto& canon : joint) out.push_back(&canon);
  return out;
}

std::string method_name(const AttributionMethod& method) {
  if (std::holds_alternative<WanMethod>(method)) return "wan";
  if (const auto* delta = std::get_if<DeltaMethod>(&method)) {
    switch (delta->metric) {
      case DeltaMetric::Manhattan: return "delta-manhattan";
      case DeltaMetric::Euclidean: return "delta-euclidean";
      case DeltaMetric::Cosine: return "delta-cosine";
    }
  }
  if (const auto* pca = std::get_if<PcaMethod>(&method)) {
    return "pca-" + std::to_string(pca->components);
  }
  throw InvalidParameter("unknown attribution method");
}

std::vector<SimilarityMatrix::ScatterPoint> SimilarityMatrix::asymmetry() const {
  std::vector<ScatterPoint> points;
  for (std::size_t r = 0; r < authors.size(); ++r) {
    for (std::size_t c = r + 1; c < authors.size(); ++c) {
      points.push_back({authors[r], authors[c],
                        centinats(static_cast<Eigen::Index>(r),
                                  static_cast<Eigen::Index>(c)),
                        centinats(static_cast<Eigen::Index>(c),
                                  static_cast<Eigen::Index>(r))});
    }
  }
  return points;
}

SimilarityMatrix profile_similarity_matrix(const LoadedCorpus& corpus,
                                           const WanParams& params) {
  if (corpus.authors.size() < 2) {
    throw InvalidExperiment("similarity matrix needs at least two authors");
  }
  std::vector<MarkovChain> chains;
  SimilarityMatrix matrix;
  for (const auto& canon : corpus.authors) {
    if (canon.plays.empty()) {
      throw InvalidExperiment("author '" + canon.name + "' has an empty canon");
    }
    std::vector<Wan> wans;
    for (const auto& play : canon.plays) {
      auto units = speech_units(play.doc);
      wans.push_back(build_wan(units, params));
    }
    chains.push_back(normalize(aggregate(wans)));
    matrix.authors.push_back(canon.name);
  }

  const auto n = static_cast<Eigen::Index>(chains.size());
  Eigen::ArrayXX<bool> mask = common_support_mask(chains);
  matrix.centinats =
      Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (r == c) continue;
      matrix.centinats(r, c) =
          entropy_on_mask(chains[r], chains[c], &mask).centinats();
    }
  }
  return matrix;
}

namespace {

FrequencyVector frequency_prefix(const FrequencyVector& fv, std::size_t n) {
  FrequencyVector out;
  const auto nn = static_cast<Eigen::Index>(n);
  out.counts = fv.counts.head(nn);
  out.total_tokens = fv.total_tokens;
  out.relative = fv.relative.head(nn);
  return out;
}

// One attribution target: a play, act, or scene, always excluded at whole-play
// granularity from the profiles it would otherwise contribute to.
struct UnitTarget {
  std::size_t canon_idx = 0;
  std::size_t play_idx = 0;
  std::string unit_id;
  Wan wan;                       // at the engine's full size
  FrequencyVector freq;          // at the engine's full size
  std::size_t tokens = 0;
};

class LooEngine {
 public:
  LooEngine(const LoadedCorpus& corpus, const ExperimentParams& params,
            Granularity granularity)
      : corpus_(corpus), support_(params.support) {
    full_params_ = params.wan;
    full_params_.n_words = params.wan.lexicon.size();
    full_params_.validate();

    if (corpus.authors.size() < 2) {
      throw InvalidExperiment("leave-one-out needs at least two candidate authors");
    }

    play_wans_.resize(corpus.authors.size());
    canon_totals_.reserve(corpus.authors.size());
    for (std::size_t a = 0; a < corpus.authors.size(); ++a) {
      const auto& canon = corpus.authors[a];
      if (canon.plays.empty()) {
        throw InvalidExperiment("author '" + canon.name + "' has an empty canon");
      }
      for (std::size_t k = 0; k < canon.plays.size(); ++k) {
        auto units = speech_units(canon.plays[k].doc);
        play_wans_[a].push_back(build_wan(units, full_params_));
      }
      canon_totals_.push_back(aggregate(play_wans_[a]));
    }

    for (std::size_t a = 0; a < corpus.authors.size(); ++a) {
      const auto& canon = corpus.authors[a];
      for (std::size_t k = 0; k < canon.plays.size(); ++k) {
        collect_targets(a, k, granularity);
      }
    }
  }

  std::size_t full_size() const { return full_params_.n_words; }

  LeaveOneOutResult run(const AttributionMethod& method, std::size_t n,
                        bool with_discount) const {
    if (n == 0 || n > full_params_.n_words) {
      throw InvalidParameter("leave-one-out size out of range");
    }
    LeaveOneOutResult result;
    result.method = method_name(method);
    result.words = n;
    if (std::holds_alternative<WanMethod>(method)) {
      run_wan(result, n, with_discount);
    } else if (const auto* delta = std::get_if<DeltaMethod>(&method)) {
      run_frequency(result, n, [&](const FrequencyVector& target,
                                   const auto& known, const auto& training,
                                   const std::string& id) {
        ZScoreModel model = zscore_fit(training);
        return delta_attribute(id, target, known, delta->metric, model);
      });
    } else if (const auto* pca = std::get_if<PcaMethod>(&method)) {
      run_frequency(result, n, [&](const FrequencyVector& target,
                                   const auto& known, const auto& training,
                                   const std::string& id) {
        PcaModel model = pca_fit(training, pca->components);
        return pca_attribute(id, target, known, model);
      });
    }
    result.accuracy = result.attributed > 0
                          ? static_cast<double>(result.correct) /
                                static_cast<double>(result.attributed)
                          : 0.0;
    return result;
  }

 private:
  void collect_targets(std::size_t a, std::size_t k, Granularity granularity) {
    const auto& play = corpus_.authors[a].plays[k];
    auto add_target = [&](std::string unit_id, std::vector<TokenUnit> units) {
      UnitTarget target;
      target.canon_idx = a;
      target.play_idx = k;
      target.unit_id = std::move(unit_id);
      target.wan = build_wan(units, full_params_);
      target.freq = frequency_vector(units, full_params_.lexicon,
                                     full_params_.n_words);
      target.tokens = static_cast<std::size_t>(target.wan.token_count);
      targets_.push_back(std::move(target));
    };
    switch (granularity) {
      case Granularity::Play:
        add_target(play.id, speech_units(play.doc));
        break;
      case Granularity::Act:
        for (const auto& act : play.doc.acts) {
          add_target(play.id + " / act " + std::to_string(act.number),
                     speech_units(act));
        }
        break;
      case Granularity::Scene:
        for (const auto& act : play.doc.acts) {
          for (const auto& scene : act.scenes) {
            add_target(play.id + " / " + std::to_string(act.number) + "." +
                           std::to_string(scene.number),
                       speech_units(scene));
          }
        }
        break;
    }
  }

  Wan author_profile_excluding(std::size_t a, std::size_t skip,
                               std::size_t n) const {
    std::vector<Wan> rest;
    for (std::size_t k = 0; k < play_wans_[a].size(); ++k) {
      if (k != skip) rest.push_back(restrict_words(play_wans_[a][k], n));
    }
    return aggregate(rest);
  }

  void run_wan(LeaveOneOutResult& result, std::size_t n,
               bool with_discount) const {
    // Candidate profiles of non-held-out authors do not depend on the target.
    std::vector<MarkovChain> full_chains;
    full_chains.reserve(corpus_.authors.size());
    for (const auto& total : canon_totals_) {
      full_chains.push_back(normalize(restrict_words(total, n)));
    }

    for (const auto& target : targets_) {
      LeaveOneOutEntry entry;
      entry.true_author = corpus_.authors[target.canon_idx].name;
      entry.play_id = target.unit_id;
      if (play_wans_[target.canon_idx].size() < 2) {
        entry.skipped_singleton = true;
        result.entries.push_back(std::move(entry));
        ++result.skipped;
        continue;
      }

      MarkovChain text_chain = normalize(restrict_words(target.wan, n));
      std::vector<std::pair<std::string, MarkovChain>> profiles;
      profiles.reserve(corpus_.authors.size());
      for (std::size_t b = 0; b < corpus_.authors.size(); ++b) {
        if (b == target.canon_idx) {
          profiles.emplace_back(
              corpus_.authors[b].name,
              normalize(author_profile_excluding(b, target.play_idx, n)));
        } else {
          profiles.emplace_back(corpus_.authors[b].name, full_chains[b]);
        }
      }

      std::optional<MarkovChain> pooled;
      if (with_discount) {
        std::vector<Wan> parts;
        for (std::size_t b = 0; b < corpus_.authors.size(); ++b) {
          for (std::size_t k = 0; k < play_wans_[b].size(); ++k) {
            if (b == target.canon_idx && k == target.play_idx) continue;
            parts.push_back(restrict_words(play_wans_[b][k], n));
          }
        }
        pooled = normalize(aggregate(parts));
      }

      entry.report = attribute(target.unit_id, text_chain, profiles, support_,
                               pooled ? &*pooled : nullptr);
      entry.correct = entry.report->winner == entry.true_author;
      result.attributed += 1;
      result.correct += entry.correct ? 1 : 0;
      result.entries.push_back(std::move(entry));
    }
  }

  template <class Attribute>
  void run_frequency(LeaveOneOutResult& result, std::size_t n,
                     Attribute&& attribute_fn) const {
    // Per-play frequency vectors at size n, shared by all targets.
    std::vector<std::vector<FrequencyVector>> freqs(corpus_.authors.size());
    for (std::size_t a = 0; a < corpus_.authors.size(); ++a) {
      for (std::size_t k = 0; k < corpus_.authors[a].plays.size(); ++k) {
        auto units = speech_units(corpus_.authors[a].plays[k].doc);
        freqs[a].push_back(frequency_prefix(
            frequency_vector(units, full_params_.lexicon, full_size()), n));
      }
    }

    for (const auto& target : targets_) {
      LeaveOneOutEntry entry;
      entry.true_author = corpus_.authors[target.canon_idx].name;
      entry.play_id = target.unit_id;
      if (freqs[target.canon_idx].size() < 2) {
        entry.skipped_singleton = true;
        result.entries.push_back(std::move(entry));
        ++result.skipped;
        continue;
      }

      std::vector<FrequencyVector> training;
      std::vector<std::pair<std::string, std::vector<FrequencyVector>>> known;
      for (std::size_t b = 0; b < corpus_.authors.size(); ++b) {
        std::vector<FrequencyVector> plays;
        for (std::size_t k = 0; k < freqs[b].size(); ++k) {
          if (b == target.canon_idx && k == target.play_idx) continue;
          training.push_back(freqs[b][k]);
          plays.push_back(freqs[b][k]);
        }
        known.emplace_back(corpus_.authors[b].name, std::move(plays));
      }

      entry.report = attribute_fn(frequency_prefix(target.freq, n), known,
                                  training, target.unit_id);
      entry.correct = entry.report->winner == entry.true_author;
      result.attributed += 1;
      result.correct += entry.correct ? 1 : 0;
      result.entries.push_back(std::move(entry));
    }
  }

  const LoadedCorpus& corpus_;
  Support support_;
  WanParams full_params_;
  std::vector<std::vector<Wan>> play_wans_;
  std::vector<Wan> canon_totals_;
  std::vector<UnitTarget> targets_;
};

}  // namespace

LeaveOneOutResult leave_one_out(const LoadedCorpus& corpus,
                                const ExperimentParams& params,
                                const AttributionMethod& method) {
  LooEngine engine(corpus, params, Granularity::Play);
  return engine.run(method, params.wan.n_words, /*with_discount=*/true);
}

LeaveOneOutResult leave_one_out_units(const LoadedCorpus& corpus,
                                      const ExperimentParams& params,
                                      Granularity granularity,
                                      const AttributionMethod& method) {
  LooEngine engine(corpus, params, granularity);
  return engine.run(method, params.wan.n_words, /*with_discount=*/true);
}

AttributionReport attribute_collaborative(const LoadedPlay& play,
                                          const LoadedCorpus& candidates,
                                          const ExperimentParams& params,
                                          bool with_discount) {
  std::vector<const LoadedCanon*> canons = candidates.all_canons();
  if (canons.empty()) throw InvalidExperiment("no candidate canons");

  auto units = speech_units(play.doc);
  Wan text_wan = build_wan(units, params.wan);

  std::vector<std::pair<std::string, MarkovChain>> profiles;
  std::vector<Wan> pooled_parts;
  for (const auto* canon : canons) {
    std::vector<Wan> wans;
    for (const auto& candidate_play : canon->plays) {
      if (candidate_play.id == play.id) continue;  // never attribute against itself
      auto candidate_units = speech_units(candidate_play.doc);
      wans.push_back(build_wan(candidate_units, params.wan));
    }
    if (wans.empty()) continue;  // canon contained only the target
    Wan total = aggregate(wans);
    pooled_parts.push_back(total);
    profiles.emplace_back(canon->name, normalize(total));
  }
  if (profiles.empty()) {
    throw InvalidExperiment("no candidate profile left after excluding the play");
  }
  if (profiles.size() == 1) {
    return make_report(play.id, ScoreUnit::Nats,
                       {{profiles.front().first, 0.0}});
  }

  std::optional<MarkovChain> pooled;
  if (with_discount) pooled = normalize(aggregate(pooled_parts));
  MarkovChain text_chain = normalize(text_wan);
  return attribute(play.id, text_chain, profiles, params.support,
                   pooled ? &*pooled : nullptr);
}

IntraplayReport intraplay(const LoadedPlay& play, const LoadedCorpus& candidates,
                          const std::string& focal_first,
                          const std::string& focal_second,
                          const IntraplayParams& params) {
  if (play.doc.acts.empty()) {
    throw MissingStructure("play '" + play.id + "' has no act divisions");
  }
  for (const auto& act : play.doc.acts) {
    if (act.scenes.empty()) {
      throw MissingStructure("act " + std::to_string(act.number) +
                             " of play '" + play.id + "' has no scenes");
    }
  }
  if (focal_first == focal_second) {
    throw InvalidExperiment("the two focal authors must differ");
  }

  WanParams act_params{params.alpha, params.window, params.act_lexicon,
                       params.act_lexicon.size()};
  WanParams scene_params{params.alpha, params.window, params.scene_lexicon,
                         params.scene_lexicon.size()};

  // Whole-play exclusion: any canon containing the target drops it before a
  // single act or scene is attributed.
  auto build_profiles = [&](const WanParams& wan_params) {
    std::vector<std::pair<std::string, MarkovChain>> profiles;
    for (const auto& canon : candidates.authors) {
      std::vector<Wan> wans;
      for (const auto& candidate_play : canon.plays) {
        if (candidate_play.id == play.id) continue;
        auto units = speech_units(candidate_play.doc);
        wans.push_back(build_wan(units, wan_params));
      }
      if (wans.empty()) continue;
      profiles.emplace_back(canon.name, normalize(aggregate(wans)));
    }
    return profiles;
  };

  auto act_profiles = build_profiles(act_params);
  if (act_profiles.size() < 2) {
    throw InvalidExperiment("intraplay needs at least two candidate profiles");
  }
  auto scene_profiles_all = build_profiles(scene_params);
  std::vector<std::pair<std::string, MarkovChain>> scene_profiles;
  for (const auto& name : {focal_first, focal_second}) {
    auto it = std::find_if(scene_profiles_all.begin(), scene_profiles_all.end(),
                           [&](const auto& p) { return p.first == name; });
    if (it == scene_profiles_all.end()) {
      throw InvalidExperiment("focal author '" + name +
                              "' is not among the candidate profiles");
    }
    scene_profiles.push_back(*it);
  }

  IntraplayReport report;
  report.play_id = play.id;
  report.focal_first = focal_first;
  report.focal_second = focal_second;

  for (const auto& act : play.doc.acts) {
    auto units = speech_units(act);
    Wan wan = build_wan(units, act_params);
    IntraplayReport::ActEntry entry;
    entry.act = act.number;
    entry.tokens = static_cast<std::size_t>(wan.token_count);
    entry.report = attribute(
        play.id + " / act " + std::to_string(act.number), normalize(wan),
        act_profiles, params.support);
    report.acts.push_back(std::move(entry));
  }

  for (const auto& act : play.doc.acts) {
    for (const auto& scene : act.scenes) {
      auto units = speech_units(scene);
      Wan wan = build_wan(units, scene_params);
      IntraplayReport::SceneEntry entry;
      entry.act = act.number;
      entry.scene = scene.number;
      entry.tokens = static_cast<std::size_t>(wan.token_count);
      entry.report = attribute(play.id + " / " + std::to_string(act.number) +
                                   "." + std::to_string(scene.number),
                               normalize(wan), scene_profiles, params.support);
      entry.signed_margin_nats = entry.report->candidate(focal_second).score -
                                 entry.report->candidate(focal_first).score;
      report.scenes.push_back(std::move(entry));
    }
  }
  return report;
}

TrainSizeResult train_lexicon_size(const LoadedCorpus& corpus,
                                   const ExperimentParams& params,
                                   Granularity granularity,
                                   const AttributionMethod& method,
                                   std::vector<std::size_t> sizes) {
  LooEngine engine(corpus, params, granularity);
  if (sizes.empty()) {
    const std::size_t full = engine.full_size();
    if (full < 5) {
      sizes.push_back(full);
    } else {
      for (std::size_t n = 5; n <= full; ++n) sizes.push_back(n);
    }
  }
  for (std::size_t n : sizes) {
    if (n == 0 || n > engine.full_size()) {
      throw InvalidParameter("candidate size out of range: " + std::to_string(n));
    }
  }

  TrainSizeResult result;
  result.sizes = sizes;
  for (std::size_t n : sizes) {
    LeaveOneOutResult loo = engine.run(method, n, /*with_discount=*/false);
    result.accuracy.push_back(loo.accuracy);
    result.correct.push_back(loo.correct);
    result.attempted.push_back(loo.attributed);
    // Ties resolve to the smallest size.
    if (result.best_n == 0 || loo.accuracy > result.best_accuracy ||
        (loo.accuracy == result.best_accuracy && n < result.best_n)) {
      result.best_n = n;
      result.best_accuracy = loo.accuracy;
    }
  }
  return result;
}

}  // namespace stylo
