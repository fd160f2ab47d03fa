#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stylo/baselines.hpp"
#include "stylo/entropy.hpp"
#include "stylo/manifest.hpp"
#include "stylo/play.hpp"
#include "stylo/report.hpp"
#include "stylo/wan.hpp"

namespace stylo {

struct LoadedPlay {
  std::string id;
  PlayDocument doc;
};

struct LoadedCanon {
  std::string name;
  std::vector<LoadedPlay> plays;
};

struct LoadedDisputed {
  LoadedPlay play;
  std::vector<std::string> candidates;  // empty = all canons
};

/// A parsed corpus: solo author canons, joint canons, disputed plays.
/// Canon and play order follows the manifest, which keeps every experiment
/// deterministic.
struct LoadedCorpus {
  std::vector<LoadedCanon> authors;
  std::vector<LoadedCanon> joint;
  std::vector<LoadedDisputed> disputed;

  static LoadedCorpus load(const CorpusManifest& manifest,
                           const std::filesystem::path& base_dir,
                           ParseMode mode = ParseMode::Structured);

  const LoadedCanon* find_canon(const std::string& name) const;
  std::vector<const LoadedCanon*> all_canons() const;  // authors then joint
};

struct ExperimentParams {
  WanParams wan;
  Support support = Support::Common;
};

struct WanMethod {};
struct DeltaMethod {
  DeltaMetric metric = DeltaMetric::Manhattan;
};
struct PcaMethod {
  int components = 4;
};
using AttributionMethod = std::variant<WanMethod, DeltaMethod, PcaMethod>;

std::string method_name(const AttributionMethod& method);

/// Pairwise relative entropies between author profiles, in centinats,
/// common support over all profiles. The diagonal is undefined and stored
/// as NaN.
struct SimilarityMatrix {
  std::vector<std::string> authors;
  Eigen::MatrixXd centinats;

  struct ScatterPoint {
    std::string first, second;
    double forward_cn, reverse_cn;
  };
  /// One point per unordered author pair: the two directed entropies.
  std::vector<ScatterPoint> asymmetry() const;
};

SimilarityMatrix profile_similarity_matrix(const LoadedCorpus& corpus,
                                           const WanParams& params);

struct LeaveOneOutEntry {
  std::string true_author;
  std::string play_id;
  bool skipped_singleton = false;
  std::optional<AttributionReport> report;
  bool correct = false;
};

struct LeaveOneOutResult {
  std::string method;
  std::size_t words = 0;
  std::vector<LeaveOneOutEntry> entries;
  int attributed = 0;
  int correct = 0;
  int skipped = 0;
  double accuracy = 0.0;  // over attributed entries
};

/// Attributes every play of every solo canon after removing it from its
/// author's profile. WAN reports carry the average-playwright discount; the
/// pooled profile also excludes the held-out play. Plays whose author has
/// no other text are skipped and flagged.
LeaveOneOutResult leave_one_out(const LoadedCorpus& corpus,
                                const ExperimentParams& params,
                                const AttributionMethod& method);

/// Attribution of one play against solo and joint canons together. The
/// play, when present in a canon, is removed from it first. A single
/// candidate yields a trivial one-entry report.
AttributionReport attribute_collaborative(const LoadedPlay& play,
                                          const LoadedCorpus& candidates,
                                          const ExperimentParams& params,
                                          bool with_discount = true);

struct IntraplayParams {
  double alpha = 0.75;
  int window = 10;
  FunctionWordLexicon act_lexicon;
  FunctionWordLexicon scene_lexicon;
  Support support = Support::Common;
};

struct IntraplayReport {
  std::string play_id;
  std::string focal_first, focal_second;

  struct ActEntry {
    int act = 0;
    std::size_t tokens = 0;
    AttributionReport report;  // over the full candidate set
  };
  struct SceneEntry {
    int act = 0;
    int scene = 0;
    std::size_t tokens = 0;
    AttributionReport report;        // over the two focal candidates
    double signed_margin_nats = 0.0;  // positive toward focal_first
  };

  std::vector<ActEntry> acts;
  std::vector<SceneEntry> scenes;
};

/// Act-by-act attribution over all candidate canons and scene-by-scene
/// attribution between the two focal authors. The target play is removed
/// from every canon that contains it before anything is attributed. Acts
/// use the act lexicon, scenes the scene lexicon.
IntraplayReport intraplay(const LoadedPlay& play, const LoadedCorpus& candidates,
                          const std::string& focal_first,
                          const std::string& focal_second,
                          const IntraplayParams& params);

enum class Granularity { Play, Act, Scene };

struct TrainSizeResult {
  std::vector<std::size_t> sizes;
  std::vector<double> accuracy;
  std::vector<int> correct;
  std::vector<int> attempted;
  std::size_t best_n = 0;       // smallest size on ties
  double best_accuracy = 0.0;
};

/// Sweeps lexicon prefix sizes, running leave-one-out at the requested
/// granularity for each size. Acts and scenes are attributed with the whole
/// parent play removed from its author's profile.
TrainSizeResult train_lexicon_size(const LoadedCorpus& corpus,
                                   const ExperimentParams& params,
                                   Granularity granularity,
                                   const AttributionMethod& method,
                                   std::vector<std::size_t> sizes = {});

/// Leave-one-out at a fixed size and granularity (the single-size version
/// of the sweep above). leave_one_out() is the Play-granularity case.
LeaveOneOutResult leave_one_out_units(const LoadedCorpus& corpus,
                                      const ExperimentParams& params,
                                      Granularity granularity,
                                      const AttributionMethod& method);

}  // namespace stylo
