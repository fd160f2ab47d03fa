#include "stylo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stylo/bench.hpp"
#include "stylo/entropy.hpp"
#include "stylo/errors.hpp"
#include "stylo/experiments.hpp"
#include "stylo/report_io.hpp"
#include "stylo/synthetic.hpp"
#include "stylo/wan_io.hpp"

namespace stylo::cli {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("failed writing " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

struct CommonOptions {
  double alpha = 0.75;
  int window = 10;
  std::string lexicon_path;
  std::string words = "full";
  std::string support = "common";
  std::string format = "csv";
  std::string mode = "structured";

  void add_params(CLI::App* cmd, bool need_lexicon = true) {
    cmd->add_option("--alpha", alpha, "Decay factor in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    cmd->add_option("--window", window, "Window size (positions ahead)")
        ->check(CLI::PositiveNumber);
    auto* lex = cmd->add_option("--lexicon", lexicon_path,
                                "Function-word lexicon file")
                    ->envname("STYLO_LEXICON");
    if (need_lexicon) lex->required();
    cmd->add_option("--words", words,
                    "Lexicon words to use: full, act, scene, or a prefix size");
  }
  void add_support(CLI::App* cmd) {
    cmd->add_option("--support", support,
                    "Entropy support: full, profile, or common")
        ->check(CLI::IsMember({"full", "profile", "common"}));
  }
  void add_format(CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  void add_mode(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "Play file format")
        ->check(CLI::IsMember({"structured", "flat"}));
  }

  ParseMode parse_mode() const {
    return mode == "flat" ? ParseMode::Flat : ParseMode::Structured;
  }
  Support support_mode() const {
    if (support == "full") return Support::Full;
    if (support == "profile") return Support::Profile;
    return Support::Common;
  }

  FunctionWordLexicon load() const { return load_lexicon(lexicon_path); }

  // Applies the --words selection: sub-lexicon names swap the lexicon out,
  // numbers select a prefix.
  WanParams wan_params(const FunctionWordLexicon& lexicon,
                       const std::string& selection) const {
    WanParams params;
    params.alpha = alpha;
    params.window = window;
    if (selection == "full") {
      params.lexicon = lexicon;
      params.n_words = lexicon.size();
    } else if (selection == "act") {
      params.lexicon = lexicon.sub_lexicon(SubLexicon::Act);
      params.n_words = params.lexicon.size();
    } else if (selection == "scene") {
      params.lexicon = lexicon.sub_lexicon(SubLexicon::Scene);
      params.n_words = params.lexicon.size();
    } else {
      std::size_t n = 0;
      try {
        n = static_cast<std::size_t>(std::stoul(selection));
      } catch (const std::exception&) {
        throw InvalidParameter("bad --words value: " + selection);
      }
      params.lexicon = lexicon;
      params.n_words = n;
    }
    params.validate();
    return params;
  }
  WanParams wan_params(const FunctionWordLexicon& lexicon) const {
    return wan_params(lexicon, words);
  }
};

AttributionMethod parse_method(const std::string& method,
                               const std::string& metric, int pcs) {
  if (method == "wan") return WanMethod{};
  if (method == "delta") {
    if (metric == "manhattan") return DeltaMethod{DeltaMetric::Manhattan};
    if (metric == "euclidean") return DeltaMethod{DeltaMetric::Euclidean};
    if (metric == "cosine") return DeltaMethod{DeltaMetric::Cosine};
    throw InvalidParameter("bad --metric value: " + metric);
  }
  if (method == "pca") return PcaMethod{pcs};
  throw InvalidParameter("bad --method value: " + method);
}

LoadedCorpus load_corpus(const std::string& manifest_path, ParseMode mode) {
  fs::path path(manifest_path);
  CorpusManifest manifest = CorpusManifest::load(path);
  return LoadedCorpus::load(manifest, path.parent_path(), mode);
}

std::vector<fs::path> profile_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    fs::path path(input);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.path().extension() == ".wan") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  if (files.empty()) throw InvalidParameter("no profile files found");
  return files;
}

// ---- subcommand bodies ----

int cmd_validate(const CommonOptions& common, const std::string& manifest_path) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  if (!common.lexicon_path.empty()) {
    FunctionWordLexicon lexicon = common.load();
    std::cout << "lexicon: " << lexicon.size() << " words, "
              << lexicon.act_count() << " act-flagged, "
              << lexicon.scene_count() << " scene-flagged\n";
  }
  auto describe = [](const LoadedCanon& canon) {
    std::size_t tokens = 0, scenes = 0, acts = 0;
    for (const auto& play : canon.plays) {
      tokens += play.doc.token_count();
      acts += play.doc.acts.size();
      for (const auto& act : play.doc.acts) scenes += act.scenes.size();
    }
    std::cout << "  " << canon.name << ": " << canon.plays.size()
              << " plays, " << acts << " acts, " << scenes << " scenes, "
              << tokens << " tokens\n";
  };
  std::cout << "authors: " << corpus.authors.size() << "\n";
  for (const auto& canon : corpus.authors) describe(canon);
  if (!corpus.joint.empty()) {
    std::cout << "joint canons: " << corpus.joint.size() << "\n";
    for (const auto& canon : corpus.joint) describe(canon);
  }
  if (!corpus.disputed.empty()) {
    std::cout << "disputed plays: " << corpus.disputed.size() << "\n";
    for (const auto& disputed : corpus.disputed) {
      std::cout << "  " << disputed.play.id << "\n";
    }
  }
  std::cout << "corpus ok\n";
  return 0;
}

int cmd_build_profile(const CommonOptions& common,
                      const std::vector<std::string>& plays,
                      const std::string& manifest_path,
                      const std::string& canon_name,
                      const std::string& out_path) {
  WanParams params = common.wan_params(common.load());
  std::vector<Wan> wans;
  if (!manifest_path.empty()) {
    if (canon_name.empty()) {
      throw InvalidParameter("--manifest needs --canon NAME");
    }
    LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
    const LoadedCanon* canon = corpus.find_canon(canon_name);
    if (!canon) throw InvalidParameter("no canon named '" + canon_name + "'");
    for (const auto& play : canon->plays) {
      auto units = speech_units(play.doc);
      wans.push_back(build_wan(units, params));
    }
  } else {
    if (plays.empty()) throw InvalidParameter("no play files given");
    for (const auto& file : plays) {
      PlayDocument doc = load_play(file, common.parse_mode());
      auto units = speech_units(doc);
      wans.push_back(build_wan(units, params));
    }
  }
  Wan profile = aggregate(wans);
  save_wan(profile, out_path);
  return 0;
}

int cmd_attribute(const CommonOptions& common, const std::string& text_path,
                  const std::vector<std::string>& profile_inputs,
                  const std::string& discount_path,
                  const std::string& out_path) {
  std::vector<std::pair<std::string, Wan>> profiles;
  for (const auto& file : profile_files(profile_inputs)) {
    profiles.emplace_back(file.stem().string(), load_wan(file));
  }
  const WanParams& params = profiles.front().second.params;
  for (const auto& [name, wan] : profiles) {
    if (!wan.params.compatible_with(params)) {
      throw MismatchedParams("profile '" + name +
                             "' was built with different parameters");
    }
  }

  PlayDocument doc = load_play(text_path, common.parse_mode());
  auto units = speech_units(doc);
  MarkovChain text_chain = normalize(build_wan(units, params));

  std::vector<std::pair<std::string, MarkovChain>> chains;
  for (const auto& [name, wan] : profiles) {
    chains.emplace_back(name, normalize(wan));
  }

  MarkovChain pooled;
  bool with_discount = !discount_path.empty();
  if (with_discount) {
    Wan pooled_wan = load_wan(discount_path);
    if (!pooled_wan.params.compatible_with(params)) {
      throw MismatchedParams("discount profile has different parameters");
    }
    pooled = normalize(pooled_wan);
  }

  std::string text_id = doc.title.empty()
                            ? fs::path(text_path).stem().string()
                            : doc.title;
  AttributionReport report =
      attribute(text_id, text_chain, chains, common.support_mode(),
                with_discount ? &pooled : nullptr);

  std::string rendered = common.format == "json" ? report_to_json(report)
                                                 : report_to_csv(report);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    write_file(out_path, rendered);
  }
  std::cout << "winner: " << report.winner << " (margin "
            << format_score(report.margin, report.unit) << ")\n";
  return 0;
}

int cmd_similarity(const CommonOptions& common, const std::string& manifest_path,
                   const std::string& out_path, const std::string& scatter_path,
                   bool replicate) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  WanParams params = common.wan_params(common.load());
  SimilarityMatrix matrix = profile_similarity_matrix(corpus, params);
  write_file(out_path, similarity_matrix_csv(matrix));
  if (!scatter_path.empty()) write_file(scatter_path, asymmetry_csv(matrix));

  if (replicate) {
    auto index_of = [&](const std::string& name) -> Eigen::Index {
      for (std::size_t i = 0; i < matrix.authors.size(); ++i) {
        if (matrix.authors[i] == name) return static_cast<Eigen::Index>(i);
      }
      throw InvalidExperiment("--replicate needs a canon named '" + name + "'");
    };
    const Eigen::Index chapman = index_of("Chapman");
    const Eigen::Index shakespeare = index_of("Shakespeare");
    const double forward = matrix.centinats(chapman, shakespeare);
    const double reverse = matrix.centinats(shakespeare, chapman);
    const bool ok =
        std::abs(forward - 4.7) <= 0.5 && std::abs(reverse - 4.8) <= 0.5;
    std::cout << "replication check: Chapman->Shakespeare = "
              << format_score(forward / 100.0, ScoreUnit::Nats)
              << " cn (expected 4.7 +/- 0.5), Shakespeare->Chapman = "
              << format_score(reverse / 100.0, ScoreUnit::Nats)
              << " cn (expected 4.8 +/- 0.5): " << (ok ? "PASS" : "FAIL")
              << "\n";
    if (!ok) return 2;
  }
  return 0;
}

int cmd_loo(const CommonOptions& common, const std::string& manifest_path,
            const std::string& method, const std::string& metric, int pcs,
            const std::string& out_dir) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  ExperimentParams params;
  params.wan = common.wan_params(common.load());
  params.support = common.support_mode();
  LeaveOneOutResult result =
      leave_one_out(corpus, params, parse_method(method, metric, pcs));

  fs::path dir(out_dir);
  if (common.format == "json") {
    write_file(dir / ("loo_" + result.method + ".json"), loo_to_json(result));
  } else {
    write_file(dir / ("loo_" + result.method + ".csv"), loo_to_csv(result));
  }
  write_file(dir / ("loo_" + result.method + "_summary.csv"),
             loo_summary_csv({result}));
  std::cout << result.method << " accuracy: " << result.correct << "/"
            << result.attributed << " = " << result.accuracy * 100.0 << "%";
  if (result.skipped) std::cout << " (" << result.skipped << " skipped)";
  std::cout << "\n";
  return 0;
}

int cmd_collab(const CommonOptions& common, const std::string& manifest_path,
               const std::string& out_dir) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  ExperimentParams params;
  params.wan = common.wan_params(common.load());
  params.support = common.support_mode();

  std::vector<AttributionReport> reports;
  for (const auto& canon : corpus.joint) {
    for (const auto& play : canon.plays) {
      reports.push_back(attribute_collaborative(play, corpus, params));
    }
  }
  for (const auto& disputed : corpus.disputed) {
    if (disputed.candidates.empty()) {
      reports.push_back(attribute_collaborative(disputed.play, corpus, params));
      continue;
    }
    LoadedCorpus restricted;
    for (const auto& name : disputed.candidates) {
      const LoadedCanon* canon = corpus.find_canon(name);
      if (!canon) {
        throw InvalidExperiment("disputed play '" + disputed.play.id +
                                "' names unknown canon '" + name + "'");
      }
      restricted.authors.push_back(*canon);
    }
    reports.push_back(
        attribute_collaborative(disputed.play, restricted, params));
  }
  if (reports.empty()) {
    throw InvalidExperiment("manifest has no joint canons or disputed plays");
  }

  std::ostringstream csv;
  csv << "text,candidate,score,discounted,rank\n";
  for (const auto& report : reports) {
    std::istringstream rows(report_to_csv(report));
    std::string line;
    std::getline(rows, line);  // drop per-report header
    while (std::getline(rows, line)) csv << line << "\n";
    std::cout << report.text_id << " -> " << report.winner << "\n";
  }
  write_file(fs::path(out_dir) / "collab_reports.csv", csv.str());
  if (common.format == "json") {
    std::ostringstream json;
    for (const auto& report : reports) json << report_to_json(report);
    write_file(fs::path(out_dir) / "collab_reports.json", json.str());
  }
  return 0;
}

int cmd_intraplay(const CommonOptions& common, const std::string& manifest_path,
                  const std::string& play_path, std::string first,
                  std::string second, const std::string& act_words,
                  const std::string& scene_words, const std::string& out_dir) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  FunctionWordLexicon lexicon = common.load();

  LoadedPlay play;
  play.doc = load_play(play_path, common.parse_mode());
  play.id = play.doc.title.empty() ? fs::path(play_path).stem().string()
                                   : play.doc.title;

  if (first.empty() || second.empty()) {
    for (const auto& disputed : corpus.disputed) {
      if (disputed.play.id == play.id && disputed.candidates.size() >= 2) {
        first = disputed.candidates[0];
        second = disputed.candidates[1];
      }
    }
    if (first.empty() || second.empty()) {
      throw InvalidParameter(
          "give --first and --second, or list the play under [disputed] with "
          "two candidates");
    }
  }

  IntraplayParams params;
  params.alpha = common.alpha;
  params.window = common.window;
  WanParams act_params = common.wan_params(lexicon, act_words);
  WanParams scene_params = common.wan_params(lexicon, scene_words);
  params.act_lexicon = act_params.lexicon.prefix(act_params.n_words);
  params.scene_lexicon = scene_params.lexicon.prefix(scene_params.n_words);
  params.support = common.support_mode();

  IntraplayReport report = intraplay(play, corpus, first, second, params);
  fs::path dir(out_dir);
  write_file(dir / "intraplay_acts.csv", intraplay_acts_csv(report));
  write_file(dir / "intraplay_scenes.csv", intraplay_scenes_csv(report));
  if (common.format == "json") {
    write_file(dir / "intraplay.json", intraplay_to_json(report));
  }
  for (const auto& act : report.acts) {
    std::cout << "act " << act.act << " -> " << act.report.winner << "\n";
  }
  return 0;
}

int cmd_train_size(const CommonOptions& common, const std::string& manifest_path,
                   const std::string& granularity, const std::string& method,
                   const std::string& metric, int pcs, std::size_t min_words,
                   std::size_t max_words, const std::string& out_path) {
  LoadedCorpus corpus = load_corpus(manifest_path, common.parse_mode());
  ExperimentParams params;
  params.wan = common.wan_params(common.load());
  params.support = common.support_mode();

  Granularity g = Granularity::Play;
  if (granularity == "act") g = Granularity::Act;
  else if (granularity == "scene") g = Granularity::Scene;
  else if (granularity != "play") {
    throw InvalidParameter("bad --granularity value: " + granularity);
  }

  std::vector<std::size_t> sizes;
  if (min_words || max_words) {
    const std::size_t lo = min_words ? min_words : 5;
    const std::size_t hi = max_words ? max_words : params.wan.lexicon.size();
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
  }

  TrainSizeResult result = train_lexicon_size(
      corpus, params, g, parse_method(method, metric, pcs), sizes);
  write_file(out_path, train_curve_csv(result));
  std::cout << "best words: " << result.best_n << " (accuracy "
            << result.best_accuracy * 100.0 << "%)\n";
  return 0;
}

int cmd_synth_bench(int authors, int plays, int tokens, std::uint64_t seed,
                    int function_words, double min_divergence,
                    bool matched_stationary, const CommonOptions& common,
                    const std::string& out_dir) {
  SynthBenchConfig config;
  config.generators.authors = authors;
  config.generators.function_words = function_words;
  config.generators.min_divergence = min_divergence;
  config.generators.matched_stationary = matched_stationary;
  config.generators.seed = seed;
  config.plays_per_author = plays;
  config.tokens_per_play = tokens;
  config.alpha = common.alpha;
  config.window = common.window;
  config.support = common.support_mode();

  SynthBenchResult result = run_synth_bench(config);

  std::vector<double> accuracies;
  for (const auto& loo : result.results) accuracies.push_back(loo.accuracy);
  fs::path dir(out_dir);
  write_file(dir / "accuracy_table.csv",
             accuracy_table_csv(result.method_order, accuracies));
  write_file(dir / "loo_summary.csv", loo_summary_csv(result.results));
  for (const auto& loo : result.results) {
    write_file(dir / ("loo_" + loo.method + ".csv"), loo_to_csv(loo));
  }

  std::cout << "generators: min pairwise divergence "
            << result.min_pairwise_divergence << " nats\n";
  for (const auto& loo : result.results) {
    std::cout << loo.method << ": " << loo.correct << "/" << loo.attributed
              << " = " << loo.accuracy * 100.0 << "%\n";
  }
  for (const auto& note : result.notes) std::cout << note << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  std::vector<std::string> with_program = args;
  with_program.insert(with_program.begin(), "stylo");
  std::vector<const char*> argv;
  argv.reserve(with_program.size());
  for (const auto& arg : with_program) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Authorship attribution with function-word adjacency networks, "
      "relative entropy, and frequency baselines"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read long-option defaults from a file");

  int exit_code = 0;
  auto wrap = [&exit_code](auto fn) {
    return [&exit_code, fn]() { exit_code = fn(); };
  };

  // validate-corpus
  auto* validate = app.add_subcommand("validate-corpus",
                                      "Parse a manifest and all its plays");
  CommonOptions validate_common;
  std::string validate_manifest;
  validate->add_option("--manifest", validate_manifest, "Corpus manifest")
      ->required();
  validate_common.add_params(validate, /*need_lexicon=*/false);
  validate_common.add_mode(validate);
  validate->callback(wrap([&]() {
    return cmd_validate(validate_common, validate_manifest);
  }));

  // build-profile
  auto* build = app.add_subcommand("build-profile",
                                   "Aggregate plays into a profile network");
  CommonOptions build_common;
  std::vector<std::string> build_plays;
  std::string build_manifest, build_canon, build_out;
  build->add_option("plays", build_plays, "Play files");
  build->add_option("--manifest", build_manifest, "Corpus manifest");
  build->add_option("--canon", build_canon, "Canon name within the manifest");
  build->add_option("--out", build_out, "Output .wan file")->required();
  build_common.add_params(build);
  build_common.add_mode(build);
  build->callback(wrap([&]() {
    return cmd_build_profile(build_common, build_plays, build_manifest,
                             build_canon, build_out);
  }));

  // attribute
  auto* attr = app.add_subcommand("attribute",
                                  "Attribute a text among profile networks");
  CommonOptions attr_common;
  std::string attr_text, attr_discount, attr_out;
  std::vector<std::string> attr_profiles;
  attr->add_option("--text", attr_text, "Play file to attribute")->required();
  attr->add_option("--profiles", attr_profiles,
                   "Profile .wan files or directories")
      ->required();
  attr->add_option("--discount", attr_discount,
                   "Pooled profile for the average-playwright discount");
  attr->add_option("--out", attr_out, "Write the report here (default stdout)");
  attr_common.add_support(attr);
  attr_common.add_format(attr);
  attr_common.add_mode(attr);
  attr->callback(wrap([&]() {
    return cmd_attribute(attr_common, attr_text, attr_profiles, attr_discount,
                         attr_out);
  }));

  // similarity-matrix
  auto* sim = app.add_subcommand("similarity-matrix",
                                 "Pairwise profile entropies in centinats");
  CommonOptions sim_common;
  std::string sim_manifest, sim_out = "similarity_matrix.csv";
  std::string sim_scatter;
  bool sim_replicate = false;
  sim->add_option("--manifest", sim_manifest, "Corpus manifest")->required();
  sim->add_option("--out", sim_out, "Matrix CSV path");
  sim->add_option("--asymmetry-out", sim_scatter,
                  "Also write the direction-pair scatter CSV here");
  sim->add_flag("--replicate", sim_replicate,
                "Check the Chapman/Shakespeare pair against 4.7/4.8 cn");
  sim_common.add_params(sim);
  sim_common.add_mode(sim);
  sim->callback(wrap([&]() {
    return cmd_similarity(sim_common, sim_manifest, sim_out, sim_scatter,
                          sim_replicate);
  }));

  // loo
  auto* loo = app.add_subcommand("loo", "Leave-one-out play attribution");
  CommonOptions loo_common;
  std::string loo_manifest, loo_method = "wan",
                     loo_metric = "manhattan", loo_out = ".";
  int loo_pcs = 4;
  loo->add_option("--manifest", loo_manifest, "Corpus manifest")->required();
  loo->add_option("--method", loo_method, "wan, delta, or pca");
  loo->add_option("--metric", loo_metric,
                  "Delta metric: manhattan, euclidean, cosine");
  loo->add_option("--pcs", loo_pcs, "PCA component count");
  loo->add_option("--out-dir", loo_out, "Report directory");
  loo_common.add_params(loo);
  loo_common.add_support(loo);
  loo_common.add_format(loo);
  loo_common.add_mode(loo);
  loo->callback(wrap([&]() {
    return cmd_loo(loo_common, loo_manifest, loo_method, loo_metric, loo_pcs,
                   loo_out);
  }));

  // collab
  auto* collab = app.add_subcommand(
      "collab", "Attribute joint-canon and disputed plays whole");
  CommonOptions collab_common;
  std::string collab_manifest, collab_out = ".";
  collab->add_option("--manifest", collab_manifest, "Corpus manifest")
      ->required();
  collab->add_option("--out-dir", collab_out, "Report directory");
  collab_common.add_params(collab);
  collab_common.add_support(collab);
  collab_common.add_format(collab);
  collab_common.add_mode(collab);
  collab->callback(wrap([&]() {
    return cmd_collab(collab_common, collab_manifest, collab_out);
  }));

  // intraplay
  auto* intra = app.add_subcommand(
      "intraplay", "Act- and scene-level attribution of one play");
  CommonOptions intra_common;
  std::string intra_manifest, intra_play, intra_first, intra_second;
  std::string intra_act_words = "act", intra_scene_words = "scene";
  std::string intra_out = ".";
  intra->add_option("--manifest", intra_manifest, "Corpus manifest")
      ->required();
  intra->add_option("--play", intra_play, "Play file to dissect")->required();
  intra->add_option("--first", intra_first, "First focal author");
  intra->add_option("--second", intra_second, "Second focal author");
  intra->add_option("--act-words", intra_act_words,
                    "Lexicon for act networks (act, scene, full, or a size)");
  intra->add_option("--scene-words", intra_scene_words,
                    "Lexicon for scene networks");
  intra->add_option("--out-dir", intra_out, "Report directory");
  intra_common.add_params(intra);
  intra_common.add_support(intra);
  intra_common.add_format(intra);
  intra_common.add_mode(intra);
  intra->callback(wrap([&]() {
    return cmd_intraplay(intra_common, intra_manifest, intra_play, intra_first,
                         intra_second, intra_act_words, intra_scene_words,
                         intra_out);
  }));

  // train-size
  auto* train = app.add_subcommand(
      "train-size", "Sweep lexicon sizes for the best attribution accuracy");
  CommonOptions train_common;
  std::string train_manifest, train_granularity = "play",
                     train_method = "wan", train_metric = "manhattan";
  std::string train_out = "train_curve.csv";
  int train_pcs = 4;
  std::size_t train_min = 0, train_max = 0;
  train->add_option("--manifest", train_manifest, "Corpus manifest")
      ->required();
  train->add_option("--granularity", train_granularity, "play, act, or scene");
  train->add_option("--method", train_method, "wan, delta, or pca");
  train->add_option("--metric", train_metric, "Delta metric");
  train->add_option("--pcs", train_pcs, "PCA component count");
  train->add_option("--min-words", train_min, "Smallest size (default 5)");
  train->add_option("--max-words", train_max,
                    "Largest size (default lexicon size)");
  train->add_option("--out", train_out, "Curve CSV path");
  train_common.add_params(train);
  train_common.add_support(train);
  train_common.add_mode(train);
  train->callback(wrap([&]() {
    return cmd_train_size(train_common, train_manifest, train_granularity,
                          train_method, train_metric, train_pcs, train_min,
                          train_max, train_out);
  }));

  // synth-bench
  auto* synth = app.add_subcommand(
      "synth-bench", "Benchmark all methods on a generated corpus");
  CommonOptions synth_common;
  int synth_authors = 6, synth_plays = 12, synth_tokens = 20000;
  int synth_fw = 20;
  std::uint64_t synth_seed = 1;
  double synth_div = 0.05;
  bool synth_matched = false;
  std::string synth_out = ".";
  synth->add_option("--authors", synth_authors, "Synthetic author count");
  synth->add_option("--plays", synth_plays, "Plays per author");
  synth->add_option("--tokens", synth_tokens, "Tokens per play");
  synth->add_option("--seed", synth_seed, "Generator seed");
  synth->add_option("--function-words", synth_fw, "Generator lexicon size");
  synth->add_option("--min-divergence", synth_div,
                    "Minimum pairwise generator divergence, nats");
  synth->add_flag("--matched-stationary", synth_matched,
                  "Generators share word frequencies, differ in adjacency");
  synth->add_option("--out-dir", synth_out, "Report directory");
  synth_common.add_params(synth, /*need_lexicon=*/false);
  synth_common.add_support(synth);
  synth->callback(wrap([&]() {
    return cmd_synth_bench(synth_authors, synth_plays, synth_tokens, synth_seed,
                           synth_fw, synth_div, synth_matched, synth_common,
                           synth_out);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace stylo::cli
