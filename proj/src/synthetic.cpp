#include "stylo/synthetic.hpp"

#include <cmath>

#include "stylo/errors.hpp"
#include "stylo/markov.hpp"

namespace stylo {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int geometric_length(std::mt19937_64& rng, double mean) {
  const double p = 1.0 / mean;
  const double u = uniform01(rng);
  const int length =
      1 + static_cast<int>(std::floor(std::log1p(-u) / std::log1p(-p)));
  return std::min(length, static_cast<int>(mean * 20));
}

Eigen::Index sample_row(const Eigen::MatrixXd& transition, Eigen::Index state,
                        std::mt19937_64& rng) {
  const double u = uniform01(rng);
  double cumulative = 0.0;
  const Eigen::Index n = transition.cols();
  for (Eigen::Index j = 0; j < n; ++j) {
    cumulative += transition(state, j);
    if (u < cumulative) return j;
  }
  return n - 1;
}

std::string word_label(int index) {
  std::string number = std::to_string(index + 1);
  if (number.size() < 2) number.insert(number.begin(), '0');
  return "w" + number;
}

// Spiky random stochastic row over n entries, mixed with uniform mass delta.
Eigen::RowVectorXd random_row(int n, double delta, std::mt19937_64& rng) {
  Eigen::RowVectorXd row(n);
  for (int j = 0; j < n; ++j) {
    const double u = uniform01(rng);
    row[j] = u * u * u + 1e-3;
  }
  row /= row.sum();
  row = (1.0 - delta) * row +
        delta * Eigen::RowVectorXd::Constant(n, 1.0 / n);
  return row;
}

Eigen::MatrixXd random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(uniform01(rng) * (i + 1));
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(j)]);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return m;
}

Eigen::MatrixXd make_transition(const SyntheticConfig& config,
                                std::mt19937_64& rng) {
  const int n = config.function_words;
  const int m = n + 1;
  const double share = config.filler_share;

  Eigen::MatrixXd fw_block(n, n);
  if (config.matched_stationary) {
    // Average of permutations stays doubly stochastic, so every author's
    // function-word stationary distribution is uniform: frequency methods
    // see nothing while adjacency structure still differs.
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    const int permutations = 3;
    for (int r = 0; r < permutations; ++r) sum += random_permutation(n, rng);
    fw_block = (1.0 - config.uniform_mix) * (sum / permutations) +
               config.uniform_mix * Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  } else {
    for (int i = 0; i < n; ++i) {
      fw_block.row(i) = random_row(n, config.uniform_mix, rng);
    }
  }

  Eigen::MatrixXd transition(m, m);
  for (int i = 0; i < n; ++i) {
    transition.row(i).head(n) = (1.0 - share) * fw_block.row(i);
    transition(i, n) = share;
  }
  if (config.matched_stationary) {
    transition.row(n).head(n).setConstant((1.0 - share) / n);
  } else {
    transition.row(n).head(n) = (1.0 - share) * random_row(n, config.uniform_mix, rng);
  }
  transition(n, n) = share;
  return transition;
}

}  // namespace

FunctionWordLexicon synthetic_lexicon(int n) {
  if (n < 1) throw InvalidParameter("synthetic lexicon needs n >= 1");
  std::vector<FunctionWordLexicon::Entry> entries;
  for (int i = 0; i < n; ++i) {
    FunctionWordLexicon::Entry entry;
    entry.word = word_label(i);
    entry.act = i < (3 * n) / 4;
    entry.scene = i < n / 2;
    entries.push_back(std::move(entry));
  }
  return FunctionWordLexicon(std::move(entries));
}

std::vector<std::string> synthetic_author_names(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    std::string number = std::to_string(i + 1);
    if (number.size() < 2) number.insert(number.begin(), '0');
    names.push_back("author" + number);
  }
  return names;
}

double generator_divergence(const SyntheticAuthor& a, const SyntheticAuthor& b) {
  const int n = a.function_words();
  if (n != b.function_words()) {
    throw DimensionMismatch("generators have different sizes");
  }
  MarkovChain ca = chain_from_stochastic(
      row_normalized(a.transition.topLeftCorner(n, n)));
  MarkovChain cb = chain_from_stochastic(
      row_normalized(b.transition.topLeftCorner(n, n)));
  return relative_entropy(ca, cb, Support::Full).nats;
}

std::vector<SyntheticAuthor> make_synthetic_authors(const SyntheticConfig& config) {
  if (config.authors < 1) throw InvalidParameter("need at least one author");
  if (config.function_words < 2) {
    throw InvalidParameter("synthetic generators need at least two function words");
  }
  const auto names = synthetic_author_names(config.authors);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng(config.seed + 0x9E3779B97F4A7C15ull *
                                          static_cast<std::uint64_t>(attempt));
    std::vector<SyntheticAuthor> authors;
    for (int a = 0; a < config.authors; ++a) {
      authors.push_back({names[static_cast<std::size_t>(a)],
                         make_transition(config, rng)});
    }
    bool separated = true;
    for (std::size_t i = 0; i < authors.size() && separated; ++i) {
      for (std::size_t j = 0; j < authors.size() && separated; ++j) {
        if (i == j) continue;
        if (generator_divergence(authors[i], authors[j]) < config.min_divergence) {
          separated = false;
        }
      }
    }
    if (separated) return authors;
  }
  throw InvalidExperiment(
      "could not draw generators this far apart; lower min_divergence");
}

namespace {

struct Emitter {
  const SyntheticAuthor& author;
  std::mt19937_64& rng;
  Eigen::Index state;

  Emitter(const SyntheticAuthor& a, std::mt19937_64& r)
      : author(a), rng(r),
        state(static_cast<Eigen::Index>(
            uniform01(r) * static_cast<double>(a.transition.rows()))) {}

  std::string next_token() {
    state = sample_row(author.transition, state, rng);
    const int n = author.function_words();
    if (state < n) return word_label(static_cast<int>(state));
    return "zz";  // filler class: occupies a position, never in the lexicon
  }
};

std::vector<Speech> emit_speeches(Emitter& emitter, int tokens,
                                  double mean_speech_tokens,
                                  std::mt19937_64& rng) {
  std::vector<Speech> speeches;
  int remaining = tokens;
  while (remaining > 0) {
    const int length =
        std::min(remaining, geometric_length(rng, mean_speech_tokens));
    Speech speech;
    speech.speaker = "Voice";
    speech.tokens.reserve(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t) speech.tokens.push_back(emitter.next_token());
    speeches.push_back(std::move(speech));
    remaining -= length;
  }
  return speeches;
}

}  // namespace

PlayDocument generate_play(const SyntheticAuthor& author, int tokens,
                           double mean_speech_tokens, std::mt19937_64& rng,
                           std::string title) {
  PlayDocument doc;
  doc.title = std::move(title);
  doc.author_label = author.name;
  Emitter emitter(author, rng);
  doc.acts.push_back(
      Act{1, {Scene{1, emit_speeches(emitter, tokens, mean_speech_tokens, rng)}}});
  return doc;
}

PlayDocument generate_collaboration(
    const std::vector<const SyntheticAuthor*>& act_authors,
    const std::vector<std::vector<int>>& tokens_per_scene,
    double mean_speech_tokens, std::mt19937_64& rng, std::string title) {
  if (act_authors.empty() || act_authors.size() != tokens_per_scene.size()) {
    throw InvalidParameter("collaboration plan is inconsistent");
  }
  PlayDocument doc;
  doc.title = std::move(title);
  for (std::size_t a = 0; a < act_authors.size(); ++a) {
    Act act;
    act.number = static_cast<int>(a) + 1;
    Emitter emitter(*act_authors[a], rng);
    for (std::size_t s = 0; s < tokens_per_scene[a].size(); ++s) {
      Scene scene;
      scene.number = static_cast<int>(s) + 1;
      scene.speeches = emit_speeches(emitter, tokens_per_scene[a][s],
                                     mean_speech_tokens, rng);
      act.scenes.push_back(std::move(scene));
    }
    doc.acts.push_back(std::move(act));
  }
  return doc;
}

LoadedCorpus synthetic_corpus(const std::vector<SyntheticAuthor>& authors,
                              int plays_per_author, int tokens_per_play,
                              double mean_speech_tokens, std::mt19937_64& rng) {
  LoadedCorpus corpus;
  for (const auto& author : authors) {
    LoadedCanon canon;
    canon.name = author.name;
    for (int k = 0; k < plays_per_author; ++k) {
      std::string title = author.name + " play " + std::to_string(k + 1);
      LoadedPlay play;
      play.doc = generate_play(author, tokens_per_play, mean_speech_tokens,
                               rng, title);
      play.id = title;
      canon.plays.push_back(std::move(play));
    }
    corpus.authors.push_back(std::move(canon));
  }
  return corpus;
}

}  // namespace stylo
