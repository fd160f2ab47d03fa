#include "stylo/entropy.hpp"

#include <cmath>
#include <limits>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

void check_same_size(const MarkovChain& a, const MarkovChain& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("chains have different sizes: " +
                            std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace

Eigen::ArrayXX<bool> common_support_mask(
    std::span<const MarkovChain> candidates) {
  if (candidates.empty()) {
    throw MissingCandidates("common support needs at least one candidate chain");
  }
  const Eigen::Index n = candidates.front().size();
  Eigen::ArrayXX<bool> mask = Eigen::ArrayXX<bool>::Constant(n, n, true);
  for (const auto& c : candidates) {
    if (c.size() != n) {
      throw DimensionMismatch("candidate chains have different sizes");
    }
    mask = mask && (c.p.array() != 0.0);
  }
  return mask;
}

EntropyValue entropy_on_mask(const MarkovChain& p1, const MarkovChain& p2,
                             const Eigen::ArrayXX<bool>* mask) {
  check_same_size(p1, p2);
  const Eigen::Index n = p1.size();
  double nats = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double weight = p1.pi[i];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (mask && !(*mask)(i, j)) continue;
      const double a = p1.p(i, j);
      if (a == 0.0) continue;  // 0 log 0 = 0
      const double b = p2.p(i, j);
      if (b == 0.0) {
        return {std::numeric_limits<double>::infinity()};
      }
      nats += weight * a * std::log(a / b);
    }
  }
  return {nats};
}

EntropyValue relative_entropy(const MarkovChain& p1, const MarkovChain& p2,
                              Support support,
                              std::span<const MarkovChain> candidates) {
  check_same_size(p1, p2);
  switch (support) {
    case Support::Full:
      return entropy_on_mask(p1, p2, nullptr);
    case Support::Profile: {
      Eigen::ArrayXX<bool> mask = p2.p.array() != 0.0;
      return entropy_on_mask(p1, p2, &mask);
    }
    case Support::Common: {
      if (candidates.empty()) {
        throw MissingCandidates(
            "Support::Common requires the candidate chain list");
      }
      bool contains_p2 = false;
      for (const auto& c : candidates) {
        if (c.size() == p2.size() && c.p == p2.p) {
          contains_p2 = true;
          break;
        }
      }
      if (!contains_p2) {
        throw MissingCandidates(
            "Support::Common candidate list must include the profile compared against");
      }
      Eigen::ArrayXX<bool> mask = common_support_mask(candidates);
      return entropy_on_mask(p1, p2, &mask);
    }
  }
  throw InvalidParameter("unknown support mode");
}

std::vector<std::pair<std::string, EntropyValue>> discount(
    const std::vector<std::pair<std::string, EntropyValue>>& raw,
    EntropyValue average) {
  std::vector<std::pair<std::string, EntropyValue>> out;
  out.reserve(raw.size());
  for (const auto& [author, value] : raw) {
    out.emplace_back(author, EntropyValue{value.nats - average.nats});
  }
  return out;
}

AttributionReport attribute(
    const std::string& text_id, const MarkovChain& text_chain,
    const std::vector<std::pair<std::string, MarkovChain>>& profiles,
    Support support, const MarkovChain* pooled) {
  if (profiles.size() < 2) {
    throw InvalidParameter("attribution needs at least two candidate profiles");
  }
  std::vector<MarkovChain> candidate_chains;
  candidate_chains.reserve(profiles.size());
  for (const auto& [name, chain] : profiles) {
    check_same_size(text_chain, chain);
    candidate_chains.push_back(chain);
  }

  // Profile support recomputes a per-candidate mask inside relative_entropy;
  // Common support shares one mask across the candidate set.
  Eigen::ArrayXX<bool> mask;
  const Eigen::ArrayXX<bool>* mask_ptr = nullptr;
  if (support == Support::Common) {
    mask = common_support_mask(candidate_chains);
    mask_ptr = &mask;
  }

  std::vector<std::pair<std::string, double>> scores;
  scores.reserve(profiles.size());
  for (const auto& [name, chain] : profiles) {
    EntropyValue h;
    if (support == Support::Profile) {
      h = relative_entropy(text_chain, chain, Support::Profile);
    } else {
      h = entropy_on_mask(text_chain, chain, mask_ptr);
    }
    scores.emplace_back(name, h.nats);
  }

  std::optional<double> average;
  if (pooled) {
    check_same_size(text_chain, *pooled);
    EntropyValue avg;
    if (support == Support::Profile) {
      avg = relative_entropy(text_chain, *pooled, Support::Profile);
    } else {
      avg = entropy_on_mask(text_chain, *pooled, mask_ptr);
    }
    average = avg.nats;
  }

  return make_report(text_id, ScoreUnit::Nats, std::move(scores), average);
}

}  // namespace stylo
