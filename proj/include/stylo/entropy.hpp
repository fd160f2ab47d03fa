#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylo/markov.hpp"
#include "stylo/report.hpp"

namespace stylo {

/// Relative entropy between Markov chains, in nats. One centinat is a
/// hundredth of a nat; reports use centinats.
struct EntropyValue {
  double nats = 0.0;
  double centinats() const { return 100.0 * nats; }
};

/// Which transition pairs enter the entropy sum.
///  - Full:    every pair; infinite when the first chain puts mass on a
///             transition the second chain never makes.
///  - Profile: only pairs with a nonzero transition in the second chain.
///  - Common:  only pairs nonzero in every candidate chain, removing the
///             bias toward profiles built from fewer words.
enum class Support { Full, Profile, Common };

/// Transitions nonzero in every candidate chain.
Eigen::ArrayXX<bool> common_support_mask(std::span<const MarkovChain> candidates);

/// H(p1, p2) = sum over included (i, j) of pi(i) p1(i,j) log(p1(i,j)/p2(i,j)),
/// natural log, 0 log 0 = 0, weighted by p1's limiting distribution.
/// Support::Common requires the candidate chains, which must include p2.
EntropyValue relative_entropy(const MarkovChain& p1, const MarkovChain& p2,
                              Support support,
                              std::span<const MarkovChain> candidates = {});

/// Entropy restricted to an explicit transition mask; the workhorse behind
/// the support modes.
EntropyValue entropy_on_mask(const MarkovChain& p1, const MarkovChain& p2,
                             const Eigen::ArrayXX<bool>* mask);

/// Subtracts the average-playwright entropy from each candidate value.
/// Negative results are meaningful: the text sits closer to that author
/// than to the pooled profile.
std::vector<std::pair<std::string, EntropyValue>> discount(
    const std::vector<std::pair<std::string, EntropyValue>>& raw,
    EntropyValue average);

/// Attributes a text to the candidate profile with the smallest relative
/// entropy from the text's chain. When pooled is given, its entropy from
/// the text (same support, same candidate set) fills the discounted column.
AttributionReport attribute(
    const std::string& text_id, const MarkovChain& text_chain,
    const std::vector<std::pair<std::string, MarkovChain>>& profiles,
    Support support, const MarkovChain* pooled = nullptr);

}  // namespace stylo
