#include "stylo/wan.hpp"

#include <vector>

#include "stylo/errors.hpp"

namespace stylo {

void WanParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidParameter("alpha must lie in (0, 1)");
  }
  if (window < 1) throw InvalidParameter("window must be >= 1");
  if (n_words == 0) throw InvalidParameter("n_words must be >= 1");
  if (n_words > lexicon.size()) {
    throw InvalidParameter("n_words exceeds lexicon size");
  }
}

bool WanParams::compatible_with(const WanParams& other) const {
  return alpha == other.alpha && window == other.window &&
         n_words == other.n_words && lexicon == other.lexicon;
}

Wan build_wan(std::span<const TokenUnit> units, const WanParams& params) {
  params.validate();
  const auto n = static_cast<Eigen::Index>(params.n_words);

  std::vector<double> decay(static_cast<std::size_t>(params.window));
  decay[0] = 1.0;
  for (std::size_t d = 1; d < decay.size(); ++d) {
    decay[d] = decay[d - 1] * params.alpha;
  }

  Wan wan;
  wan.params = params;
  wan.q = Eigen::MatrixXd::Zero(n, n);

  std::vector<Eigen::Index> ids;
  for (const auto& unit : units) {
    wan.token_count += static_cast<std::int64_t>(unit.size());
    ids.clear();
    ids.reserve(unit.size());
    for (const auto& token : unit) {
      auto k = params.lexicon.index_of(token);
      ids.push_back(k && *k < params.n_words
                        ? static_cast<Eigen::Index>(*k)
                        : Eigen::Index{-1});
    }
    const std::size_t len = ids.size();
    for (std::size_t e = 0; e < len; ++e) {
      const Eigen::Index i = ids[e];
      if (i < 0) continue;
      const std::size_t reach =
          std::min<std::size_t>(static_cast<std::size_t>(params.window),
                                len - 1 - e);
      for (std::size_t d = 1; d <= reach; ++d) {
        const Eigen::Index j = ids[e + d];
        if (j >= 0) wan.q(i, j) += decay[d - 1];
      }
    }
  }
  return wan;
}

Wan aggregate(std::span<const Wan> wans) {
  if (wans.empty()) throw InvalidParameter("aggregate needs at least one network");
  Wan out = wans.front();
  for (std::size_t k = 1; k < wans.size(); ++k) {
    if (!wans[k].params.compatible_with(out.params)) {
      throw MismatchedParams("aggregate: networks built with different parameters");
    }
    out.q += wans[k].q;
    out.token_count += wans[k].token_count;
  }
  return out;
}

Wan restrict_words(const Wan& wan, std::size_t n) {
  if (n == 0) throw InvalidParameter("restriction needs n >= 1");
  if (n > wan.params.n_words) {
    throw InvalidParameter("restriction size exceeds network size");
  }
  Wan out;
  out.params = wan.params;
  out.params.n_words = n;
  const auto nn = static_cast<Eigen::Index>(n);
  out.q = wan.q.topLeftCorner(nn, nn);
  out.token_count = wan.token_count;
  return out;
}

}  // namespace stylo
