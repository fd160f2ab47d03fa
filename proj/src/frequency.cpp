#include "stylo/frequency.hpp"

#include "stylo/errors.hpp"

namespace stylo {

FrequencyVector frequency_vector(std::span<const TokenUnit> units,
                                 const FunctionWordLexicon& lexicon,
                                 std::size_t n) {
  if (n == 0) throw InvalidParameter("frequency vector needs n >= 1");
  if (n > lexicon.size()) {
    throw InvalidParameter("frequency vector size exceeds lexicon size");
  }
  FrequencyVector fv;
  fv.counts = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(n));
  for (const auto& unit : units) {
    for (const auto& token : unit) {
      ++fv.total_tokens;
      if (auto k = lexicon.index_of(token); k && *k < n) {
        fv.counts[static_cast<Eigen::Index>(*k)] += 1;
      }
    }
  }
  if (fv.total_tokens == 0) {
    throw InvalidParameter("frequency vector over empty text");
  }
  fv.relative =
      fv.counts.cast<double>() / static_cast<double>(fv.total_tokens);
  return fv;
}

}  // namespace stylo
