#include "stylo/markov.hpp"

namespace stylo {

MarkovChain normalize(const Wan& wan) {
  MarkovChain chain;
  chain.p = row_normalized(wan.q, &chain.uniform_rows);
  chain.pi = limiting_distribution(chain.p);
  return chain;
}

MarkovChain chain_from_stochastic(Eigen::MatrixXd p) {
  MarkovChain chain;
  chain.p = std::move(p);
  chain.pi = limiting_distribution(chain.p);
  return chain;
}

}  // namespace stylo
