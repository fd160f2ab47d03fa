#pragma once

// Test-side reference implementations, deliberately written along different
// routes than the library: direct enumeration, dense eigensolvers, plain
// summation loops. They exist so library results can be checked against an
// independent path.

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stylo/lexicon.hpp"
#include "stylo/markov.hpp"

namespace oracles {

// Direct (e, d) enumeration of the discounted co-occurrence sum over string
// units: for every position pair at distance d <= window inside a unit, add
// alpha^(d-1) when both ends are lexicon words. Lexicon lookup is a linear
// scan and the decay is recomputed with std::pow each time.
inline Eigen::MatrixXd wan_enumeration(
    const std::vector<std::vector<std::string>>& units,
    const std::vector<std::string>& words, double alpha, int window) {
  const auto n = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  auto find = [&](const std::string& token) -> Eigen::Index {
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (words[k] == token) return static_cast<Eigen::Index>(k);
    }
    return -1;
  };
  for (const auto& unit : units) {
    for (std::size_t e = 0; e < unit.size(); ++e) {
      const Eigen::Index i = find(unit[e]);
      if (i < 0) continue;
      for (int d = 1; d <= window; ++d) {
        const std::size_t target = e + static_cast<std::size_t>(d);
        if (target >= unit.size()) break;
        const Eigen::Index j = find(unit[target]);
        if (j < 0) continue;
        q(i, j) += std::pow(alpha, d - 1);
      }
    }
  }
  return q;
}

// Stationary distribution through a dense eigensolver: the eigenvector of
// the transposed matrix whose eigenvalue is closest to 1, scaled to sum 1.
inline Eigen::VectorXd stationary_eigensolver(const Eigen::MatrixXd& p) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(p.transpose());
  Eigen::Index best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < p.rows(); ++k) {
    const double gap = std::abs(solver.eigenvalues()[k] - std::complex<double>(1.0, 0.0));
    if (gap < best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  Eigen::VectorXd pi = solver.eigenvectors().col(best).real();
  pi /= pi.sum();
  return pi;
}

// Damped matrix matching the library's limiting-distribution definition.
inline Eigen::MatrixXd damped(const Eigen::MatrixXd& p, double damping = 1e-6) {
  const auto n = p.rows();
  return (1.0 - damping) * p +
         damping * Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
}

// Term-by-term relative entropy with an optional inclusion predicate.
template <class Include>
double entropy_sum(const Eigen::MatrixXd& p1, const Eigen::VectorXd& pi1,
                   const Eigen::MatrixXd& p2, Include include) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < p1.rows(); ++i) {
    for (Eigen::Index j = 0; j < p1.cols(); ++j) {
      if (!include(i, j)) continue;
      if (p1(i, j) == 0.0) continue;
      if (p2(i, j) == 0.0) return std::numeric_limits<double>::infinity();
      total += pi1[i] * p1(i, j) * std::log(p1(i, j) / p2(i, j));
    }
  }
  return total;
}

// Independent token counter for frequency vectors.
inline std::map<std::string, int> count_tokens(
    const std::vector<std::vector<std::string>>& units) {
  std::map<std::string, int> counts;
  for (const auto& unit : units) {
    for (const auto& token : unit) counts[token] += 1;
  }
  return counts;
}

// PCA scores through a thin SVD of the centered data matrix.
inline Eigen::MatrixXd pca_scores_svd(const Eigen::MatrixXd& rows, int k) {
  Eigen::RowVectorXd mean = rows.colwise().mean();
  Eigen::MatrixXd centered = rows.rowwise() - mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return centered * svd.matrixV().leftCols(k);
}

// ---- randomized inputs ----

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform01(rng) * (hi - lo + 1)) % (hi - lo + 1);
}

// Random token units over a lexicon of `n_words` words plus filler noise.
inline std::vector<std::vector<std::string>> random_units(
    std::mt19937_64& rng, const std::vector<std::string>& words, int unit_count,
    int max_unit_length, double filler_rate = 0.3) {
  std::vector<std::vector<std::string>> units(
      static_cast<std::size_t>(unit_count));
  for (auto& unit : units) {
    const int length = uniform_int(rng, 0, max_unit_length);
    for (int t = 0; t < length; ++t) {
      if (uniform01(rng) < filler_rate) {
        unit.push_back("zz" + std::to_string(uniform_int(rng, 0, 4)));
      } else {
        unit.push_back(
            words[static_cast<std::size_t>(uniform_int(
                rng, 0, static_cast<int>(words.size()) - 1))]);
      }
    }
  }
  return units;
}

inline std::vector<std::string> numbered_words(int n) {
  std::vector<std::string> words;
  for (int i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
  return words;
}

// Random row-stochastic matrix with strictly positive entries.
inline Eigen::MatrixXd random_stochastic(std::mt19937_64& rng, int n) {
  Eigen::MatrixXd p(n, n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      p(i, j) = uniform01(rng) + 1e-3;
      sum += p(i, j);
    }
    p.row(i) /= sum;
  }
  return p;
}

// Random nonnegative network matrix with zero entries and zero rows mixed in.
inline Eigen::MatrixXd random_network(std::mt19937_64& rng, int n,
                                      double zero_rate = 0.3,
                                      double zero_row_rate = 0.2) {
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {
    if (uniform01(rng) < zero_row_rate) {
      q.row(i).setZero();
      continue;
    }
    for (int j = 0; j < n; ++j) {
      q(i, j) = uniform01(rng) < zero_rate ? 0.0 : uniform01(rng) * 10.0;
    }
  }
  return q;
}

inline stylo::MarkovChain random_chain(std::mt19937_64& rng, int n) {
  return stylo::chain_from_stochastic(random_stochastic(rng, n));
}

}  // namespace oracles
