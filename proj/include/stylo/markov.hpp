#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stylo/errors.hpp"
#include "stylo/wan.hpp"

namespace stylo {

/// Row-stochastic view of a network together with its limiting
/// distribution. uniform_rows lists the rows whose network weights were all
/// zero and were replaced by the uniform distribution.
struct MarkovChain {
  Eigen::MatrixXd p;
  Eigen::VectorXd pi;
  std::vector<Eigen::Index> uniform_rows;

  Eigen::Index size() const { return p.rows(); }
};

struct PowerIterationOptions {
  double damping = 1e-6;      // mix toward the uniform chain
  double tolerance = 1e-12;   // L1 change between successive iterates
  int max_iterations = 100000;
};

/// Divides each row of a nonnegative matrix by its sum; all-zero rows become
/// uniform. Row indices that received the uniform fallback are appended to
/// *uniform_rows when given.
template <class Derived>
Eigen::MatrixXd row_normalized(const Eigen::MatrixBase<Derived>& q,
                               std::vector<Eigen::Index>* uniform_rows = nullptr) {
  Eigen::MatrixXd p = q.template cast<double>();
  const Eigen::Index n = p.rows();
  if (n == 0 || p.cols() != n) {
    throw DimensionMismatch("row normalization needs a square nonempty matrix");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sum = p.row(i).sum();
    if (sum > 0.0) {
      p.row(i) /= sum;
    } else {
      p.row(i).setConstant(1.0 / static_cast<double>(n));
      if (uniform_rows) uniform_rows->push_back(i);
    }
  }
  return p;
}

/// Stationary distribution of the slightly damped chain
/// (1 - damping) * p + damping * uniform, found by power iteration from the
/// uniform vector. The damping forces ergodicity, so the fixed point is
/// unique; chains estimated from short texts are routinely reducible or
/// periodic without it.
template <class Derived>
Eigen::VectorXd limiting_distribution(const Eigen::MatrixBase<Derived>& p,
                                      const PowerIterationOptions& opts = {}) {
  const Eigen::Index n = p.rows();
  if (n == 0 || p.cols() != n) {
    throw DimensionMismatch("limiting distribution needs a square nonempty matrix");
  }
  const Eigen::MatrixXd pt = p.transpose().template cast<double>();
  const double uniform_mass = opts.damping / static_cast<double>(n);

  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd next(n);
  for (int it = 0; it < opts.max_iterations; ++it) {
    next.noalias() = (1.0 - opts.damping) * (pt * pi);
    next.array() += uniform_mass;  // sum(pi) == 1 throughout
    const double change = (next - pi).cwiseAbs().sum();
    pi.swap(next);
    if (change < opts.tolerance) return pi;
  }
  throw NonConvergence("limiting distribution did not converge after " +
                       std::to_string(opts.max_iterations) + " iterations");
}

/// L1 residual of pi as a stationary distribution of p.
template <class DerivedP, class DerivedPi>
double stationarity_residual(const Eigen::MatrixBase<DerivedP>& p,
                             const Eigen::MatrixBase<DerivedPi>& pi) {
  Eigen::VectorXd lhs = p.transpose().template cast<double>() *
                        pi.template cast<double>();
  return (lhs - pi.template cast<double>()).cwiseAbs().sum();
}

/// Normalizes a network into a Markov chain (rows to probabilities, zero
/// rows to uniform) and computes its limiting distribution.
MarkovChain normalize(const Wan& wan);

/// Wraps an already row-stochastic matrix, computing its limiting
/// distribution. Mainly for tests and direct chain comparisons.
MarkovChain chain_from_stochastic(Eigen::MatrixXd p);

}  // namespace stylo
