#include "stylo/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "stylo/errors.hpp"

namespace stylo {

namespace {

Eigen::MatrixXd relative_rows(std::span<const FrequencyVector> vectors) {
  if (vectors.empty()) throw InsufficientTraining("no training vectors");
  const Eigen::Index n = vectors.front().lexicon_size();
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(vectors.size()), n);
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    const auto& fv = vectors[static_cast<std::size_t>(r)];
    if (fv.lexicon_size() != n) {
      throw DimensionMismatch("frequency vectors have different lengths");
    }
    rows.row(r) = fv.relative.transpose();
  }
  return rows;
}

}  // namespace

Eigen::VectorXd ZScoreModel::transform(const Eigen::VectorXd& relative) const {
  if (relative.size() != mean.size()) {
    throw DimensionMismatch("z-transform: vector length does not match model");
  }
  Eigen::VectorXd z(relative.size());
  for (Eigen::Index i = 0; i < relative.size(); ++i) {
    z[i] = stddev[i] > 0.0 ? (relative[i] - mean[i]) / stddev[i] : 0.0;
  }
  return z;
}

Eigen::MatrixXd ZScoreModel::transform_rows(
    const Eigen::MatrixXd& relative_rows) const {
  Eigen::MatrixXd z(relative_rows.rows(), relative_rows.cols());
  for (Eigen::Index r = 0; r < relative_rows.rows(); ++r) {
    z.row(r) = transform(relative_rows.row(r).transpose()).transpose();
  }
  return z;
}

ZScoreModel zscore_fit(std::span<const FrequencyVector> training) {
  if (training.size() < 2) {
    throw InsufficientTraining("z-score fit needs at least two texts");
  }
  Eigen::MatrixXd rows = relative_rows(training);
  const auto count = static_cast<double>(rows.rows());

  ZScoreModel model;
  model.mean = rows.colwise().mean();
  model.stddev.resize(rows.cols());
  for (Eigen::Index i = 0; i < rows.cols(); ++i) {
    const double var =
        (rows.col(i).array() - model.mean[i]).square().sum() / count;
    double sd = std::sqrt(var);
    // A column of identical values should not survive as a spurious tiny
    // deviation from rounding in the mean.
    if (sd < 1e-14 * (1.0 + std::abs(model.mean[i]))) {
      sd = 0.0;
      model.dropped.push_back(i);
    }
    model.stddev[i] = sd;
  }
  return model;
}

double z_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                  DeltaMetric metric) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("z-distance: vector lengths differ");
  }
  switch (metric) {
    case DeltaMetric::Manhattan:
      return (a - b).lpNorm<1>();
    case DeltaMetric::Euclidean:
      return (a - b).squaredNorm();
    case DeltaMetric::Cosine: {
      const double na = a.norm();
      const double nb = b.norm();
      if (na == 0.0 && nb == 0.0) return 0.0;
      if (na == 0.0 || nb == 0.0) return 1.0;
      return 1.0 - a.dot(b) / (na * nb);
    }
  }
  throw InvalidParameter("unknown delta metric");
}

std::vector<std::pair<std::string, double>> delta_scores(
    const Eigen::VectorXd& target_z,
    const std::vector<std::pair<std::string, Eigen::MatrixXd>>& known_z,
    DeltaMetric metric) {
  std::vector<std::pair<std::string, double>> scores;
  scores.reserve(known_z.size());
  for (const auto& [author, z_rows] : known_z) {
    if (z_rows.rows() == 0) {
      throw EmptyAuthorCanon("author has no texts: " + author);
    }
    double total = 0.0;
    for (Eigen::Index r = 0; r < z_rows.rows(); ++r) {
      total += z_distance(target_z, z_rows.row(r).transpose(), metric);
    }
    scores.emplace_back(author, total / static_cast<double>(z_rows.rows()));
  }
  return scores;
}

AttributionReport delta_attribute(
    const std::string& text_id, const FrequencyVector& target,
    const std::vector<std::pair<std::string, std::vector<FrequencyVector>>>& known,
    DeltaMetric metric, const ZScoreModel& model) {
  if (known.empty()) throw EmptyAuthorCanon("no candidate authors");
  Eigen::VectorXd target_z = model.transform(target.relative);
  std::vector<std::pair<std::string, Eigen::MatrixXd>> known_z;
  known_z.reserve(known.size());
  for (const auto& [author, plays] : known) {
    if (plays.empty()) throw EmptyAuthorCanon("author has no texts: " + author);
    known_z.emplace_back(author,
                         model.transform_rows(relative_rows(plays)));
  }
  return make_report(text_id, ScoreUnit::Distance,
                     delta_scores(target_z, known_z, metric));
}

Eigen::VectorXd PcaModel::score(const Eigen::VectorXd& relative) const {
  if (relative.size() != mean.size()) {
    throw DimensionMismatch("PCA score: vector length does not match model");
  }
  return components * (relative - mean);
}

PcaModel pca_fit(std::span<const FrequencyVector> training, int k) {
  if (k < 1) throw InvalidParameter("PCA needs k >= 1");
  if (training.size() < 2) {
    throw InsufficientTraining("PCA fit needs at least two texts");
  }
  Eigen::MatrixXd rows = relative_rows(training);
  const Eigen::Index n = rows.cols();
  const Eigen::Index count = rows.rows();
  if (k > std::min<Eigen::Index>(n, count - 1)) {
    throw RankDeficient("k exceeds the dimension the data can support");
  }

  PcaModel model;
  model.mean = rows.colwise().mean();
  Eigen::MatrixXd centered = rows.rowwise() - model.mean.transpose();
  Eigen::MatrixXd covariance =
      centered.transpose() * centered / static_cast<double>(count);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
  if (solver.info() != Eigen::Success) {
    throw RankDeficient("eigendecomposition of the covariance failed");
  }
  // Eigenvalues come out ascending.
  Eigen::VectorXd eigenvalues = solver.eigenvalues().cwiseMax(0.0);
  const double largest = eigenvalues[n - 1];
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eigenvalues[i] > largest * 1e-10) ++rank;
  }
  if (k > rank) {
    throw RankDeficient("k exceeds the numerical rank of the training data");
  }

  model.components.resize(k, n);
  model.explained_variance.resize(k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index source = n - 1 - c;  // descending variance
    Eigen::VectorXd component = solver.eigenvectors().col(source);
    Eigen::Index peak = 0;
    component.cwiseAbs().maxCoeff(&peak);
    if (component[peak] < 0.0) component = -component;
    model.components.row(c) = component.transpose();
    model.explained_variance[c] = eigenvalues[source];
  }
  model.residual_variance =
      eigenvalues.sum() - model.explained_variance.sum();
  return model;
}

AttributionReport pca_attribute(
    const std::string& text_id, const FrequencyVector& target,
    const std::vector<std::pair<std::string, std::vector<FrequencyVector>>>& known,
    const PcaModel& model) {
  if (known.empty()) throw EmptyAuthorCanon("no candidate authors");
  Eigen::VectorXd target_score = model.score(target.relative);
  std::vector<std::pair<std::string, double>> scores;
  scores.reserve(known.size());
  for (const auto& [author, plays] : known) {
    if (plays.empty()) throw EmptyAuthorCanon("author has no texts: " + author);
    double total = 0.0;
    for (const auto& play : plays) {
      total += (model.score(play.relative) - target_score).norm();
    }
    scores.emplace_back(author, total / static_cast<double>(plays.size()));
  }
  return make_report(text_id, ScoreUnit::Distance, std::move(scores));
}

}  // namespace stylo
