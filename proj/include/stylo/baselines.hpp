#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylo/frequency.hpp"
#include "stylo/report.hpp"

namespace stylo {

enum class DeltaMetric { Manhattan, Euclidean, Cosine };

/// Per-word standardization statistics over a training set of relative
/// frequencies. Words whose frequency never varies across the training
/// texts are recorded in `dropped`; their z-scores are defined as 0.
struct ZScoreModel {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;  // population standard deviation, divisor N
  std::vector<Eigen::Index> dropped;

  Eigen::Index size() const { return mean.size(); }
  Eigen::VectorXd transform(const Eigen::VectorXd& relative) const;
  Eigen::MatrixXd transform_rows(const Eigen::MatrixXd& relative_rows) const;
};

ZScoreModel zscore_fit(std::span<const FrequencyVector> training);

/// Distance between two z-score vectors under a Delta metric. Euclidean is
/// the squared difference sum, cosine is 1 - cos(angle).
double z_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                  DeltaMetric metric);

/// Mean distance from a target z-vector to each author's play z-vectors
/// (rows). Exposed so distance behavior can be probed on raw z-matrices.
std::vector<std::pair<std::string, double>> delta_scores(
    const Eigen::VectorXd& target_z,
    const std::vector<std::pair<std::string, Eigen::MatrixXd>>& known_z,
    DeltaMetric metric);

/// Burrows Delta: standardize relative frequencies with `model`, attribute
/// to the author with the smallest mean distance to the target.
AttributionReport delta_attribute(
    const std::string& text_id, const FrequencyVector& target,
    const std::vector<std::pair<std::string, std::vector<FrequencyVector>>>& known,
    DeltaMetric metric, const ZScoreModel& model);

/// Principal components of mean-centered relative frequencies. Component
/// rows are orthonormal; each row's largest-magnitude entry is positive.
struct PcaModel {
  Eigen::VectorXd mean;
  Eigen::MatrixXd components;          // k x n, orthonormal rows
  Eigen::VectorXd explained_variance;  // k values, non-increasing
  double residual_variance = 0.0;      // total variance beyond the k kept

  Eigen::Index n_components() const { return components.rows(); }
  Eigen::VectorXd score(const Eigen::VectorXd& relative) const;
};

PcaModel pca_fit(std::span<const FrequencyVector> training, int k);

/// Attribution by smallest mean Euclidean distance in PC-score space.
AttributionReport pca_attribute(
    const std::string& text_id, const FrequencyVector& target,
    const std::vector<std::pair<std::string, std::vector<FrequencyVector>>>& known,
    const PcaModel& model);

}  // namespace stylo
