#pragma once

#include <string>
#include <vector>

#include "stylo/experiments.hpp"
#include "stylo/report.hpp"

namespace stylo {

/// Report writers. Entropy scores appear in centinats with four decimal
/// places; baseline distances keep six significant digits. Infinite values
/// print as "inf". All writers are deterministic, so identical runs produce
/// byte-identical files. Column layouts are documented in docs/formats.md.

std::string format_score(double value, ScoreUnit unit);

std::string report_to_csv(const AttributionReport& report);
std::string report_to_json(const AttributionReport& report);

std::string loo_to_csv(const LeaveOneOutResult& result);
std::string loo_to_json(const LeaveOneOutResult& result);
std::string loo_summary_csv(const std::vector<LeaveOneOutResult>& results);

/// Accuracy table: one header row of method names, one row of accuracies
/// in percent with one decimal.
std::string accuracy_table_csv(const std::vector<std::string>& methods,
                               const std::vector<double>& accuracies);

std::string similarity_matrix_csv(const SimilarityMatrix& matrix);
std::string asymmetry_csv(const SimilarityMatrix& matrix);

std::string intraplay_acts_csv(const IntraplayReport& report);
std::string intraplay_scenes_csv(const IntraplayReport& report);
std::string intraplay_to_json(const IntraplayReport& report);

std::string train_curve_csv(const TrainSizeResult& result);

}  // namespace stylo
