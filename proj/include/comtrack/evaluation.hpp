#pragma once

#include <set>
#include <string>
#include <vector>

#include "comtrack/trackers.hpp"
#include "comtrack/types.hpp"

namespace comtrack {

/// (||U-Ur|| + ||V-Vr|| + ||O-Or||) / (||Ur|| + ||Vr|| + ||Or||), Frobenius.
/// Meaningful only when est and ref share the same initialization.
double relative_error(const FactorState& est, const FactorState& ref);

/// Per-row argmax of the affiliation matrix; ties and all-zero rows resolve
/// to the lowest community index.
std::vector<int> hard_assign(const Matrix& u);

/// Nodes whose outlier row exceeds eps in any component.
std::set<int> flag_anomalies(const Matrix& o, double eps = 1e-3);

/// Rows rescaled to sum to one; all-zero rows stay zero.
Matrix overlap_profile(const Matrix& u);

struct TrackComparison {
  std::vector<std::string> names;
  // errors[t][k] = relative error of track k against the reference at t.
  std::vector<std::vector<double>> errors;
};

TrackComparison compare_tracks(const std::vector<std::string>& names,
                               const std::vector<const TrackResult*>& tracks,
                               const TrackResult& ref);

struct PrecisionRecall {
  double precision = 1.0;  // empty flag set scores 1 by convention
  double recall = 1.0;     // empty truth set scores 1 by convention
};

PrecisionRecall anomaly_precision_recall(const std::set<int>& flagged,
                                         const std::set<int>& truth);

void write_relerr_csv(const TrackComparison& cmp, const std::string& path);
void write_labels_csv(const std::vector<int>& labels, const std::string& path);
void write_anomalies_csv(const std::vector<std::set<int>>& sets,
                         const std::string& path);
void write_overlap_csv(const Matrix& profile, const std::string& path);
void write_matrix_csv(const Matrix& m, const std::string& path);
Matrix load_matrix_csv(const std::string& path);

}  // namespace comtrack
