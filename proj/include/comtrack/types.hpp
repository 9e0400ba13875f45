#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace comtrack {

using Matrix = Eigen::MatrixXd;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One interval's nonnegative weighted directed adjacency matrix.
struct AdjacencySnapshot {
  int n = 0;
  Matrix entries;       // entries(i, j) = weight of directed edge i -> j
  int interval_index = 0;
};

/// Ordered snapshots with consecutive interval indices 0..T-1.
struct SnapshotSeries {
  std::vector<AdjacencySnapshot> snapshots;
  std::map<std::string, std::string> metadata;

  int length() const { return static_cast<int>(snapshots.size()); }
  int nodes() const { return snapshots.empty() ? 0 : snapshots.front().n; }
};

/// The factor triple (U, V, O) at one interval; all entries nonnegative.
struct FactorState {
  Matrix u;  // N x C community affiliations
  Matrix v;  // N x C basis
  Matrix o;  // N x C outlier affiliations, row-sparse in practice

  int n() const { return static_cast<int>(u.rows()); }
  int c() const { return static_cast<int>(u.cols()); }
};

/// Deterministic uniform RNG shared by every stochastic component.
/// (Fixed algorithm so identical seeds give identical artifacts anywhere.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // uniform double in [0, 1)
  double uniform() {
    return static_cast<double>(state_() >> 11) * 0x1.0p-53;
  }
  // uniform integer in [lo, hi] inclusive
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 state_;
};

}  // namespace comtrack
