#pragma once

#include <cstdint>
#include <vector>

#include "comtrack/types.hpp"

namespace comtrack {

/// Stochastic block model: directed edge i->j present independently with
/// probability affinity(block(i), block(j)).
struct SbmSpec {
  std::vector<int> block_sizes;
  Matrix affinity;     // entries in [0, 1]
  std::uint64_t seed = 0;
};

/// Rows to inject as anomalies into the initial snapshot's factor model.
struct AnomalySpec {
  std::vector<int> rows;
  double magnitude = 0.0;  // <= 0 means auto: largest entry of U^0
  std::uint64_t seed = 0;
};

struct NmfResult {
  Matrix w;  // n x c
  Matrix h;  // c x m
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

AdjacencySnapshot generate_sbm(const SbmSpec& spec);

/// Multiplicative-update NMF minimizing ||A - WH||_F, nonnegative throughout.
/// Stops when the relative residual change falls below tol.
NmfResult nmf_factorize(const Matrix& a, int c, std::uint64_t seed,
                        int max_iter = 500, double tol = 1e-6);

struct InjectResult {
  AdjacencySnapshot snapshot;  // (U^0 + O^0) (V^0)^T
  Matrix ground_truth_o;       // nonzero exactly on spec.rows
  Matrix u0;
  Matrix v0;
};

/// Factor a_init with NMF, add row-sparse outliers with values uniform in
/// (0, magnitude], and reconstruct the modified snapshot.
InjectResult inject_anomalies(const AdjacencySnapshot& a_init, int c,
                              const AnomalySpec& spec);

/// Scale every edge by one of four piecewise-constant on/off profiles:
///   f1(t) = 1
///   f2(t) = [t >= 50]
///   f3(t) = [t < 50]
///   f4(t) = [t < 25] + [50 <= t < 75]
/// with the profile drawn uniformly per node pair, deterministic by seed.
SnapshotSeries evolve_series(const AdjacencySnapshot& a0, int t_len,
                             std::uint64_t seed);

/// Profile value f_kappa(t) for kappa in {1,2,3,4}.
double edge_profile(int kappa, int t);

}  // namespace comtrack
