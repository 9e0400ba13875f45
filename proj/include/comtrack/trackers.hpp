#pragma once

#include <cstdint>
#include <vector>

#include "comtrack/model.hpp"
#include "comtrack/prox.hpp"
#include "comtrack/types.hpp"

namespace comtrack {

enum class InitKind { NmfOfFirstSnapshot, Given, Random };

struct InitPolicy {
  InitKind kind = InitKind::NmfOfFirstSnapshot;
  FactorState given;            // used when kind == Given
  std::uint64_t seed = 0;       // NMF or random init seed

  static InitPolicy nmf_first(std::uint64_t seed = 0);
  static InitPolicy from_state(FactorState s);
  static InitPolicy random(std::uint64_t seed);
};

enum class StepPolicy { Auto, Fixed };

/// Solver knobs shared by every tracker. Fixed steps are required by the
/// online tracker; the alternating trackers default to reciprocal-Lipschitz
/// steps recomputed each pass.
struct SolveOptions {
  StepPolicy step = StepPolicy::Auto;
  double alpha_u = 0.0;  // used when step == Fixed
  double alpha_v = 0.0;
  double tol = 1e-6;     // outer relative-change stop
  int max_outer = 30;
  double rho = 1.0;      // consensus penalty (decentralized only)
  double anomaly_eps = 1e-3;
};

struct IntervalDiag {
  int outer_iterations = 0;
  int inner_iterations = 0;  // FISTA iterations summed over the interval
  double objective = 0.0;    // at interval exit
  double update_norm = 0.0;  // last relative change seen
  double wall_seconds = 0.0;
};

struct TrackResult {
  std::vector<FactorState> states;        // one per interval
  std::vector<IntervalDiag> diagnostics;  // same length
  // Objective after each outer iteration, per interval; exact tracker only.
  std::vector<std::vector<double>> outer_objectives;
};

/// Full alternating minimization: per interval, cycle projected gradient steps
/// on U and V and a FISTA solve for O until the state stops moving.
TrackResult track_exact(const SnapshotSeries& series, const Hyperparams& hp,
                        const SolveOptions& opt, const InitPolicy& init);

/// One truncated pass per interval (max_outer repeats of one U step, one V
/// step, one FISTA momentum step), with the momentum state carried across
/// intervals.
TrackResult track_inexact(const SnapshotSeries& series, const Hyperparams& hp,
                          const SolveOptions& opt, const InitPolicy& init);

/// Online variant: same truncated pass but against the instantaneous snapshot
/// (stats = (A^t, 1)); ignores beta entirely.
TrackResult track_sgd(const SnapshotSeries& series, const Hyperparams& hp,
                      const SolveOptions& opt, const InitPolicy& init);

/// track_exact with tol 1e-10 and max_outer 5000; the comparison reference.
TrackResult batch_reference(const SnapshotSeries& series, const Hyperparams& hp,
                            const SolveOptions& opt, const InitPolicy& init);

/// Resolve an init policy against the first snapshot of a series.
FactorState make_initial_state(const SnapshotSeries& series, int c,
                               const InitPolicy& init);

}  // namespace comtrack
