#pragma once

#include <optional>

#include "comtrack/types.hpp"

namespace comtrack {

/// Exponentially weighted running statistics of the snapshot stream:
///   S^t = A^t + beta * S^{t-1},   s^t = 1 + beta * s^{t-1}.
struct SufficientStats {
  Matrix s;          // n x n accumulated matrix
  double scale = 0;  // geometric-sum weight s^t
  int t = 0;         // number of snapshots absorbed
};

enum class ScheduleKind { Constant, SqrtGrowth };

/// Regularization weight over time: constant, or base * sqrt(t) with the
/// interval counted from 1.
struct Schedule {
  ScheduleKind kind = ScheduleKind::Constant;
  double base = 0.0;

  double at(int t) const;
};

struct Hyperparams {
  int c = 0;            // community count
  double beta = 0.9;    // forgetting factor in (0, 1]
  Schedule lambda;      // ridge weight on U and V
  Schedule mu;          // l1 weight on O
  double inner_tol = 1e-8;
  int max_inner = 200;
};

SufficientStats update_stats(const SufficientStats& prev, const Matrix& a,
                             double beta);

/// Objective at time t with the data norm term dropped (it is constant in the
/// unknowns): with B = U + O,
///   phi = scale * ||B V^T||_F^2 - 2 <S, B V^T>
///       + (lambda/2) (||U||_F^2 + ||V||_F^2) + mu * ||O||_1.
double objective(const SufficientStats& stats, const FactorState& x,
                 double lambda, double mu);

/// Smooth part of the objective (phi without the l1 term).
double objective_smooth(const SufficientStats& stats, const FactorState& x,
                        double lambda);

Matrix grad_u(const SufficientStats& stats, const FactorState& x,
              double lambda);
Matrix grad_v(const SufficientStats& stats, const FactorState& x,
              double lambda);
/// Gradient of the smooth part in O; equals grad_u at lambda = 0.
Matrix grad_o(const SufficientStats& stats, const FactorState& x);

/// Largest eigenvalue of a symmetric PSD matrix by power iteration with a
/// deterministic start, tolerance 1e-10, at most 1000 iterations.
double power_iteration_lmax(const Matrix& sym);

/// Step sizes 1 / L for the block Lipschitz constants:
///   L_u = 2 * scale * lmax(V^T V) + lambda
///   L_v = 2 * scale * lmax(B^T B) + lambda
///   L_o = 2 * scale * lmax(V^T V)
double step_u(const SufficientStats& stats, const FactorState& x,
              double lambda);
double step_v(const SufficientStats& stats, const FactorState& x,
              double lambda);
double lipschitz_o(const SufficientStats& stats, const FactorState& x);

}  // namespace comtrack
