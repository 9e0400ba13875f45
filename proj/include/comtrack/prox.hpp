#pragma once

#include "comtrack/model.hpp"
#include "comtrack/types.hpp"

namespace comtrack {

/// Componentwise max(x, 0).
Matrix project_nonneg(const Matrix& x);

/// Componentwise sign(x) * max(|x| - tau, 0).
Matrix soft_threshold(const Matrix& x, double tau);

/// Momentum coefficient recursion: (1 + sqrt(1 + 4 theta^2)) / 2.
double theta_next(double theta);

/// Accelerated-gradient state for the outlier block, carried across calls so a
/// tracker can resume momentum where the previous interval left off.
struct FistaCarry {
  Matrix w;       // extrapolated point
  double theta = 1.0;
  bool warm = false;
};

struct FistaResult {
  Matrix o;
  int iterations = 0;
};

/// Minimize scale*||(U+O)V^T||^2 - 2<S,(U+O)V^T> + mu*||O||_1 over O >= 0 by
/// proximal gradient with momentum. Each step thresholds then projects:
///   X = W - grad(W)/L,  O_next = max(soft_threshold(X, mu/L), 0).
/// Stops once both the iterate and the gradient point W have settled:
/// max(||O_next - O||, ||O_next - W||) <= tol * max(1, ||O_next||).
FistaResult fista_outlier_solve(const SufficientStats& stats,
                                const FactorState& x, double mu, double tol,
                                int max_inner, FistaCarry* carry = nullptr);

}  // namespace comtrack
