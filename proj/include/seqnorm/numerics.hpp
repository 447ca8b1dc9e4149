#pragma once

#include <cstdint>
#include <functional>

#include "seqnorm/vector.hpp"

namespace seqnorm {

struct NoBracketError : Error {
  using Error::Error;
};

struct SolverConfig {
  double tolerance = 1e-9;
  int max_iterations = 2000;
  int restarts = 64;
  std::uint64_t seed = 0;
};

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol);

/// Minimum of a unimodal f on [lo, hi] by golden-section search.
double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol);

/// Euclidean projection onto the non-increasing non-negative cone
/// (pool-adjacent-violators, then clip at zero; the clip is exact for
/// order-preserving bound constraints).
Vector project_monotone(const Vector& y);

/// Euclidean projection onto { y non-increasing, y >= 0, sum(y) = s }.
Vector project_monotone_simplex(const Vector& y, double s = 1.0);

struct MinimizeResult {
  Vector argmin;
  double value = 0.0;
  bool converged = true;
};

/// Projected subgradient descent with adaptive (double/halve) step control.
/// `project` maps any point back onto the feasible set; `g` must be convex
/// there. Deterministic given config.seed.
MinimizeResult minimize_convex(const std::function<double(const Vector&)>& g,
                               const std::function<Vector(const Vector&)>& project,
                               const Vector& start, const SolverConfig& config);

/// Central finite-difference gradient, for objectives without an analytic
/// subgradient.
Vector fd_gradient(const std::function<double(const Vector&)>& f,
                   const Vector& x, double h = 1e-7);

}  // namespace seqnorm
