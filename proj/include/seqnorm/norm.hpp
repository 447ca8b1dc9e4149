#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqnorm/space.hpp"
#include "seqnorm/vector.hpp"

namespace seqnorm {

enum class Certification { Exact, Numerical };

struct NormResult {
  double value = 0.0;
  Certification certification = Certification::Exact;
  double tolerance = 0.0;  // relative, meaningful when Numerical

  static NormResult exact(double v) { return {v, Certification::Exact, 0.0}; }
  static NormResult numerical(double v, double tol) {
    return {v, Certification::Numerical, tol};
  }
};

/// ||x||_{E_n}. Exact for the base catalog; Orlicz resolves to bisection on
/// the Luxemburg gauge unless the power family collapses to l_p.
NormResult norm(const SpacePtr& E, const Vector& x);

/// Fundamental function lambda_E(n) = ||sum_{i<=n} e_i||_E.
NormResult fundamental(const SpacePtr& E, std::size_t n);

/// A subgradient of x -> norm(E, x). Analytic per catalog space where
/// available, central finite differences otherwise.
Vector norm_subgradient(const SpacePtr& E, const Vector& x);

struct OrliczValidation {
  bool convex = true;
  bool sqrt_concave = true;  // t -> phi(sqrt t) passes the midpoint test
  bool normalized = true;    // phi(0) = 0 and phi(1) = 1
  bool grid_based = true;    // advisory: midpoint tests on the grid only
};

/// Midpoint convexity/concavity report for phi on the given grid.
OrliczValidation validate_orlicz(const OrliczFunction& phi,
                                 const std::vector<double>& grid);

/// Exact value of sup { ||y||_E : ||y||_2 <= 1 } at dimension n, when the
/// catalog has a closed form (l_p, Lorentz, d(w,p), Orlicz power).
std::optional<double> id_l2_to_space_exact(const SpacePtr& E, std::size_t n);

}  // namespace seqnorm
