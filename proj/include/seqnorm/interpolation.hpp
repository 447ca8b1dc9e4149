#pragma once

#include "seqnorm/duality.hpp"

namespace seqnorm {

struct NonPositiveTError : Error {
  using Error::Error;
};

/// A decomposition x = x0 + x1 (entrywise exact).
struct Splitting {
  Vector x0;
  Vector x1;
};

struct KFunctionalResult {
  NormResult value;
  Splitting split;
};

enum class KMethod {
  Auto,         // closed form -> clip search -> subgradient
  ClosedForm,   // (l1, l_inf) only
  ClipSearch,   // any couple whose second space is sup-normed
  Subgradient,  // general couples, multi-start projected subgradient
};

/// Peetre K-functional K(t, x; E0, E1) = inf { ||x0||_{E0} + t ||x1||_{E1} }
/// over splittings x = x0 + x1, with the minimizing split as witness.
KFunctionalResult k_functional(const SpacePtr& E0, const SpacePtr& E1, double t,
                               const Vector& x, KMethod method = KMethod::Auto,
                               const SolverConfig& config = {});

/// Ratio K(t, x; E0^p, E1^p) / K(t^{1/p}, |x|^{1/p}; E0, E1)^p for the power
/// equivalence of K-functionals, p in (0, 1].
double power_equivalence_ratio(const SpacePtr& E0, const SpacePtr& E1, double p,
                               double t, const Vector& x,
                               const SolverConfig& config = {});

}  // namespace seqnorm
