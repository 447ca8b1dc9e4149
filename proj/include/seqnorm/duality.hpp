#pragma once

#include <optional>

#include "seqnorm/norm.hpp"
#include "seqnorm/numerics.hpp"

namespace seqnorm {

struct BoundPair {
  double lower = 0.0;
  double upper = kInf;
  std::optional<Vector> witness;  // vector achieving (or certifying) lower

  double gap() const {
    if (!std::isfinite(upper) || lower == 0.0) return kInf;
    return upper / lower - 1.0;
  }
};

/// Koethe dual norm ||x||_{(E_n)^x} = sup { sum |x_i y_i| : ||y||_E <= 1 }.
/// Closed form where known (l_p pairs, d(w,p) via the level function);
/// otherwise ratio ascent over the monotone cone.
NormResult kothe_dual_norm(const SpacePtr& E, const Vector& x,
                           const SolverConfig& config = {});

/// ||x||_{E^r} = || |x|^{1/r} ||_E^r. Requires the max(1,r)-convexity
/// attestation of E.
NormResult power_norm(const SpacePtr& E, double r, const Vector& x);

/// Bounds on the multiplier norm ||m||_{M(E_n, F_n)} = sup { ||m y||_F :
/// ||y||_E <= 1 }. Lower from canonical witnesses plus random-restart
/// projected ascent; upper from closed forms where known.
BoundPair multiplier_norm(const SpacePtr& E, const SpacePtr& F, const Vector& m,
                          const SolverConfig& config = {});

/// Right-hand side of the isometric identity M(l2, F) = (((F^x)^2)^x)^{1/2}
/// for 2-concave F, evaluated by composing kothe_dual_norm and power_norm.
NormResult m2e_norm(const SpacePtr& F, const Vector& x,
                    const SolverConfig& config = {});

/// Exact closed form for ||x||_{M(l2,E)} when the catalog provides one
/// (l_p -> l_r, Lorentz pq -> shifted Lorentz, d(w,p) -> weighted formula).
std::optional<double> m2_multiplier_exact(const SpacePtr& E, const Vector& x);

/// Bounds on ||id : E_n -> F_n||. Exact where the catalog knows the value;
/// for E = l2 and 2-concave F the Szarek--Tomczak sandwich
/// lambda_F(n)/sqrt(n) <= value <= sqrt(2) M_(2)(F) lambda_F(n)/sqrt(n)
/// is asserted when M_(2)(F) is attested.
BoundPair identity_norm(const SpacePtr& E, const SpacePtr& F, std::size_t n,
                        const SolverConfig& config = {});

}  // namespace seqnorm
