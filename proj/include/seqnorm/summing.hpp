#pragma once

#include <vector>

#include "seqnorm/duality.hpp"

namespace seqnorm {

struct MissingAttestationError : Error {
  using Error::Error;
};

/// A dense matrix acting between two described sequence spaces; rows index
/// the codomain, columns the domain.
struct FiniteOperator {
  std::vector<std::vector<double>> matrix;
  SpacePtr domain;
  SpacePtr codomain;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
  Vector apply(const Vector& x) const;
  static FiniteOperator identity(std::size_t n, SpacePtr domain, SpacePtr codomain);
  static FiniteOperator diagonal(const Vector& d, SpacePtr domain, SpacePtr codomain);
};

using VectorFamily = std::vector<Vector>;

/// Weak p-norm sup_{x' in B_{X^x}} (sum |<x', x_i>|^p)^{1/p} of a family.
/// Exact for p = 2 on l2 (largest singular value) and for p = 1 by sign
/// enumeration up to 20 members; estimated by projected ascent otherwise.
NormResult weak_p_norm(const VectorFamily& family, double p, const SpacePtr& X,
                       const SolverConfig& config = {});

/// Definition-level lower bound for pi_{E,p}(T): the best witness ratio
/// ||(||T x_i||)||_E / (c_p^E * weak_p_norm(family)) over the given families.
BoundPair summing_lower(const FiniteOperator& T, const SpacePtr& E, double p,
                        const std::vector<VectorFamily>& families,
                        const SolverConfig& config = {});

/// The quantitative upper bound sqrt(2) * c * M_(2)(E) for
/// pi_{M(l2,E),2}(id : E_n -> l2^n); requires the recorded 2-concavity
/// constant. c is 1 for spaces whose M(l2,E) has an exact catalog identity.
double summing_upper_main(const SpacePtr& E);

/// Sampled lower bound (and attested upper where known) for the 2-concavity
/// constant M_(2)(E_n).
BoundPair concavity_estimate(const SpacePtr& E, std::size_t n, int trials,
                             std::uint64_t seed);

/// Seeded family generators: coordinates, coordinate blocks, normalized
/// Gaussians, rank-one perturbations.
std::vector<VectorFamily> standard_families(std::size_t n, int random_families,
                                            std::uint64_t seed);

struct InclusionReport {
  double lhs_lower = 0.0;   // lower bound for pi_{M(l_r,E),q}(T)
  double rhs_upper = kInf;  // theorem-based upper bound for the right side
  bool consistent = true;
};

/// Checks the inclusion lemma Pi_{E,p} subset Pi_{M(l_r,E),q}, 1/r = 1/p - 1/q:
/// the estimated left side must not exceed a supplied theorem bound.
InclusionReport inclusion_consistency(const FiniteOperator& T, const SpacePtr& E,
                                      double p, double q,
                                      const std::vector<VectorFamily>& families,
                                      double rhs_upper,
                                      const SolverConfig& config = {});

}  // namespace seqnorm
