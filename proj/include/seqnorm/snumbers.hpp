#pragma once

#include <vector>

#include "seqnorm/duality.hpp"

namespace seqnorm {

using Matrix = std::vector<std::vector<double>>;

/// Singular values, non-increasing.
Vector svd_values(const Matrix& A);

/// Eigenvalue moduli, non-increasing (ties broken by descending real part).
Vector eig_moduli(const Matrix& A);

double operator_norm_l2(const Matrix& A);

/// Pietsch's exact formula a_k(id : l_q^n -> l_p^n) = (n-k+1)^{1/p-1/q}.
double approx_exact_lp(std::size_t n, std::size_t k, double p, double q);

/// Bounds for a_k(id : l_2^n -> E_n): upper is the rank-(k-1) truncation
/// value ||id : l_2^{n-k+1} -> E_{n-k+1}||, lower is the asymptotic
/// reference lambda_E(n-k+1)/sqrt(n-k+1) (a witness value, not a certified
/// lower bound on a_k).
BoundPair approx_bounds(const SpacePtr& E, std::size_t n, std::size_t k,
                        const SolverConfig& config = {});

struct WeylReport {
  bool multiplicative_ok = true;  // prod |lambda_k| <= prod s_k for all m
  bool norm_form_ok = true;       // ||lambda*||_F <= 2 sqrt(2e) ||s||_F
  double worst_product_ratio = 0.0;
  double norm_form_ratio = 0.0;
  Vector eigen_moduli;
  Vector singular_values;
};

/// Multiplicative Weyl inequality and its norm form in F with the 2 sqrt(2e)
/// constant.
WeylReport weyl_check(const Matrix& A, const SpacePtr& F);

struct EigenvalueMultiplierReport {
  double s_norm = 0.0;        // ||(s_k)||_{M(l2,E)}
  double bound = 0.0;         // sqrt(2) M_(2)(E) ||sigma||_E ||R||
  double eig_norm = 0.0;      // ||(|lambda|*)||_{M(l2,E)}
  bool singular_ok = true;    // s_norm <= bound
  bool eigen_ok = true;       // eig_norm <= 2 sqrt(2e) s_norm
};

/// Shadow of the eigenvalue-multiplier theorem for T = diag(sigma) * R with
/// ||R|| <= 1 (normalized internally) and 2-concave E.
EigenvalueMultiplierReport eigenvalue_multiplier_check(const Vector& sigma,
                                                       const Matrix& R,
                                                       const SpacePtr& E);

struct PiIdentityReport {
  double implied_pi_lower = 0.0;  // C^{-1} lambda_F(n), theorem lower bound for pi
  double lambda_value = 0.0;      // independently computed lambda_F(n)
  bool consistent = true;
};

/// Emits the lower bound pi_{F,2}(id_X) >= C^{-1} lambda_F(n) with
/// C = 2 sqrt(2e) c_2^F, and checks it against the supplied valid upper
/// bound pi_value.
PiIdentityReport pi_identity_lower(const SpacePtr& F, std::size_t n,
                                   double pi_value);

constexpr double kWeylConstant = 4.6632879631328662;  // 2 sqrt(2e)

}  // namespace seqnorm
