#include "seqnorm/snumbers.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "seqnorm/summing.hpp"

namespace seqnorm {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& A) {
  if (A.empty() || A.front().empty())
    throw DimensionMismatchError("matrix must be non-empty");
  const auto r = static_cast<Eigen::Index>(A.size());
  const auto c = static_cast<Eigen::Index>(A.front().size());
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(A[static_cast<std::size_t>(i)].size()) != c)
      throw DimensionMismatchError("matrix rows differ in length");
    for (Eigen::Index j = 0; j < c; ++j) {
      double v = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!std::isfinite(v)) throw NonFiniteError("matrix entry is not finite");
      m(i, j) = v;
    }
  }
  return m;
}

}  // namespace

Vector svd_values(const Matrix& A) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(A));
  const Eigen::VectorXd& s = svd.singularValues();
  std::vector<double> out(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i)
    out[static_cast<std::size_t>(i)] = s(i);
  return Vector(std::move(out));
}

Vector eig_moduli(const Matrix& A) {
  Eigen::MatrixXd m = to_eigen(A);
  if (m.rows() != m.cols())
    throw DimensionMismatchError("eigenvalues need a square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw Error("eigenvalue iteration did not converge");
  std::vector<std::pair<double, double>> vals;  // (modulus, real part)
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    vals.emplace_back(std::abs(z), z.real());
  }
  std::stable_sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  std::vector<double> out;
  out.reserve(vals.size());
  for (const auto& v : vals) out.push_back(v.first);
  return Vector(std::move(out));
}

double operator_norm_l2(const Matrix& A) { return svd_values(A)[0]; }

double approx_exact_lp(std::size_t n, std::size_t k, double p, double q) {
  if (k < 1 || k > n)
    throw InvalidDescriptorError("approximation index must satisfy 1 <= k <= n");
  return std::pow(static_cast<double>(n - k + 1), 1.0 / p - 1.0 / q);
}

BoundPair approx_bounds(const SpacePtr& E, std::size_t n, std::size_t k,
                        const SolverConfig& config) {
  if (k < 1 || k > n)
    throw InvalidDescriptorError("approximation index must satisfy 1 <= k <= n");
  const std::size_t m = n - k + 1;
  BoundPair out;
  out.lower = fundamental(E, m).value / std::sqrt(static_cast<double>(m));
  if (auto v = id_l2_to_space_exact(E, m)) {
    out.upper = *v;
  } else {
    out.upper = identity_norm(SpaceDescriptor::lp(2.0), E, m, config).upper;
  }
  return out;
}

WeylReport weyl_check(const Matrix& A, const SpacePtr& F) {
  WeylReport rep;
  rep.singular_values = svd_values(A);
  rep.eigen_moduli = eig_moduli(A);
  const std::size_t n = rep.singular_values.dim();

  double log_l = 0.0, log_s = 0.0;
  rep.worst_product_ratio = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    if (rep.eigen_moduli[m] <= 0.0) break;  // later products only shrink the left side
    if (rep.singular_values[m] <= 0.0) {
      rep.multiplicative_ok = false;  // zero singular value but nonzero eigenvalue
      rep.worst_product_ratio = kInf;
      break;
    }
    log_l += std::log(rep.eigen_moduli[m]);
    log_s += std::log(rep.singular_values[m]);
    rep.worst_product_ratio =
        std::max(rep.worst_product_ratio, std::exp(log_l - log_s));
  }
  if (rep.worst_product_ratio > 1.0 + 1e-9) rep.multiplicative_ok = false;

  double num = norm(F, rep.eigen_moduli).value;
  double den = norm(F, rep.singular_values).value;
  rep.norm_form_ratio = den > 0.0 ? num / den : (num > 0.0 ? kInf : 0.0);
  rep.norm_form_ok = rep.norm_form_ratio <= kWeylConstant * (1.0 + 1e-9);
  return rep;
}

EigenvalueMultiplierReport eigenvalue_multiplier_check(const Vector& sigma,
                                                       const Matrix& R,
                                                       const SpacePtr& E) {
  SpaceFlags f = flags(E);
  if (!f.two_concave || std::isnan(f.m2_constant))
    throw MissingAttestationError(
        "eigenvalue-multiplier check needs the recorded 2-concavity constant");
  Eigen::MatrixXd r = to_eigen(R);
  const auto n = static_cast<Eigen::Index>(sigma.dim());
  if (r.rows() != n || r.cols() != n)
    throw DimensionMismatchError("R must be square and match sigma");

  double rn = Eigen::JacobiSVD<Eigen::MatrixXd>(r).singularValues()(0);
  if (rn > 0.0) r /= rn;  // enforce ||R|| <= 1
  Eigen::MatrixXd t = r;
  for (Eigen::Index i = 0; i < n; ++i) t.row(i) *= sigma[static_cast<std::size_t>(i)];

  Matrix tm(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      tm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t(i, j);

  SpacePtr M = SpaceDescriptor::multiplier(SpaceDescriptor::lp(2.0), E);
  EigenvalueMultiplierReport rep;
  rep.s_norm = norm(M, svd_values(tm)).value;
  rep.bound = std::sqrt(2.0) * f.m2_constant * norm(E, sigma).value;
  rep.eig_norm = norm(M, eig_moduli(tm)).value;
  rep.singular_ok = rep.s_norm <= rep.bound + 1e-6;
  rep.eigen_ok = rep.eig_norm <= kWeylConstant * rep.s_norm + 1e-9;
  return rep;
}

PiIdentityReport pi_identity_lower(const SpacePtr& F, std::size_t n,
                                   double pi_value) {
  const SpacePtr Fs = simplify(F);
  const auto* lp = Fs->as<Lp>();
  if (!lp || lp->p < 2.0)
    throw MissingAttestationError(
        "the identity lower bound needs the recorded embedding of l_2");
  const double c2 = 1.0;  // ||id: l_2 -> l_p|| for p >= 2
  PiIdentityReport rep;
  rep.lambda_value = fundamental(Fs, n).value;
  rep.implied_pi_lower = rep.lambda_value / (kWeylConstant * c2);
  rep.consistent = rep.implied_pi_lower <= pi_value * (1.0 + 1e-9);
  return rep;
}

}  // namespace seqnorm
