#include "seqnorm/summing.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "seqnorm/rng.hpp"

namespace seqnorm {

Vector FiniteOperator::apply(const Vector& x) const {
  if (x.dim() != cols())
    throw DimensionMismatchError("operator/vector dimension mismatch");
  Vector out = Vector::zeros(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols(); ++j) s += matrix[i][j] * x[j];
    out[i] = s;
  }
  return out;
}

FiniteOperator FiniteOperator::identity(std::size_t n, SpacePtr domain,
                                        SpacePtr codomain) {
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return {std::move(m), std::move(domain), std::move(codomain)};
}

FiniteOperator FiniteOperator::diagonal(const Vector& d, SpacePtr domain,
                                        SpacePtr codomain) {
  const std::size_t n = d.dim();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = d[i];
  return {std::move(m), std::move(domain), std::move(codomain)};
}

namespace {

Eigen::MatrixXd family_matrix(const VectorFamily& family) {
  const auto k = static_cast<Eigen::Index>(family.size());
  const auto n = static_cast<Eigen::Index>(family.front().dim());
  Eigen::MatrixXd a(k, n);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = family[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return a;
}

double embedding_constant(const SpacePtr& E, double p) {
  if (p == 1.0) return 1.0;  // unit vectors have norm one throughout the catalog
  const SpacePtr Es = simplify(E);
  if (const auto* lp = Es->as<Lp>()) {
    if (lp->p >= p - 1e-12) return 1.0;
    throw MissingAttestationError("l_p does not embed into the target space");
  }
  throw MissingAttestationError(
      "no recorded embedding constant of l_p into the target space");
}

}  // namespace

NormResult weak_p_norm(const VectorFamily& family, double p, const SpacePtr& X,
                       const SolverConfig& config) {
  if (family.empty()) return NormResult::exact(0.0);
  const std::size_t n = family.front().dim();
  for (const Vector& v : family)
    if (v.dim() != n) throw DimensionMismatchError("family members differ in dimension");
  const SpacePtr Xs = simplify(X);

  const auto* xlp = Xs->as<Lp>();
  if (p == 2.0 && xlp && xlp->p == 2.0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(family_matrix(family));
    return NormResult::exact(svd.singularValues()(0));
  }

  if (p == 1.0 && family.size() <= 20) {
    // sup over the dual ball is the norm of the signed sum; enumerate signs
    double best = 0.0;
    const std::size_t k = family.size();
    for (std::uint64_t bits = 0; bits < (1ULL << (k - 1)); ++bits) {
      Vector z = Vector::zeros(n);
      for (std::size_t i = 0; i < k; ++i) {
        double s = (i + 1 < k && (bits >> i) & 1ULL) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) z[j] += s * family[i][j];
      }
      best = std::max(best, norm(Xs, z).value);
    }
    return NormResult::exact(best);
  }

  // ascent on f(x') / ||x'||_{X^x} with f the l_p moment of the pairings
  Eigen::MatrixXd a = family_matrix(family);
  auto moment = [&](const Eigen::VectorXd& xp) {
    Eigen::VectorXd t = a * xp;
    if (std::isinf(p)) return t.lpNorm<Eigen::Infinity>();
    double s = 0.0;
    for (Eigen::Index i = 0; i < t.size(); ++i)
      s += std::pow(std::abs(t(i)), p);
    return std::pow(s, 1.0 / p);
  };
  const SpacePtr Xd = simplify(SpaceDescriptor::dual(Xs));
  auto dual_norm = [&](const Eigen::VectorXd& xp) {
    Vector v = Vector::zeros(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = xp(static_cast<Eigen::Index>(j));
    if (!Xd->as<DualOf>()) return norm(Xd, v).value;
    return kothe_dual_norm(Xs, v, config).value;
  };
  auto ratio = [&](const Eigen::VectorXd& xp) {
    double d = dual_norm(xp);
    return d > 0.0 ? moment(xp) / d : 0.0;
  };

  double best = 0.0;
  auto ascend = [&](Eigen::VectorXd xp) {
    if (xp.norm() == 0.0) return;
    double val = ratio(xp);
    double step = 0.5 / std::max(1.0, a.operatorNorm());
    int stalled = 0;
    for (int it = 0; it < config.max_iterations && stalled < 40; ++it) {
      // subgradient of the moment
      Eigen::VectorXd t = a * xp;
      double f = moment(xp);
      Eigen::VectorXd g = Eigen::VectorXd::Zero(xp.size());
      if (f > 0.0) {
        if (std::isinf(p)) {
          Eigen::Index arg = 0;
          t.cwiseAbs().maxCoeff(&arg);
          double s = t(arg) >= 0.0 ? 1.0 : -1.0;
          g = s * a.row(arg).transpose();
        } else {
          for (Eigen::Index i = 0; i < t.size(); ++i) {
            double s = t(i) > 0.0 ? 1.0 : (t(i) < 0.0 ? -1.0 : 0.0);
            g += s * std::pow(std::abs(t(i)) / f, p - 1.0) * a.row(i).transpose();
          }
        }
      }
      Eigen::VectorXd cand = xp + step * g;
      double d = dual_norm(cand);
      if (d > 0.0) {
        cand /= d;
        double v = moment(cand);
        if (v > val * (1.0 + 1e-15)) {
          val = v;
          xp = cand;
          step *= 1.3;
          stalled = 0;
          continue;
        }
      }
      step *= 0.5;
      ++stalled;
    }
    best = std::max(best, val);
  };

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  Eigen::VectorXd lead = svd.matrixV().col(0);
  ascend(lead);
  // vertex heuristics: convex objectives peak at dual-ball vertices
  Eigen::VectorXd signs = lead.unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
  ascend(signs);

  const auto* dlp = Xd->as<Lp>();
  if (p == 2.0 && dlp && std::isinf(dlp->p)) {
    // sup ball: greedy one-flip sign ascent. Any one-flip-optimal sign
    // vector s satisfies ||A s||_2 >= ||A||_Frobenius, so the estimate
    // dominates the square-function value of the family.
    auto greedy = [&](Eigen::VectorXd s) {
      double val = (a * s).squaredNorm();
      bool improved = true;
      int rounds = 0;
      while (improved && rounds++ < 200) {
        improved = false;
        for (Eigen::Index j = 0; j < s.size(); ++j) {
          s(j) = -s(j);
          double v = (a * s).squaredNorm();
          if (v > val) {
            val = v;
            improved = true;
          } else {
            s(j) = -s(j);
          }
        }
      }
      best = std::max(best, std::sqrt(val));
    };
    greedy(signs);
    greedy(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)));
  }

  CounterRng rng(config.seed, 0x7765616bULL);
  for (int r = 0; r < std::max(2, config.restarts / 4); ++r) {
    Eigen::VectorXd xp(n);
    for (std::size_t j = 0; j < n; ++j) xp(static_cast<Eigen::Index>(j)) = rng.gauss();
    ascend(xp);
  }
  return NormResult::numerical(best, 1e-3);
}

BoundPair summing_lower(const FiniteOperator& T, const SpacePtr& E, double p,
                        const std::vector<VectorFamily>& families,
                        const SolverConfig& config) {
  const double c = embedding_constant(E, p);
  BoundPair out;
  for (const VectorFamily& family : families) {
    if (family.empty()) continue;
    Vector images = Vector::zeros(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
      images[i] = norm(T.codomain, T.apply(family[i])).value;
    double num = norm(E, images).value;
    double den = c * weak_p_norm(family, p, T.domain, config).value;
    if (!(den > 0.0)) continue;
    if (num / den > out.lower) {
      out.lower = num / den;
      out.witness = images;
    }
  }
  return out;
}

double summing_upper_main(const SpacePtr& E) {
  SpaceFlags f = flags(E);
  if (!f.two_concave || std::isnan(f.m2_constant))
    throw MissingAttestationError(
        "summing upper bound needs the recorded 2-concavity constant");
  SpacePtr m = simplify(SpaceDescriptor::multiplier(SpaceDescriptor::lp(2.0),
                                                    simplify(E)));
  if (m->as<MultiplierOf>())
    throw MissingAttestationError(
        "summing upper bound needs a catalog identity for the multiplier space");
  return std::sqrt(2.0) * f.m2_constant;
}

BoundPair concavity_estimate(const SpacePtr& E, std::size_t n, int trials,
                             std::uint64_t seed) {
  const SpacePtr Es = simplify(E);
  BoundPair out;
  out.lower = 1.0;

  auto consider = [&](const std::vector<Vector>& xs) {
    double num = 0.0;
    Vector sq = Vector::zeros(n);
    for (const Vector& x : xs) {
      double nx = norm(Es, x).value;
      num += nx * nx;
      for (std::size_t j = 0; j < n; ++j) sq[j] += x[j] * x[j];
    }
    for (std::size_t j = 0; j < n; ++j) sq[j] = std::sqrt(sq[j]);
    double den = norm(Es, sq).value;
    if (den > 0.0) out.lower = std::max(out.lower, std::sqrt(num) / den);
  };

  // coordinate split: the classical sqrt(n)/lambda_E(n) witness
  {
    std::vector<Vector> coords;
    for (std::size_t j = 0; j < n; ++j) coords.push_back(Vector::unit(n, j));
    consider(coords);
  }
  CounterRng rng(seed, 0x636f6e63ULL);
  for (int t = 0; t < trials; ++t) {
    std::size_t k = 2 + rng.below(3);
    std::vector<Vector> xs;
    for (std::size_t i = 0; i < k; ++i) {
      Vector x = Vector::zeros(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = rng.gauss();
      xs.push_back(x);
    }
    consider(xs);
  }

  SpaceFlags f = flags(Es);
  if (f.two_concave && !std::isnan(f.m2_constant)) out.upper = f.m2_constant;
  if (out.upper < out.lower) out.upper = out.lower;  // sampling slack
  return out;
}

std::vector<VectorFamily> standard_families(std::size_t n, int random_families,
                                            std::uint64_t seed) {
  std::vector<VectorFamily> out;

  VectorFamily coords;
  for (std::size_t j = 0; j < n; ++j) coords.push_back(Vector::unit(n, j));
  out.push_back(coords);

  for (std::size_t b : {std::size_t{2}, std::size_t{4}}) {
    if (n % b != 0 || n == b) continue;
    VectorFamily blocks;
    for (std::size_t j = 0; j < n / b; ++j) {
      Vector x = Vector::zeros(n);
      for (std::size_t i = 0; i < b; ++i) x[j * b + i] = 1.0;
      blocks.push_back(x);
    }
    out.push_back(blocks);
  }

  CounterRng rng(seed, 0x66616d73ULL);
  for (int f = 0; f < random_families; ++f) {
    VectorFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
      Vector x = Vector::zeros(n);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = rng.gauss();
        s += x[j] * x[j];
      }
      s = std::sqrt(s);
      if (s > 0.0)
        for (std::size_t j = 0; j < n; ++j) x[j] /= s;
      fam.push_back(x);
    }
    out.push_back(fam);
  }

  {
    // coordinates nudged along a common direction
    Vector g = Vector::zeros(n);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = rng.gauss();
      s += g[j] * g[j];
    }
    s = std::sqrt(s);
    VectorFamily fam;
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = Vector::unit(n, j);
      if (s > 0.0)
        for (std::size_t i = 0; i < n; ++i)
          x[i] += 0.5 / std::sqrt(static_cast<double>(n)) * g[i] / s;
      fam.push_back(x);
    }
    out.push_back(fam);
  }
  return out;
}

InclusionReport inclusion_consistency(const FiniteOperator& T, const SpacePtr& E,
                                      double p, double q,
                                      const std::vector<VectorFamily>& families,
                                      double rhs_upper,
                                      const SolverConfig& config) {
  if (!(q > p))
    throw InvalidDescriptorError("inclusion lemma needs q > p");
  const double r = 1.0 / (1.0 / p - 1.0 / q);
  SpacePtr m = simplify(SpaceDescriptor::multiplier(SpaceDescriptor::lp(r),
                                                    simplify(E)));
  InclusionReport rep;
  rep.lhs_lower = summing_lower(T, m, q, families, config).lower;
  rep.rhs_upper = rhs_upper;
  rep.consistent = rep.lhs_lower <= rhs_upper * (1.0 + 1e-9);
  return rep;
}

}  // namespace seqnorm
