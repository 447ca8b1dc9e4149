#include "seqnorm/duality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "seqnorm/rng.hpp"

namespace seqnorm {

namespace {

double conjugate(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

/// Weighted pool-adjacent-violators: the non-increasing sequence closest to
/// `values` in the weighted least-squares sense; pooled blocks carry their
/// weighted mean.
std::vector<double> pava_nonincreasing(const std::vector<double>& values,
                                       const std::vector<double>& weights) {
  std::vector<double> level, wsum;
  std::vector<std::size_t> count;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double lv = values[i], wv = weights[i];
    std::size_t c = 1;
    while (!level.empty() && level.back() < lv) {
      lv = (lv * wv + level.back() * wsum.back()) / (wv + wsum.back());
      wv += wsum.back();
      c += count.back();
      level.pop_back();
      wsum.pop_back();
      count.pop_back();
    }
    level.push_back(lv);
    wsum.push_back(wv);
    count.push_back(c);
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t b = 0; b < level.size(); ++b)
    out.insert(out.end(), count[b], level[b]);
  return out;
}

/// sup over the non-increasing non-negative cone of <xs, y> / nf(y).
/// Deterministic: closed candidate family (powers of xs, flat prefixes),
/// then projected ratio ascent from the best candidate.
double monotone_ratio_sup(const Vector& xs,
                          const std::function<double(const Vector&)>& nf,
                          const std::function<Vector(const Vector&)>& grad_nf,
                          const SolverConfig& config) {
  const std::size_t n = xs.dim();
  if (xs.is_zero()) return 0.0;

  double best = 0.0;
  Vector best_y = Vector::ones(n);
  auto consider = [&](const Vector& y) {
    double d = nf(y);
    if (!(d > 0.0)) return;
    double r = dot(xs, y) / d;
    if (r > best) {
      best = r;
      best_y = y;
    }
  };

  const double top = xs[0] > 0.0 ? xs[0] : 1.0;
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0}) {
    Vector y = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i)
      y[i] = a == 0.0 ? 1.0 : (xs[i] > 0.0 ? std::pow(xs[i] / top, a) : 0.0);
    consider(y);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    Vector y = Vector::zeros(n);
    for (std::size_t i = 0; i < k; ++i) y[i] = 1.0;
    consider(y);
  }

  auto ascend = [&](Vector y) {
    double d0 = nf(y);
    if (!(d0 > 0.0)) return;
    for (std::size_t i = 0; i < n; ++i) y[i] /= d0;
    double val = dot(xs, y);
    double step = 0.5;
    int stalled = 0;
    for (int it = 0; it < config.max_iterations && stalled < 60; ++it) {
      Vector gn = grad_nf(y);
      Vector dir = Vector::zeros(n);
      for (std::size_t i = 0; i < n; ++i) dir[i] = xs[i] - val * gn[i];
      Vector cand = Vector::zeros(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = y[i] + step * dir[i];
      cand = project_monotone(cand);
      double d = nf(cand);
      if (d > 0.0) {
        for (std::size_t i = 0; i < n; ++i) cand[i] /= d;
        double v = dot(xs, cand);
        if (v > val * (1.0 + 1e-15)) {
          val = v;
          y = cand;
          step *= 1.3;
          stalled = 0;
          continue;
        }
      }
      step *= 0.5;
      ++stalled;
    }
    if (val > best) {
      best = val;
      best_y = y;
    }
  };

  ascend(best_y);
  // the ratio is not concave on the monotone cone for every target, so a
  // single start can stall on a ridge; restart from seeded random points
  CounterRng rng(config.seed, 0x6475616c);
  for (int r = 0; r < std::max(4, config.restarts / 4); ++r) {
    Vector y = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::abs(rng.gauss());
    ascend(project_monotone(y));
    Vector mix = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i)
      mix[i] = best_y[i] * (1.0 + 0.3 * std::abs(rng.gauss()));
    ascend(project_monotone(mix));
  }
  return best;
}

}  // namespace

NormResult kothe_dual_norm(const SpacePtr& E, const Vector& x,
                           const SolverConfig& config) {
  if (x.is_zero()) return NormResult::exact(0.0);
  // catalog rewrites: dual(lp(p)) and friends evaluate directly
  SpacePtr dualE = simplify(SpaceDescriptor::dual(E));
  if (!dualE->as<DualOf>()) return norm(dualE, x);

  SpacePtr Es = simplify(E);
  // lorentz(p,1) has coefficients k^{1/p-1}, i.e. it is d(w,1) with the power
  // weight alpha = 1 - 1/p, so its dual falls to the level-function formula
  if (const auto* pq = Es->as<LorentzPQ>(); pq && pq->q == 1.0)
    Es = SpaceDescriptor::lorentz_d(WeightRule(1.0 - 1.0 / pq->p), 1.0);
  if (const auto* d = Es->as<LorentzD>()) {
    // level function: the least concave majorant of the cumulative pairs
    // (W_k, X_k) linearizes the sup over decreasing test sequences
    const std::size_t n = x.dim();
    Vector xs = rearrange(x);
    std::vector<double> r(n), w(n);
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = d->w.weight(k + 1);
      r[k] = xs[k] / w[k];
    }
    std::vector<double> s = pava_nonincreasing(r, w);
    if (d->p == 1.0) return NormResult::exact(s[0]);
    double pc = conjugate(d->p);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += w[k] * std::pow(s[k], pc);
    return NormResult::exact(std::pow(acc, 1.0 / pc));
  }

  Vector xs = rearrange(x);
  double v = monotone_ratio_sup(
      xs, [&](const Vector& y) { return norm(Es, y).value; },
      [&](const Vector& y) { return norm_subgradient(Es, y); }, config);
  return NormResult::numerical(v, 1e-4);
}

NormResult power_norm(const SpacePtr& E, double r, const Vector& x) {
  Vector root = Vector::zeros(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    root[i] = std::pow(std::abs(x[i]), 1.0 / r);
  NormResult inner = norm(E, root);
  double v = std::pow(inner.value, r);
  if (inner.certification == Certification::Exact) return NormResult::exact(v);
  return NormResult::numerical(v, inner.tolerance * std::max(1.0, r));
}

std::optional<double> m2_multiplier_exact(const SpacePtr& E, const Vector& x) {
  SpacePtr m = simplify(SpaceDescriptor::multiplier(SpaceDescriptor::lp(2.0), E));
  if (m->as<MultiplierOf>()) return std::nullopt;
  return norm(m, x).value;
}

BoundPair multiplier_norm(const SpacePtr& E, const SpacePtr& F, const Vector& m,
                          const SolverConfig& config) {
  const std::size_t n = m.dim();
  BoundPair out;
  if (m.is_zero()) {
    out.lower = 0.0;
    out.upper = 0.0;
    out.witness = Vector::ones(n);
    return out;
  }
  const SpacePtr Es = simplify(E);
  const SpacePtr Fs = simplify(F);
  Vector ma = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) ma[i] = std::abs(m[i]);

  // upper bound from the catalog identity for M(E, F), when it exists
  SpacePtr cat = simplify(SpaceDescriptor::multiplier(Es, Fs));
  if (!cat->as<MultiplierOf>()) {
    NormResult nr = norm(cat, ma);
    out.upper = nr.value * (1.0 + nr.tolerance);
  }

  // lower bound: sup ||m y||_F / ||y||_E over canonical witnesses plus
  // random-restart projected ascent
  auto ratio = [&](const Vector& y) {
    double den = norm(Es, y).value;
    if (!(den > 0.0)) return 0.0;
    Vector my = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) my[i] = ma[i] * y[i];
    return norm(Fs, my).value / den;
  };
  Vector best_y = Vector::unit(n, 0);
  double best = 0.0;
  auto consider = [&](const Vector& y) {
    if (y.is_zero()) return;
    double r = ratio(y);
    if (r > best) {
      best = r;
      best_y = y;
    }
  };

  for (std::size_t k = 0; k < n; ++k) consider(Vector::unit(n, k));
  consider(Vector::ones(n));
  {
    // flat prefixes along the ordering of |m| (extremal for sup-type targets)
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ma[a] > ma[b];
    });
    Vector y = Vector::zeros(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      y[order[k]] = 1.0;
      consider(y);
    }
  }
  const double top = *std::max_element(ma.begin(), ma.end());
  auto power_witness = [&](double a) {
    Vector y = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i)
      y[i] = a == 0.0 ? 1.0 : (ma[i] > 0.0 ? std::pow(ma[i] / top, a) : 0.0);
    return y;
  };
  for (double a : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) consider(power_witness(a));
  {
    // refine the power family exponent; extremal multipliers for l_p targets
    // sit exactly on it
    double a = golden_section([&](double t) { return -ratio(power_witness(t)); },
                              0.0, 4.0, 1e-10);
    consider(power_witness(a));
  }
  if (const auto* d = Fs->as<LorentzD>();
      d && d->p < 2.0 && Es->as<Lp>() && Es->as<Lp>()->p == 2.0) {
    // Hoelder-extremal witness aligned with the rearrangement of |m|
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return ma[a] > ma[b];
    });
    Vector y = Vector::zeros(n);
    double e = 1.0 / (2.0 - d->p);
    for (std::size_t k = 0; k < n; ++k)
      y[order[k]] =
          std::pow(d->w.weight(k + 1) * std::pow(ma[order[k]], d->p), e);
    consider(y);
  }

  // projected ascent on the ratio, multi-start
  auto ascend = [&](Vector y) {
    double den = norm(Es, y).value;
    if (!(den > 0.0)) return;
    for (std::size_t i = 0; i < n; ++i) y[i] /= den;
    double val = ratio(y);
    double step = 0.5;
    int stalled = 0;
    for (int it = 0; it < config.max_iterations && stalled < 50; ++it) {
      Vector my = Vector::zeros(n);
      for (std::size_t i = 0; i < n; ++i) my[i] = ma[i] * y[i];
      Vector gF = norm_subgradient(Fs, my);
      Vector gE = norm_subgradient(Es, y);
      Vector cand = Vector::zeros(n);
      for (std::size_t i = 0; i < n; ++i) {
        double dir = ma[i] * gF[i] - val * gE[i];
        cand[i] = std::max(0.0, y[i] + step * dir);
      }
      double d = norm(Es, cand).value;
      if (d > 0.0) {
        for (std::size_t i = 0; i < n; ++i) cand[i] /= d;
        double v = ratio(cand);
        if (v > val * (1.0 + 1e-15)) {
          val = v;
          y = cand;
          step *= 1.3;
          stalled = 0;
          continue;
        }
      }
      step *= 0.5;
      ++stalled;
    }
    consider(y);
  };

  ascend(best_y);
  CounterRng rng(config.seed, 0x6d756c74ULL);
  for (int r = 0; r < config.restarts; ++r) {
    Vector y = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::abs(rng.gauss());
    ascend(y);
  }

  out.lower = best;
  out.witness = best_y;
  if (out.upper < out.lower) out.upper = out.lower;  // solver slack
  return out;
}

NormResult m2e_norm(const SpacePtr& F, const Vector& x,
                    const SolverConfig& config) {
  if (!flags(F).two_concave)
    throw InvalidDescriptorError(
        "m2e_norm requires the 2-concavity attestation of the target space");
  if (auto v = m2_multiplier_exact(F, x)) return NormResult::exact(*v);

  // generic composition: || |x|^2 ||_{((F^x)^2)^x} ^ {1/2}
  const SpacePtr Fs = simplify(F);
  auto squared_dual = [&](const Vector& z) {
    Vector root = Vector::zeros(z.dim());
    for (std::size_t i = 0; i < z.dim(); ++i)
      root[i] = std::sqrt(std::abs(z[i]));
    double d = kothe_dual_norm(Fs, root, config).value;
    return d * d;
  };
  Vector xs = rearrange(x);
  Vector xs2 = Vector::zeros(xs.dim());
  for (std::size_t i = 0; i < xs.dim(); ++i) xs2[i] = xs[i] * xs[i];
  double v = monotone_ratio_sup(
      xs2, squared_dual,
      [&](const Vector& y) { return fd_gradient(squared_dual, y); }, config);
  return NormResult::numerical(std::sqrt(v), 1e-3);
}

BoundPair identity_norm(const SpacePtr& E, const SpacePtr& F, std::size_t n,
                        const SolverConfig& config) {
  const SpacePtr Es = simplify(E);
  const SpacePtr Fs = simplify(F);

  std::optional<double> exact;
  if (const auto* lp = Es->as<Lp>()) {
    if (const auto* lq = Fs->as<Lp>()) {
      exact = lq->p >= lp->p
                  ? 1.0
                  : std::pow(static_cast<double>(n), 1.0 / lq->p - 1.0 / lp->p);
    } else if (lp->p == 2.0) {
      exact = id_l2_to_space_exact(Fs, n);
    } else if (lp->p == 1.0 && flags(Fs).normed) {
      // extreme points of the l1 ball are the signed unit vectors
      exact = norm(Fs, Vector::unit(n, 0)).value;
    }
  }
  BoundPair b;
  if (exact) {
    b.lower = *exact;
    b.upper = *exact;
    b.witness = Vector::ones(n);
  } else {
    b = multiplier_norm(Es, Fs, Vector::ones(n), config);
  }

  // Szarek--Tomczak sandwich for 2-concave targets of the Euclidean ball
  if (const auto* lp = Es->as<Lp>(); lp && lp->p == 2.0) {
    SpaceFlags ff = flags(Fs);
    if (ff.two_concave) {
      double lam = fundamental(Fs, n).value / std::sqrt(static_cast<double>(n));
      b.lower = std::max(b.lower, lam);
      if (!std::isnan(ff.m2_constant))
        b.upper = std::min(b.upper, std::sqrt(2.0) * ff.m2_constant * lam);
    }
  }
  if (b.upper < b.lower) b.upper = b.lower;
  return b;
}

}  // namespace seqnorm
