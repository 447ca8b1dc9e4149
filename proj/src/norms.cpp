#include "seqnorm/norm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqnorm/duality.hpp"
#include "seqnorm/numerics.hpp"

namespace seqnorm {

namespace {

double lp_norm(double p, const Vector& x) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  }
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;  // scaled to avoid overflow for large p
  for (double v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double lorentz_pq_norm(const LorentzPQ& l, const Vector& x) {
  Vector xs = rearrange(x);
  if (std::isinf(l.q)) {
    double m = 0.0;
    for (std::size_t k = 0; k < xs.dim(); ++k)
      m = std::max(m, std::pow(static_cast<double>(k + 1), 1.0 / l.p) * xs[k]);
    return m;
  }
  double s = 0.0;
  for (std::size_t k = 0; k < xs.dim(); ++k)
    s += std::pow(static_cast<double>(k + 1), l.q / l.p - 1.0) *
         std::pow(xs[k], l.q);
  return std::pow(s, 1.0 / l.q);
}

double lorentz_d_norm(const LorentzD& d, const Vector& x) {
  Vector xs = rearrange(x);
  double s = 0.0;
  for (std::size_t k = 0; k < xs.dim(); ++k)
    s += d.w.weight(k + 1) * std::pow(xs[k], d.p);
  return std::pow(s, 1.0 / d.p);
}

double marcinkiewicz_norm(const Marcinkiewicz& m, const Vector& x) {
  Vector xss = cesaro_mean(x);
  double best = 0.0;
  for (std::size_t k = 0; k < xss.dim(); ++k)
    best = std::max(best, xss[k] * m.lambda(k + 1));
  return best;
}

/// Luxemburg gauge inf { rho > 0 : sum phi(|x_i| / rho) <= 1 } by bisection;
/// the modular is decreasing in rho, the bracket [x*_1, x*_1 / phi^{-1}(1/n)]
/// is analytic.
double luxemburg_norm(const OrliczFunction& phi, const Vector& x) {
  Vector xs = rearrange(x);
  double top = xs[0];
  if (top == 0.0) return 0.0;
  const double n = static_cast<double>(x.dim());
  auto modular = [&](double rho) {
    double s = 0.0;
    for (double v : xs) s += phi.eval(v / rho);
    return s - 1.0;
  };
  double lo = top;                          // modular >= phi(1) = 1
  double hi = top / phi.inverse(1.0 / n);   // modular <= n * (1/n) = 1
  if (modular(lo) <= 0.0) return lo;        // single nonzero entry
  // rounding can leave the analytic endpoint marginally positive
  for (int i = 0; i < 64 && modular(hi) > 0.0; ++i) hi *= 1.0 + 0x1p-40;
  return bisect(modular, lo, hi, 0.0);
}

}  // namespace

NormResult norm(const SpacePtr& space, const Vector& x) {
  const SpacePtr E = simplify(space);
  const auto& v = E->variant();
  if (const auto* lp = std::get_if<Lp>(&v))
    return NormResult::exact(lp_norm(lp->p, x));
  if (const auto* l = std::get_if<LorentzPQ>(&v))
    return NormResult::exact(lorentz_pq_norm(*l, x));
  if (const auto* d = std::get_if<LorentzD>(&v))
    return NormResult::exact(lorentz_d_norm(*d, x));
  if (const auto* o = std::get_if<Orlicz>(&v))
    return NormResult::numerical(luxemburg_norm(o->phi, x), 1e-12);
  if (const auto* m = std::get_if<Marcinkiewicz>(&v))
    return NormResult::exact(marcinkiewicz_norm(*m, x));
  if (const auto* du = std::get_if<DualOf>(&v))
    return kothe_dual_norm(du->inner, x);
  if (const auto* pw = std::get_if<PowerOf>(&v))
    return power_norm(pw->inner, pw->r, x);
  const auto& mu = std::get<MultiplierOf>(v);
  BoundPair b = multiplier_norm(mu.from, mu.to, x);
  if (std::isfinite(b.upper) && b.upper - b.lower <= 1e-9 * std::max(1.0, b.lower))
    return NormResult::exact(b.lower);
  return NormResult::numerical(b.lower, 1e-6);
}

NormResult fundamental(const SpacePtr& space, std::size_t n) {
  if (n == 0) throw InvalidDescriptorError("fundamental: n must be >= 1");
  const SpacePtr E = simplify(space);
  if (const auto* o = E->as<Orlicz>())
    return NormResult::exact(1.0 / o->phi.inverse(1.0 / static_cast<double>(n)));
  if (const auto* du = E->as<DualOf>()) {
    // lambda_{E^x}(n) * lambda_E(n) = n for normed symmetric spaces
    if (flags(du->inner).normed) {
      NormResult inner = fundamental(du->inner, n);
      return {static_cast<double>(n) / inner.value, inner.certification,
              inner.tolerance};
    }
  }
  return norm(E, Vector::ones(n));
}

Vector norm_subgradient(const SpacePtr& space, const Vector& x) {
  const SpacePtr E = simplify(space);
  const std::size_t n = x.dim();
  auto sign = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };

  if (const auto* lp = std::get_if<Lp>(&E->variant())) {
    Vector g = Vector::zeros(n);
    if (lp->p == 1.0) {
      for (std::size_t i = 0; i < n; ++i) g[i] = sign(x[i]);
      return g;
    }
    if (std::isinf(lp->p)) {
      std::size_t arg = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(x[i]) > std::abs(x[arg])) arg = i;
      g[arg] = sign(x[arg]);
      if (g[arg] == 0.0) g[arg] = 1.0;
      return g;
    }
    double nv = lp_norm(lp->p, x);
    if (nv == 0.0) return g;
    for (std::size_t i = 0; i < n; ++i)
      g[i] = sign(x[i]) * std::pow(std::abs(x[i]) / nv, lp->p - 1.0);
    return g;
  }

  // weighted rearrangement norms (sum c_k (x*_k)^q)^{1/q}
  auto rearranged_grad = [&](auto coeff, double q) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(x[a]) > std::abs(x[b]);
    });
    Vector g = Vector::zeros(n);
    if (std::isinf(q)) {
      // sup-type: gradient lives on the active rank
      double best = -1.0;
      std::size_t bk = 0;
      for (std::size_t k = 0; k < n; ++k) {
        double val = coeff(k + 1) * std::abs(x[order[k]]);
        if (val > best) {
          best = val;
          bk = k;
        }
      }
      g[order[bk]] = sign(x[order[bk]]) * coeff(bk + 1);
      return g;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      s += coeff(k + 1) * std::pow(std::abs(x[order[k]]), q);
    double nv = std::pow(s, 1.0 / q);
    if (nv == 0.0) return g;
    for (std::size_t k = 0; k < n; ++k) {
      double a = std::abs(x[order[k]]);
      g[order[k]] = sign(x[order[k]]) * coeff(k + 1) *
                    std::pow(a / nv, q - 1.0);
    }
    return g;
  };

  if (const auto* l = std::get_if<LorentzPQ>(&E->variant())) {
    double e = std::isinf(l->q) ? 1.0 / l->p : l->q / l->p - 1.0;
    return rearranged_grad(
        [e](std::size_t k) { return std::pow(static_cast<double>(k), e); },
        l->q);
  }
  if (const auto* d = std::get_if<LorentzD>(&E->variant()))
    return rearranged_grad([&](std::size_t k) { return d->w.weight(k); }, d->p);

  if (const auto* o = std::get_if<Orlicz>(&E->variant())) {
    double rho = luxemburg_norm(o->phi, x);
    Vector g = Vector::zeros(n);
    if (rho == 0.0) return g;
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      denom += o->phi.derivative(std::abs(x[i]) / rho) * std::abs(x[i]) / rho;
    if (denom == 0.0) return g;
    for (std::size_t i = 0; i < n; ++i)
      g[i] = sign(x[i]) * o->phi.derivative(std::abs(x[i]) / rho) / denom;
    return g;
  }

  return fd_gradient([&](const Vector& y) { return norm(E, y).value; }, x);
}

OrliczValidation validate_orlicz(const OrliczFunction& phi,
                                 const std::vector<double>& grid) {
  if (grid.empty()) throw Error("validate_orlicz: empty grid");
  OrliczValidation rep;
  rep.normalized = phi.eval(0.0) == 0.0 && std::abs(phi.eval(1.0) - 1.0) < 1e-12;
  const double tol = 1e-10;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      double a = grid[i], b = grid[j], mid = 0.5 * (a + b);
      double chord = 0.5 * (phi.eval(a) + phi.eval(b));
      if (phi.eval(mid) > chord + tol * std::max(1.0, chord)) rep.convex = false;
      double psa = phi.eval(std::sqrt(a)), psb = phi.eval(std::sqrt(b));
      double pm = phi.eval(std::sqrt(mid));
      if (pm + tol * std::max(1.0, pm) < 0.5 * (psa + psb))
        rep.sqrt_concave = false;
    }
  }
  return rep;
}

std::optional<double> id_l2_to_space_exact(const SpacePtr& space, std::size_t n) {
  const SpacePtr E = simplify(space);
  const double nd = static_cast<double>(n);

  auto lp_value = [&](double p) {
    return p <= 2.0 ? std::pow(nd, 1.0 / p - 0.5) : 1.0;
  };
  if (const auto* lp = E->as<Lp>()) return lp_value(lp->p);
  if (const auto* o = E->as<Orlicz>()) return lp_value(o->phi.exponent());

  // rearrangement norms (sum c_k (y*_k)^q)^{1/q}: on the sphere substitute
  // z = (y*)^2 in the monotone simplex; the extremal structure is decided by
  // the monotonicity of the coefficient sequence.
  auto simplex_sup = [&](auto coeff, double q) -> std::optional<double> {
    if (std::isinf(q)) {
      // sup_k coeff(k) y*_k with y*_k <= 1/sqrt(k)
      double best = 0.0;
      for (std::size_t k = 1; k <= n; ++k)
        best = std::max(best, coeff(k) / std::sqrt(static_cast<double>(k)));
      return best;
    }
    if (q == 2.0) {
      // linear program over the monotone simplex: flat blocks are extreme
      double s = 0.0, best = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        s += coeff(k);
        best = std::max(best, s / static_cast<double>(k));
      }
      return std::sqrt(best);
    }
    if (q < 2.0) {
      bool nonincreasing = true, nondecreasing = true;
      for (std::size_t k = 1; k < n; ++k) {
        if (coeff(k + 1) > coeff(k) + 1e-15) nonincreasing = false;
        if (coeff(k + 1) < coeff(k) - 1e-15) nondecreasing = false;
      }
      if (nonincreasing) {
        // Hoelder extremal is already non-increasing
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k)
          s += std::pow(coeff(k), 2.0 / (2.0 - q));
        return std::pow(s, (2.0 - q) / (2.0 * q));
      }
      if (nondecreasing) {
        // monotone constraint pools the extremal flat
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += coeff(k);
        return std::pow(s, 1.0 / q) * std::pow(nd, -0.5);
      }
    }
    return std::nullopt;
  };

  if (const auto* l = E->as<LorentzPQ>()) {
    double e = std::isinf(l->q) ? 1.0 / l->p : l->q / l->p - 1.0;
    return simplex_sup(
        [e](std::size_t k) { return std::pow(static_cast<double>(k), e); },
        l->q);
  }
  if (const auto* d = E->as<LorentzD>())
    return simplex_sup([&](std::size_t k) { return d->w.weight(k); }, d->p);
  return std::nullopt;
}

}  // namespace seqnorm
