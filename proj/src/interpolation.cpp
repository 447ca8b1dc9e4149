#include "seqnorm/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "seqnorm/numerics.hpp"

namespace seqnorm {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

bool sup_normed(const SpacePtr& s) {
  const auto* lp = simplify(s)->as<Lp>();
  return lp && std::isinf(lp->p);
}

bool one_normed(const SpacePtr& s) {
  const auto* lp = simplify(s)->as<Lp>();
  return lp && lp->p == 1.0;
}

Splitting clip_split(const Vector& x, double c) {
  const std::size_t n = x.dim();
  Vector x0 = Vector::zeros(n), x1 = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    x1[i] = std::clamp(x[i], -c, c);
    x0[i] = x[i] - x1[i];
  }
  return {x0, x1};
}

KFunctionalResult closed_form_l1_linf(double t, const Vector& x) {
  Vector xs = rearrange(x);
  const std::size_t n = x.dim();
  const auto m = static_cast<std::size_t>(std::min(std::floor(t),
                                                   static_cast<double>(n)));
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) value += xs[i];
  double c = 0.0;
  if (m < n) {
    c = xs[m];
    value += (t - static_cast<double>(m)) * c;
  }
  return {NormResult::exact(value), clip_split(x, c)};
}

KFunctionalResult clip_search(const SpacePtr& E0, double t, const Vector& x,
                              const SolverConfig& config) {
  Vector xs = rearrange(x);
  const double top = xs[0];
  if (top == 0.0)
    return {NormResult::exact(0.0), clip_split(x, 0.0)};
  auto objective = [&](double c) {
    Splitting s = clip_split(x, c);
    return norm(E0, s.x0).value + t * c;
  };
  double c = golden_section(objective, 0.0, top,
                            std::max(config.tolerance, 1e-12) * top);
  // the exact clip level is a rearrangement value or an endpoint; snap if better
  double best = objective(c);
  for (double cand : {0.0, top}) {
    if (objective(cand) < best) {
      best = objective(cand);
      c = cand;
    }
  }
  for (std::size_t i = 0; i < xs.dim(); ++i) {
    if (objective(xs[i]) < best) {
      best = objective(xs[i]);
      c = xs[i];
    }
  }
  return {NormResult::numerical(best, 1e-9), clip_split(x, c)};
}

KFunctionalResult subgradient_search(const SpacePtr& E0, const SpacePtr& E1,
                                     double t, const Vector& x,
                                     const SolverConfig& config) {
  const std::size_t n = x.dim();
  auto objective = [&](const Vector& x0) {
    Vector x1 = Vector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) x1[i] = x[i] - x0[i];
    return norm(E0, x0).value + t * norm(E1, x1).value;
  };
  auto identity = [](const Vector& y) { return y; };

  Vector best = Vector::zeros(n);
  double best_value = objective(best);
  auto consider = [&](const Vector& start) {
    MinimizeResult r = minimize_convex(objective, identity, start, config);
    if (r.value < best_value) {
      best_value = r.value;
      best = r.argmin;
    }
  };
  consider(x);
  Vector xs = rearrange(x);
  for (double f : {0.25, 0.5, 0.75})
    consider(clip_split(x, f * xs[0]).x0);

  Vector x1 = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) x1[i] = x[i] - best[i];
  return {NormResult::numerical(best_value, 1e-4), Splitting{best, x1}};
}

}  // namespace

KFunctionalResult k_functional(const SpacePtr& E0, const SpacePtr& E1, double t,
                               const Vector& x, KMethod method,
                               const SolverConfig& config) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw NonPositiveTError("k_functional: t must be positive and finite");

  if (method == KMethod::Auto) {
    if (one_normed(E0) && sup_normed(E1))
      method = KMethod::ClosedForm;
    else if (sup_normed(E1))
      method = KMethod::ClipSearch;
    else
      method = KMethod::Subgradient;
  }
  switch (method) {
    case KMethod::ClosedForm:
      if (!one_normed(E0) || !sup_normed(E1))
        throw InvalidDescriptorError(
            "closed-form K-functional needs the (l1, l_inf) couple");
      return closed_form_l1_linf(t, x);
    case KMethod::ClipSearch:
      if (!sup_normed(E1))
        throw InvalidDescriptorError(
            "clip search needs a sup-normed second space");
      return clip_search(E0, t, x, config);
    default:
      return subgradient_search(E0, E1, t, x, config);
  }
}

double power_equivalence_ratio(const SpacePtr& E0, const SpacePtr& E1, double p,
                               double t, const Vector& x,
                               const SolverConfig& config) {
  if (!(p > 0.0) || p > 1.0)
    throw InvalidDescriptorError("power equivalence needs p in (0, 1]");
  if (x.is_zero()) return 1.0;

  SpacePtr E0p = SpaceDescriptor::power(E0, p);
  SpacePtr E1p = SpaceDescriptor::power(E1, p);
  double num = k_functional(E0p, E1p, t, x, KMethod::Auto, config).value.value;

  Vector root = Vector::zeros(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    root[i] = sgn(x[i]) * std::pow(std::abs(x[i]), 1.0 / p);
  double den = k_functional(E0, E1, std::pow(t, 1.0 / p), root, KMethod::Auto,
                            config)
                   .value.value;
  den = std::pow(den, p);
  if (den == 0.0) return 1.0;
  return num / den;
}

}  // namespace seqnorm
