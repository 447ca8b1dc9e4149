#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <variant>

#include "seqnorm/vector.hpp"

namespace seqnorm {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Parametrized convex Young function with phi(0) = 0 and phi(1) = 1.
/// Only the power family phi(t) = t^p is cataloged; the normalization keeps
/// every unit vector at norm one.
class OrliczFunction {
 public:
  explicit OrliczFunction(double exponent) : exponent_(exponent) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent))
      throw InvalidDescriptorError("orlicz power exponent must be >= 1");
  }

  double eval(double t) const { return std::pow(t, exponent_); }
  double inverse(double s) const { return std::pow(s, 1.0 / exponent_); }
  double derivative(double t) const {
    return exponent_ * std::pow(t, exponent_ - 1.0);
  }
  double exponent() const { return exponent_; }

 private:
  double exponent_;
};

/// Generator of a non-increasing positive weight sequence with w_1 = 1.
/// Closed-form power weights w_n = n^{-alpha} so partial sums are computable
/// for any n (asymptotic sweeps need arbitrary dimensions).
class WeightRule {
 public:
  explicit WeightRule(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
      throw InvalidDescriptorError("weight exponent must be >= 0");
  }
  double weight(std::size_t n) const {
    return std::pow(static_cast<double>(n), -alpha_);
  }
  double partial_sum(std::size_t n) const {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += weight(k);
    return s;
  }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

class SpaceDescriptor;
using SpacePtr = std::shared_ptr<const SpaceDescriptor>;

/// Rule lambda(n) for a Marcinkiewicz space, either a power n^a or the
/// fundamental function of another space.
class FundamentalRule {
 public:
  static FundamentalRule power(double a) { return FundamentalRule(a, nullptr); }
  static FundamentalRule of(SpacePtr space) {
    return FundamentalRule(0.0, std::move(space));
  }
  double operator()(std::size_t n) const;
  bool is_power() const { return space_ == nullptr; }
  double power_exponent() const { return a_; }
  const SpacePtr& space() const { return space_; }

 private:
  FundamentalRule(double a, SpacePtr space) : a_(a), space_(std::move(space)) {}
  double a_;
  SpacePtr space_;
};

struct Lp {
  double p;  // >= 1 or infinity
};
struct LorentzPQ {
  double p;  // > 1
  double q;  // >= 1 or infinity
};
struct LorentzD {
  WeightRule w;
  double p;  // >= 1
};
struct Orlicz {
  OrliczFunction phi;
};
struct Marcinkiewicz {
  FundamentalRule lambda;
};
struct DualOf {
  SpacePtr inner;
};
struct PowerOf {
  SpacePtr inner;
  double r;  // > 0
};
struct MultiplierOf {
  SpacePtr from;
  SpacePtr to;
};

/// Analytic catalog attestations. Convexity and concavity cannot be decided
/// numerically, so each descriptor carries what is known in closed form.
struct SpaceFlags {
  /// Largest s with an s-convexity constant of 1 (1 for every Banach norm).
  double convexity_one = 1.0;
  /// The space is known 2-concave.
  bool two_concave = false;
  /// 2-concavity constant when known exactly, NaN otherwise.
  double m2_constant = std::numeric_limits<double>::quiet_NaN();
  /// The space is known 2-convex with constant 1.
  bool two_convex_one = false;
  /// Triangle inequality holds (false only for quasi-normed parameter ranges).
  bool normed = true;
};

/// Immutable tree describing a symmetric sequence space: base catalog plus
/// dual / power / multiplier constructors.
class SpaceDescriptor {
 public:
  using Variant = std::variant<Lp, LorentzPQ, LorentzD, Orlicz, Marcinkiewicz,
                               DualOf, PowerOf, MultiplierOf>;

  explicit SpaceDescriptor(Variant v) : variant_(std::move(v)) {}

  const Variant& variant() const { return variant_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&variant_);
  }

  static SpacePtr lp(double p);
  static SpacePtr lorentz_pq(double p, double q);
  static SpacePtr lorentz_d(WeightRule w, double p);
  static SpacePtr orlicz(OrliczFunction phi);
  static SpacePtr marcinkiewicz(FundamentalRule lambda);
  static SpacePtr dual(SpacePtr inner);
  static SpacePtr power(SpacePtr inner, double r);
  static SpacePtr multiplier(SpacePtr from, SpacePtr to);

 private:
  Variant variant_;
};

/// Catalog attestations for a descriptor tree.
SpaceFlags flags(const SpacePtr& space);

/// Rewrites descriptor trees into catalog form where exact identities exist:
/// dual(lp(p)) -> lp(p'), power(lp(p), r) -> lp(p/r), dual(dual(E)) -> E,
/// orlicz(power(p)) -> lp(p), and the multiplier identities M(E,E) = l_inf,
/// M(l2, l_u) = l_r. Evaluation dispatches on the simplified tree.
SpacePtr simplify(const SpacePtr& space);

/// Canonical expression text, e.g. "lorentz(4/3,2)". parse(print(s)) == s.
std::string print_space(const SpacePtr& space);

/// Parses the descriptor expression grammar: identifier, parenthesized
/// comma-separated arguments, rational or decimal literals, "inf".
SpacePtr parse_space(const std::string& text);

bool space_equal(const SpacePtr& a, const SpacePtr& b);

}  // namespace seqnorm
