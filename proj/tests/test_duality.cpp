#include <cmath>

#include "doctest.h"
#include "seqnorm/duality.hpp"
#include "seqnorm/rng.hpp"

using namespace seqnorm;

namespace {

Vector seeded_vector(std::size_t n, std::uint64_t stream) {
  CounterRng rng(11, stream);
  Vector x = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.gauss();
  return x;
}

/// Brute-force sup <x*, y> / ||y||_E over the monotone cone at n = 3,
/// scale-fixed at y_1 = 1 on a fine grid.
double brute_dual(const SpacePtr& E, const Vector& x) {
  Vector xs = rearrange(x);
  double best = 0.0;
  for (double y2 = 0.0; y2 <= 1.0; y2 += 0.001) {
    for (double y3 = 0.0; y3 <= y2; y3 += 0.001) {
      Vector y{1.0, y2, y3};
      double d = norm(E, y).value;
      if (d > 0.0) best = std::max(best, dot(xs, y) / d);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("Koethe dual of l_p is the conjugate l_p norm") {
  for (double p : {1.0, 4.0 / 3.0, 2.0, 3.0}) {
    SpacePtr E = SpaceDescriptor::lp(p);
    SpacePtr Ec = simplify(SpaceDescriptor::dual(E));
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vector x = seeded_vector(6, s);
      NormResult d = kothe_dual_norm(E, x);
      CHECK(d.certification == Certification::Exact);
      CHECK(d.value == doctest::Approx(norm(Ec, x).value).epsilon(1e-12));
    }
  }
}

TEST_CASE("Hoelder sharpness: pairing attains the dual norm") {
  SpacePtr E = SpaceDescriptor::lp(1.5);
  Vector x = seeded_vector(5, 42);
  // the dual exponent is 3; Hoelder is tight at y_i = sign(x_i) |x_i|^2
  Vector y = Vector::zeros(5);
  for (std::size_t i = 0; i < 5; ++i)
    y[i] = (x[i] >= 0 ? 1.0 : -1.0) * x[i] * x[i];
  double pairing = std::abs(dot(x, y)) / norm(E, y).value;
  CHECK(pairing == doctest::Approx(kothe_dual_norm(E, x).value).epsilon(1e-12));
}

TEST_CASE("level-function dual of d(w,p) matches brute force") {
  SpacePtr E = parse_space("dwp(pow(0.5),1.5)");
  for (std::uint64_t s = 0; s < 6; ++s) {
    Vector x = seeded_vector(3, 10 + s);
    double lvl = kothe_dual_norm(E, x).value;
    double ref = brute_dual(E, x);
    CHECK(lvl >= ref * (1.0 - 1e-9));   // brute is a restricted sup
    CHECK(lvl <= ref * (1.0 + 5e-3));   // grid resolution
  }
}

TEST_CASE("generic ratio-ascent dual matches brute force") {
  for (const char* text : {"lorentz(3/2,1)", "marc(pow(0.5))"}) {
    SpacePtr E = parse_space(text);
    for (std::uint64_t s = 0; s < 4; ++s) {
      Vector x = seeded_vector(3, 20 + s);
      NormResult est = kothe_dual_norm(E, x);
      double ref = brute_dual(E, x);
      double slack = est.certification == Certification::Exact
                         ? 1e-9
                         : 2.0 * est.tolerance;
      CHECK(est.value >= ref * (1.0 - slack));
      CHECK(est.value <= ref * (1.0 + 5e-3));
    }
  }
}

TEST_CASE("dual norm pairing inequality holds on random pairs") {
  for (const char* text : {"lp(4/3)", "dwp(pow(0.5),1.5)", "lorentz(3/2,1)"}) {
    SpacePtr E = parse_space(text);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vector x = seeded_vector(6, 30 + s);
      Vector y = seeded_vector(6, 60 + s);
      double lhs = 0.0;
      for (std::size_t i = 0; i < 6; ++i) lhs += std::abs(x[i] * y[i]);
      CHECK(lhs <= kothe_dual_norm(E, x).value * norm(E, y).value * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("power norm worked example and exponent algebra") {
  // ||(9,16)||_{(l_4)^2} = ||(3,4)||_4^2 = sqrt(337)
  CHECK(power_norm(SpaceDescriptor::lp(4.0), 2.0, {9.0, 16.0}).value ==
        doctest::Approx(std::sqrt(337.0)).epsilon(1e-12));
  // (l_1)^{1/2} is l_2
  SpacePtr half = SpaceDescriptor::power(SpaceDescriptor::lp(1.0), 0.5);
  for (std::uint64_t s = 0; s < 4; ++s) {
    Vector x = seeded_vector(5, 70 + s);
    CHECK(norm(half, x).value ==
          doctest::Approx(norm(SpaceDescriptor::lp(2.0), x).value).epsilon(1e-12));
  }
}

TEST_CASE("multiplier norm catalog identities") {
  SpacePtr l1 = SpaceDescriptor::lp(1.0);
  SpacePtr l2 = SpaceDescriptor::lp(2.0);
  // M(l2, l1) = l2: the worked (3,4) -> 5 example
  BoundPair b = multiplier_norm(l2, l1, {3.0, 4.0});
  CHECK(b.lower == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(b.upper == doctest::Approx(5.0).epsilon(1e-9));
  REQUIRE(b.witness.has_value());

  // M(E, E) = l_inf
  BoundPair same = multiplier_norm(l1, l1, {0.2, -0.9, 0.4});
  CHECK(same.upper == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(same.lower == doctest::Approx(0.9).epsilon(1e-9));

  // M(l2, l_{4/3}) = l_4 on a block multiplier: ||1_k||_4 = k^{1/4}
  Vector ones3 = Vector::zeros(8);
  for (std::size_t i = 0; i < 3; ++i) ones3[i] = 1.0;
  BoundPair blk = multiplier_norm(l2, SpaceDescriptor::lp(4.0 / 3.0), ones3);
  CHECK(blk.upper == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-12));
  CHECK(blk.lower == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-8));
}

TEST_CASE("multiplier bounds are ordered and witnesses are feasible") {
  SpacePtr l2 = SpaceDescriptor::lp(2.0);
  for (const char* text : {"lp(1)", "lorentz(4/3,2)", "dwp(pow(0.5),1.5)"}) {
    SpacePtr F = parse_space(text);
    for (std::uint64_t s = 0; s < 4; ++s) {
      Vector m = seeded_vector(6, 80 + s);
      BoundPair b = multiplier_norm(l2, F, m);
      CHECK(b.lower <= b.upper * (1.0 + 1e-12));
      REQUIRE(b.witness.has_value());
      // the witness certifies its own ratio
      Vector y = *b.witness;
      Vector my = Vector::zeros(6);
      for (std::size_t i = 0; i < 6; ++i) my[i] = m[i] * y[i];
      double r = norm(F, my).value / norm(l2, y).value;
      CHECK(r == doctest::Approx(b.lower).epsilon(1e-9));
    }
  }
}

TEST_CASE("composed multiplier evaluation agrees with closed forms") {
  SpacePtr l2 = SpaceDescriptor::lp(2.0);
  for (const char* text : {"lp(1)", "lp(4/3)", "dwp(pow(0.5),1.5)"}) {
    SpacePtr F = parse_space(text);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vector x = seeded_vector(7, 90 + s);
      double chain = m2e_norm(F, x).value;
      auto exact = m2_multiplier_exact(F, x);
      REQUIRE(exact.has_value());
      CHECK(chain == doctest::Approx(*exact).epsilon(1e-9));
      // sandwich against the ascent bounds
      BoundPair b = multiplier_norm(l2, F, x);
      CHECK(b.lower <= chain * (1.0 + 1e-9));
      CHECK(b.upper >= chain * (1.0 - 1e-9));
    }
  }
  CHECK_THROWS_AS(m2e_norm(SpaceDescriptor::lp(3.0), Vector::ones(4)),
                  InvalidDescriptorError);
}

TEST_CASE("identity norms: exact l_p values and the Euclidean sandwich") {
  SpacePtr l1 = SpaceDescriptor::lp(1.0);
  SpacePtr l2 = SpaceDescriptor::lp(2.0);
  BoundPair b = identity_norm(l1, l2, 9);
  CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-12));
  b = identity_norm(l2, l1, 9);
  CHECK(b.upper == doctest::Approx(3.0).epsilon(1e-12));
  // sandwich: lambda_E(m)/sqrt(m) <= ||id: l_2 -> E|| <= sqrt(2) lambda_E/sqrt(m)
  for (const char* text : {"lp(1)", "lp(4/3)"}) {
    SpacePtr E = parse_space(text);
    for (std::size_t m : {4, 16}) {
      BoundPair s = identity_norm(l2, E, m);
      double ref = fundamental(E, m).value / std::sqrt(static_cast<double>(m));
      CHECK(s.lower >= ref * (1.0 - 1e-12));
      CHECK(s.upper <= std::sqrt(2.0) * ref * (1.0 + 1e-12));
    }
  }
}
