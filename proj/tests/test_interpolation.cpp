#include <cmath>

#include "doctest.h"
#include "seqnorm/interpolation.hpp"
#include "seqnorm/rng.hpp"

using namespace seqnorm;

namespace {

Vector seeded_vector(std::size_t n, std::uint64_t stream) {
  CounterRng rng(13, stream);
  Vector x = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.gauss();
  return x;
}

const SpacePtr l1 = SpaceDescriptor::lp(1.0);
const SpacePtr l2 = SpaceDescriptor::lp(2.0);
const SpacePtr linf = SpaceDescriptor::lp(kInf);

}  // namespace

TEST_CASE("closed form worked example") {
  KFunctionalResult r = k_functional(l1, linf, 1.5, {4.0, 2.0, 1.0});
  CHECK(r.value.value == doctest::Approx(5.0).epsilon(1e-12));
  // the split recombines to x and certifies the value
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(r.split.x0[i] + r.split.x1[i] ==
          doctest::Approx(std::vector<double>{4, 2, 1}[i]));
  double certified = norm(l1, r.split.x0).value + 1.5 * norm(linf, r.split.x1).value;
  CHECK(certified == doctest::Approx(r.value.value).epsilon(1e-12));
}

TEST_CASE("clip search reproduces the closed form") {
  CounterRng rng(3, 0);
  for (int c = 0; c < 40; ++c) {
    std::size_t n = 2 + rng.below(20);
    Vector x = seeded_vector(n, 100 + static_cast<std::uint64_t>(c));
    double t = 0.05 + rng.uniform() * (static_cast<double>(n) + 1.0);
    double closed = k_functional(l1, linf, t, x, KMethod::ClosedForm).value.value;
    double clip = k_functional(l1, linf, t, x, KMethod::ClipSearch).value.value;
    CHECK(clip == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("subgradient splitting approaches the closed form") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    Vector x = seeded_vector(5, s);
    double t = 0.3 + 0.5 * static_cast<double>(s);
    double closed = k_functional(l1, linf, t, x, KMethod::ClosedForm).value.value;
    KFunctionalResult sub = k_functional(l1, linf, t, x, KMethod::Subgradient);
    CHECK(sub.value.value >= closed * (1.0 - 1e-9));  // any split upper-bounds K
    CHECK(sub.value.value <= closed * 1.02);
  }
}

TEST_CASE("K-functional is monotone and concave in t") {
  Vector x = seeded_vector(8, 7);
  double k1 = k_functional(l2, linf, 0.5, x).value.value;
  double k2 = k_functional(l2, linf, 1.0, x).value.value;
  double k3 = k_functional(l2, linf, 1.5, x).value.value;
  CHECK(k1 <= k2 * (1.0 + 1e-12));
  CHECK(k2 <= k3 * (1.0 + 1e-12));
  CHECK(k2 >= 0.5 * (k1 + k3) * (1.0 - 1e-9));
  CHECK(k_functional(l2, linf, 1e9, x).value.value ==
        doctest::Approx(norm(l2, x).value).epsilon(1e-9));
}

TEST_CASE("invalid t is rejected") {
  CHECK_THROWS_AS(k_functional(l1, linf, 0.0, Vector::ones(3)),
                  NonPositiveTError);
  CHECK_THROWS_AS(k_functional(l1, linf, -1.0, Vector::ones(3)),
                  NonPositiveTError);
}

TEST_CASE("method preconditions") {
  CHECK_THROWS_AS(k_functional(l2, l1, 1.0, Vector::ones(3), KMethod::ClosedForm),
                  InvalidDescriptorError);
  CHECK_THROWS_AS(k_functional(l2, l1, 1.0, Vector::ones(3), KMethod::ClipSearch),
                  InvalidDescriptorError);
}

TEST_CASE("power equivalence ratio stays in the two-sided window") {
  CounterRng rng(5, 0);
  for (int c = 0; c < 20; ++c) {
    std::size_t n = 2 + rng.below(15);
    Vector x = seeded_vector(n, 200 + static_cast<std::uint64_t>(c));
    double t = 0.1 + rng.uniform() * 4.0;
    for (const SpacePtr& E0 : {l1, l2}) {
      double r = power_equivalence_ratio(E0, linf, 0.5, t, x);
      CHECK(r >= 0.25);
      CHECK(r <= 4.0);
    }
  }
  CHECK_THROWS_AS(power_equivalence_ratio(l1, linf, 1.5, 1.0, Vector::ones(3)),
                  InvalidDescriptorError);
}
