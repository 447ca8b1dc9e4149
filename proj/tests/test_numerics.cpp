#include <cmath>

#include "doctest.h"
#include "seqnorm/numerics.hpp"

using namespace seqnorm;

TEST_CASE("bisect finds the root of a monotone function") {
  double r = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("bisect rejects unbracketed input") {
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, 0.0, 1.0, 1e-9),
                  NoBracketError);
}

TEST_CASE("golden section minimizes a unimodal function") {
  double m = golden_section([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0,
                            2.0, 1e-10);
  CHECK(m == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("monotone projection matches the worked example") {
  Vector p = project_monotone({1.0, 2.0, 0.0, -1.0});
  CHECK(p[0] == doctest::Approx(1.5));
  CHECK(p[1] == doctest::Approx(1.5));
  CHECK(p[2] == doctest::Approx(0.0));
  CHECK(p[3] == doctest::Approx(0.0));
}

TEST_CASE("monotone projection is idempotent and optimal at n = 4") {
  Vector y{0.3, 1.7, 1.7, -0.4};
  Vector p = project_monotone(y);
  Vector pp = project_monotone(p);
  for (std::size_t i = 0; i < 4; ++i) CHECK(p[i] == doctest::Approx(pp[i]));
  for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(p[i] >= p[i + 1]);
  CHECK(p[3] >= 0.0);

  // brute-force the QP over a fine monotone grid
  double best = 1e100;
  for (double a = 0; a <= 2.0; a += 0.01)
    for (double b = 0; b <= a; b += 0.01)
      for (double c = 0; c <= b; c += 0.01)
        for (double d = 0; d <= c; d += 0.01) {
          double v = (a - y[0]) * (a - y[0]) + (b - y[1]) * (b - y[1]) +
                     (c - y[2]) * (c - y[2]) + (d - y[3]) * (d - y[3]);
          best = std::min(best, v);
        }
  double got = 0.0;
  for (std::size_t i = 0; i < 4; ++i) got += (p[i] - y[i]) * (p[i] - y[i]);
  CHECK(got <= best + 1e-3);
}

TEST_CASE("monotone simplex projection returns a feasible point") {
  Vector p = project_monotone_simplex({0.9, 0.05, 0.4, -0.2}, 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    s += p[i];
    CHECK(p[i] >= -1e-12);
    if (i + 1 < p.dim()) CHECK(p[i] >= p[i + 1] - 1e-12);
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("projected descent solves a small quadratic") {
  auto g = [](const Vector& x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  auto id = [](const Vector& x) { return x; };
  SolverConfig cfg;
  MinimizeResult r = minimize_convex(g, id, Vector::zeros(2), cfg);
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(r.argmin[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.argmin[1] == doctest::Approx(-0.5).epsilon(1e-3));
}

TEST_CASE("finite-difference gradient matches an analytic one") {
  auto f = [](const Vector& x) { return x[0] * x[0] + 3.0 * x[1]; };
  Vector g = fd_gradient(f, {0.7, -0.2});
  CHECK(g[0] == doctest::Approx(1.4).epsilon(1e-6));
  CHECK(g[1] == doctest::Approx(3.0).epsilon(1e-6));
}
