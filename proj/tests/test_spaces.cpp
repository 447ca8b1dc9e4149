#include <cmath>

#include "doctest.h"
#include "seqnorm/duality.hpp"
#include "seqnorm/rng.hpp"

using namespace seqnorm;

namespace {

const char* kCatalog[] = {"lp(1)",
                          "lp(2)",
                          "lp(3/2)",
                          "lp(inf)",
                          "lorentz(4/3,1)",
                          "lorentz(4/3,2)",
                          "lorentz(3/2,2)",
                          "dwp(pow(0.5),1.5)",
                          "dwp(pow(0.25),2)",
                          "orlicz(power(1.5))",
                          "marc(pow(0.5))",
                          "dual(dwp(pow(0.5),1.5))"};

Vector seeded_vector(std::size_t n, std::uint64_t stream) {
  CounterRng rng(7, stream);
  Vector x = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.gauss();
  return x;
}

}  // namespace

TEST_CASE("parse and print round-trip") {
  for (const char* text :
       {"lp(2)", "lp(inf)", "lorentz(4,inf)", "dwp(pow(0.5),1.5)",
        "orlicz(power(1.5))", "marc(pow(0.5))", "marc(of(lp(2)))",
        "dual(lorentz(1.5,1))", "power(lp(3),2)", "mult(lp(2),lp(1))"}) {
    SpacePtr s = parse_space(text);
    CHECK(print_space(s) == text);
    CHECK(space_equal(parse_space(print_space(s)), s));
  }
  CHECK(parse_space("lorentz( 4/3 , 2 )") != nullptr);
}

TEST_CASE("invalid descriptors are rejected") {
  CHECK_THROWS_AS(parse_space("lp(0.5)"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("lorentz(1,2)"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("orlicz(power(0.8))"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("marc(pow(1.5))"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("power(lp(1),2)"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("lp(2) trailing"), InvalidDescriptorError);
  CHECK_THROWS_AS(parse_space("unknown(1)"), InvalidDescriptorError);
}

TEST_CASE("simplify rewrites catalog identities") {
  // the conjugate exponent of 4/3 carries one ulp of rounding, so compare
  // the parameter numerically rather than the printed text
  const auto* conj = simplify(parse_space("dual(lp(4/3))"))->as<Lp>();
  REQUIRE(conj != nullptr);
  CHECK(conj->p == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(print_space(simplify(parse_space("dual(dual(dwp(pow(0.5),1.5)))"))) ==
        "dwp(pow(0.5),1.5)");
  CHECK(print_space(simplify(parse_space("power(lp(3),2)"))) == "lp(1.5)");
  CHECK(print_space(simplify(parse_space("power(power(lp(4),2),0.5)"))) ==
        "lp(4)");
  CHECK(print_space(simplify(parse_space("mult(lp(2),lp(1))"))) == "lp(2)");
  CHECK(print_space(simplify(parse_space("mult(lp(2),lp(4/3))"))) == "lp(4)");
  CHECK(print_space(simplify(parse_space("mult(lp(2),lp(2))"))) == "lp(inf)");
  CHECK(print_space(simplify(parse_space("mult(lorentz(3/2,1),lp(1))"))) ==
        "dual(lorentz(1.5,1))");
  CHECK(print_space(simplify(parse_space("mult(lp(2),lorentz(4/3,2))"))) ==
        "lorentz(4,inf)");
}

TEST_CASE("attestation flags") {
  CHECK(flags(parse_space("lp(1)")).two_concave);
  CHECK(flags(parse_space("lp(1)")).m2_constant == 1.0);
  CHECK(flags(parse_space("lp(3)")).two_convex_one);
  CHECK_FALSE(flags(parse_space("lp(3)")).two_concave);
  CHECK(flags(parse_space("dwp(pow(0.5),1.5)")).two_concave);
  CHECK(std::isnan(flags(parse_space("dwp(pow(0.5),1.5)")).m2_constant));
  CHECK_FALSE(flags(parse_space("lorentz(4/3,2)")).normed);
  CHECK(flags(parse_space("lorentz(4/3,1)")).normed);
  CHECK(flags(parse_space("dual(lp(4/3))")).two_convex_one);
}

TEST_CASE("norms against the rearrangement oracle") {
  // the norm of x equals the norm of x* for every symmetric space
  for (const char* text : kCatalog) {
    SpacePtr E = parse_space(text);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vector x = seeded_vector(9, s);
      double a = norm(E, x).value;
      double b = norm(E, rearrange(x)).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("norm invariants: homogeneity, triangle, monotonicity") {
  for (const char* text : kCatalog) {
    SpacePtr E = parse_space(text);
    bool normed = flags(E).normed;
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vector x = seeded_vector(8, 2 * s);
      Vector y = seeded_vector(8, 2 * s + 1);
      double nx = norm(E, x).value;
      CHECK(norm(E, Vector::zeros(8)).value == 0.0);
      Vector cx = Vector::zeros(8);
      for (std::size_t i = 0; i < 8; ++i) cx[i] = -2.5 * x[i];
      CHECK(norm(E, cx).value == doctest::Approx(2.5 * nx).epsilon(1e-11));
      if (normed) {
        Vector sum = Vector::zeros(8);
        for (std::size_t i = 0; i < 8; ++i) sum[i] = x[i] + y[i];
        CHECK(norm(E, sum).value <=
              (nx + norm(E, y).value) * (1.0 + 1e-11));
      }
      Vector shrunk = x;
      shrunk[3] *= 0.5;  // lattice monotonicity
      CHECK(norm(E, shrunk).value <= nx * (1.0 + 1e-11));
    }
  }
}

TEST_CASE("unit vectors are normalized across the catalog") {
  for (const char* text : kCatalog) {
    SpacePtr E = parse_space(text);
    CHECK(norm(E, Vector::unit(6, 2)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fundamental(E, 1).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fundamental function closed forms") {
  CHECK(fundamental(parse_space("lp(2)"), 9).value == doctest::Approx(3.0));
  CHECK(fundamental(parse_space("orlicz(power(1.5))"), 8).value ==
        doctest::Approx(std::pow(8.0, 2.0 / 3.0)));
  CHECK(fundamental(parse_space("marc(pow(0.5))"), 16).value ==
        doctest::Approx(4.0));
  double s = 0.0;
  for (int k = 1; k <= 5; ++k) s += std::pow(k, -0.5);
  CHECK(fundamental(parse_space("dwp(pow(0.5),1.5)"), 5).value ==
        doctest::Approx(std::pow(s, 2.0 / 3.0)));
  // lambda_{E^x}(n) lambda_E(n) = n
  for (const char* text : {"lp(4/3)", "lorentz(4/3,1)", "dwp(pow(0.5),1.5)"}) {
    SpacePtr E = parse_space(text);
    double prod = fundamental(SpaceDescriptor::dual(E), 7).value *
                  fundamental(E, 7).value;
    CHECK(prod == doctest::Approx(7.0).epsilon(1e-9));
  }
}

TEST_CASE("Orlicz power gauge equals the l_p norm") {
  SpacePtr orl = parse_space("orlicz(power(1.5))");
  SpacePtr lp = parse_space("lp(3/2)");
  for (std::uint64_t s = 0; s < 8; ++s) {
    Vector x = seeded_vector(7, 100 + s);
    CHECK(norm(orl, x).value ==
          doctest::Approx(norm(lp, x).value).epsilon(1e-11));
  }
}

TEST_CASE("Marcinkiewicz norm from the Cesaro means") {
  SpacePtr m = parse_space("marc(pow(0.5))");
  CHECK(norm(m, Vector::unit(5, 0)).value == doctest::Approx(1.0));
  Vector x{4.0, 1.0, 0.0};
  // sup_k sqrt(k) x**_k: max(4, sqrt(2) * 2.5, sqrt(3) * 5/3)
  CHECK(norm(m, x).value == doctest::Approx(4.0));
  // marc(of(E)) reproduces marc(pow) for E = l_2
  SpacePtr m2 = parse_space("marc(of(lp(2)))");
  for (std::uint64_t s = 0; s < 4; ++s) {
    Vector y = seeded_vector(6, 200 + s);
    CHECK(norm(m2, y).value == doctest::Approx(norm(m, y).value).epsilon(1e-11));
  }
}

TEST_CASE("subgradients match finite differences") {
  for (const char* text : {"lp(3/2)", "lorentz(4/3,2)", "dwp(pow(0.5),1.5)",
                           "orlicz(power(1.5))"}) {
    SpacePtr E = parse_space(text);
    for (std::uint64_t s = 0; s < 3; ++s) {
      Vector x = seeded_vector(6, 300 + s);
      Vector g = norm_subgradient(E, x);
      Vector fd = fd_gradient([&](const Vector& y) { return norm(E, y).value; }, x);
      for (std::size_t i = 0; i < 6; ++i)
        CHECK(g[i] == doctest::Approx(fd[i]).epsilon(5e-5));
    }
  }
}

TEST_CASE("Orlicz validation flags the non-square-concave power") {
  std::vector<double> grid;
  for (int i = 1; i <= 64; ++i) grid.push_back(i / 64.0 * 2.0);
  OrliczValidation ok = validate_orlicz(OrliczFunction(1.5), grid);
  CHECK(ok.convex);
  CHECK(ok.sqrt_concave);
  CHECK(ok.normalized);
  OrliczValidation cubic = validate_orlicz(OrliczFunction(3.0), grid);
  CHECK(cubic.convex);
  CHECK_FALSE(cubic.sqrt_concave);
}

TEST_CASE("exact Euclidean-ball suprema agree with the ascent estimate") {
  for (const char* text : {"lp(1)", "lp(4/3)", "lorentz(4/3,2)", "lorentz(3/2,1)",
                           "lorentz(4/3,inf)", "dwp(pow(0.5),1.5)"}) {
    SpacePtr E = parse_space(text);
    for (std::size_t n : {3, 6}) {
      auto exact = id_l2_to_space_exact(E, n);
      REQUIRE(exact.has_value());
      BoundPair est = multiplier_norm(SpaceDescriptor::lp(2.0), E,
                                      Vector::ones(n));
      CHECK(est.lower <= *exact * (1.0 + 1e-9));
      CHECK(est.lower >= *exact * (1.0 - 1e-6));
    }
  }
}
