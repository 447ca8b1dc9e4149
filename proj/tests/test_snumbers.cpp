#include <cmath>

#include "doctest.h"
#include "seqnorm/rng.hpp"
#include "seqnorm/snumbers.hpp"
#include "seqnorm/summing.hpp"

using namespace seqnorm;

TEST_CASE("singular values of simple matrices") {
  Vector s = svd_values({{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}});
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[1] == doctest::Approx(2.0));
  CHECK(s[2] == doctest::Approx(1.0));
  // permutations are isometries
  Vector p = svd_values({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(1.0));
  // [[1,1],[1,0]] has singular values phi and 1/phi
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Vector f = svd_values({{1.0, 1.0}, {1.0, 0.0}});
  CHECK(f[0] == doctest::Approx(phi));
  CHECK(f[1] == doctest::Approx(1.0 / phi));
  CHECK_THROWS_AS(svd_values({{1.0, 2.0}, {3.0}}), DimensionMismatchError);
  CHECK_THROWS_AS(svd_values({{1.0, kInf}, {0.0, 1.0}}), NonFiniteError);
}

TEST_CASE("eigenvalue moduli") {
  // rotation by 90 degrees: eigenvalues +-i, both of modulus one
  Vector r = eig_moduli({{0.0, -1.0}, {1.0, 0.0}});
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(1.0));
  Vector t = eig_moduli({{2.0, 100.0}, {0.0, -3.0}});
  CHECK(t[0] == doctest::Approx(3.0));
  CHECK(t[1] == doctest::Approx(2.0));
  CHECK(operator_norm_l2({{0.0, 2.0}, {0.0, 0.0}}) == doctest::Approx(2.0));
}

TEST_CASE("closed-form approximation numbers for lp identities") {
  CHECK(approx_exact_lp(5, 1, 1.0, 2.0) == doctest::Approx(std::sqrt(5.0)));
  CHECK(approx_exact_lp(5, 5, 1.0, 2.0) == doctest::Approx(1.0));
  CHECK(approx_exact_lp(9, 2, 1.0, kInf) == doctest::Approx(8.0));
  CHECK_THROWS_AS(approx_exact_lp(4, 0, 1.0, 2.0), InvalidDescriptorError);
  CHECK_THROWS_AS(approx_exact_lp(4, 5, 1.0, 2.0), InvalidDescriptorError);
}

TEST_CASE("approximation-number bounds for l_2 into E") {
  SpacePtr l1 = SpaceDescriptor::lp(1.0);
  for (std::size_t k : {1, 2, 4}) {
    BoundPair b = approx_bounds(l1, 8, k);
    CHECK(b.lower > 0.0);
    CHECK(b.lower <= b.upper * (1.0 + 1e-9));
    // for E = l_1 Pietsch's value sqrt(n-k+1) matches the truncation bound
    CHECK(b.upper == doctest::Approx(std::sqrt(9.0 - double(k))));
  }
}

TEST_CASE("Weyl inequality holds on random and degenerate matrices") {
  SpacePtr F = parse_space("lorentz(4/3,2)");
  WeylReport nil = weyl_check({{0.0, 1.0}, {0.0, 0.0}}, F);
  CHECK(nil.multiplicative_ok);
  CHECK(nil.norm_form_ok);
  CHECK(nil.eigen_moduli[0] == doctest::Approx(0.0));
  CHECK(nil.singular_values[0] == doctest::Approx(1.0));

  CounterRng rng(31, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A(5, std::vector<double>(5));
    for (auto& row : A)
      for (double& v : row) v = rng.gauss();
    WeylReport rep = weyl_check(A, F);
    CHECK(rep.multiplicative_ok);
    CHECK(rep.worst_product_ratio <= 1.0 + 1e-9);
    CHECK(rep.norm_form_ok);
    CHECK(rep.norm_form_ratio <= kWeylConstant * (1.0 + 1e-9));
  }
}

TEST_CASE("eigenvalue-multiplier shadow") {
  SpacePtr l1 = SpaceDescriptor::lp(1.0);
  // T = diag(e_1) * I: s-numbers (1,0,...), ||sigma||_1 = 1
  Matrix I3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EigenvalueMultiplierReport rep =
      eigenvalue_multiplier_check({1.0, 0.0, 0.0}, I3, l1);
  CHECK(rep.singular_ok);
  CHECK(rep.eigen_ok);
  CHECK(rep.s_norm == doctest::Approx(1.0));
  CHECK(rep.bound >= std::sqrt(2.0) * (1.0 - 1e-9));
  CHECK(rep.eig_norm == doctest::Approx(1.0));

  CounterRng rng(77, 1);
  Matrix R(4, std::vector<double>(4));
  for (auto& row : R)
    for (double& v : row) v = rng.gauss();
  EigenvalueMultiplierReport rnd =
      eigenvalue_multiplier_check({2.0, 1.0, 0.5, 0.25}, R, l1);
  CHECK(rnd.singular_ok);
  CHECK(rnd.eigen_ok);

  // E must be 2-concave with a recorded constant
  CHECK_THROWS_AS(eigenvalue_multiplier_check({1.0, 0.0, 0.0}, I3,
                                              SpaceDescriptor::lp(4.0)),
                  MissingAttestationError);
}

TEST_CASE("pi identity lower bound for F = l_2") {
  // pi_2(id : l_2^n) = sqrt(n) exactly, and lambda_{l_2}(n) = sqrt(n)
  for (std::size_t n : {2, 4, 16}) {
    PiIdentityReport rep = pi_identity_lower(SpaceDescriptor::lp(2.0), n,
                                             std::sqrt(double(n)));
    CHECK(rep.consistent);
    CHECK(rep.lambda_value == doctest::Approx(std::sqrt(double(n))));
    CHECK(rep.implied_pi_lower ==
          doctest::Approx(std::sqrt(double(n)) / kWeylConstant));
  }
  CHECK_THROWS_AS(pi_identity_lower(SpaceDescriptor::lp(1.5), 4, 2.0),
                  MissingAttestationError);
}
