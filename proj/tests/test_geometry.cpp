#include "oracles.hpp"

#include "rhoqes/errors.hpp"
#include "rhoqes/geometry.hpp"

#include <doctest.h>

using namespace rhoqes;

namespace {

Point ones() {
  Point x;
  x.fill(Rational(1));
  return x;
}

}  // namespace

TEST_CASE("v4 squared against the triple product of integer configurations") {
  oracle::Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto c = oracle::random_config(rng, 3);
    const Point x = oracle::rho_of(c);
    CHECK(v4_squared(x) == oracle::triple_product_volume_squared(c));
    CHECK(cayley_menger_v4_squared(x) == v4_squared(x));
  }
  CHECK(v4_squared(ones()) == Rational(1, 72));
}

TEST_CASE("heron quadratic is 16 times the squared area over 16") {
  // 3-4-5 triangle: area 6
  CHECK(heron_s2(9, 16, 25) == 36);
  CHECK(heron_s2(1, 1, 1) == Rational(3, 16));
}

TEST_CASE("cometric equals half the kinetic metric of the coordinates") {
  oracle::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const auto m = rng.masses();
    const auto mc = MassConfig::finite(m);
    const auto c = oracle::random_config(rng, 3);
    const auto g = cometric(mc, oracle::rho_of(c));
    for (int k = 0; k < kVars; ++k)
      for (int l = 0; l < kVars; ++l) CHECK(2 * g(k, l) == oracle::kinetic_metric(mc.inv_m, c, k, l));
  }
}

TEST_CASE("determinant identity holds as a polynomial identity") {
  const auto mc = MassConfig::finite({1, 2, 3, 4});
  CHECK(cometric_det_poly(mc) == displayed_det_poly(mc));
  oracle::Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const auto m = MassConfig::finite(rng.masses());
    const auto c = oracle::random_config(rng, 3);
    const auto r = det_identity_check(m, oracle::rho_of(c));
    CHECK(r.equal);
  }
}

TEST_CASE("domain classification") {
  CHECK(domain_check(ones()) == Domain::interior);
  CHECK(domain_check(Point{1, 4, 1, 1, 2, 5}) == Domain::boundary);
  CHECK(domain_check(Point{1, 1, 1, 1, 1, 16}) == Domain::exterior);
  // planar configurations sit on the boundary
  oracle::Config flat;
  for (int i = 0; i < 4; ++i) flat[i] = {Rational(i * i), Rational(2 * i + 1), Rational(0)};
  CHECK(domain_check(oracle::rho_of(flat)) == Domain::boundary);
}

TEST_CASE("mass configuration accessors") {
  const auto mc = MassConfig::finite({1, 2, 3, 4});
  CHECK(mc.total() == 10);
  CHECK(mc.product() == 24);
  CHECK(mc.mu(0) == Rational(2, 3));
  CHECK(mc.cm() == Rational(5, 288));
  const auto mol = special_masses(SpecialVariant::molecular, 2);
  CHECK(mol.infinite_count() == 2);
  CHECK_THROWS_AS(mol.mu(0), BadLimit);
  CHECK(mol.mu(1) == 2);
  CHECK(dynamical_variables(SpecialVariant::three_center) == std::vector<int>{2, 4, 5});
}

TEST_CASE("effective potential: transcription vs gauge factor oracles") {
  const auto mc = MassConfig::finite({1, 2, 3, 4});
  oracle::Rng rng(31);
  for (int t = 0; t < 5; ++t) {
    const auto c = oracle::random_config(rng, 3);
    const Point x = oracle::rho_of(c);
    if (domain_check(x) != Domain::interior) continue;
    const auto v = gauge_factor_and_veff(mc, 3, x);
    CHECK(v.transcribed == v.oracle_measure);
    CHECK(v.transcribed != v.oracle_literal);
  }
  // d = 4 makes the two gauge exponents coincide
  const auto v4 = gauge_factor_and_veff(mc, 4, ones());
  CHECK(v4.oracle_measure == v4.oracle_literal);
  CHECK_THROWS_AS(gauge_factor_and_veff(mc, 3, Point{1, 4, 1, 1, 2, 5}), SingularPoint);
}

TEST_CASE("radial measure exponent") {
  const auto r = radial_measure(5, ones());
  CHECK(r.exponent == Rational(1, 2));
  CHECK(r.base == Rational(1, 72));
  const auto r6 = radial_measure(6, ones());
  REQUIRE(r6.value);
  CHECK(*r6.value == Rational(1, 72));
}

TEST_CASE("special determinants agree with the generic cometric") {
  oracle::Rng rng(37);
  for (auto v : {SpecialVariant::atomic, SpecialVariant::molecular, SpecialVariant::three_center}) {
    const auto c = oracle::random_config(rng, 3);
    const auto r = special_determinants(v, Rational(3, 2), oracle::rho_of(c));
    CHECK(r.direct == r.displayed);
  }
}
