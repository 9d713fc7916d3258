#include "oracles.hpp"

#include "rhoqes/errors.hpp"
#include "rhoqes/sl7.hpp"

#include <doctest.h>

using namespace rhoqes;

namespace {

DiffOperator R(const AlgebraElement& a, const Rational& N) { return a.realize(N); }

GaugeParams random_gauge(oracle::Rng& rng) {
  GaugeParams gp;
  for (auto& g : gp.g) g = rng.positive(7, 4);
  gp.omega = rng.positive(5, 3);
  return gp;
}

}  // namespace

TEST_CASE("49 generators") {
  CHECK(all_generators().size() == 49);
}

TEST_CASE("commutation relations by hand") {
  const Rational N = 3;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      // [J-_i, J+_j] = delta_ij J0 + J0_ji
      AlgebraElement want = J0(j, i);
      if (i == j) want += J0N();
      CHECK(commutator(R(Jm(i), N), R(Jp(j), N)) == R(want, N));
      // raisers commute
      CHECK(commutator(R(Jp(i), N), R(Jp(j), N)).is_zero());
      for (int k = 1; k <= 6; ++k) {
        // [J-_i, J0_jk] = delta_ij J-_k
        const auto c = commutator(R(Jm(i), N), R(J0(j, k), N));
        if (i == j) CHECK(c == R(Jm(k), N));
        else CHECK(c.is_zero());
      }
    }
  // [J0_ij, J0_kl] = delta_jk J0_il - delta_li J0_kj
  CHECK(commutator(R(J0(1, 2), N), R(J0(2, 3), N)) == R(J0(1, 3), N));
  CHECK(commutator(R(J0(1, 2), N), R(J0(3, 1), N)) == R(-J0(3, 2), N));
}

TEST_CASE("full relation check") {
  for (const Rational N : {Rational(0), Rational(2), Rational(5, 2)}) {
    const auto r = verify_algebra_relations(N);
    CHECK(r.ok());
    CHECK(r.checked > 1000);
  }
}

TEST_CASE("generators preserve P_N; raisers leave P_{N'} for N' != N") {
  for (int N = 0; N <= 3; ++N) {
    const auto r = flag_action_check(N);
    CHECK(r.ok());
    CHECK(r.generators == 49);
  }
  CHECK_THROWS_AS(matrix_on_basis(realize(GeneratorId::raiser(1), 2), 1), FlagViolation);
}

TEST_CASE("algebra element arithmetic") {
  const AlgebraElement a = Jm(1) * J0(2, 2) - Rational(1, 2) * Jp(3);
  const AlgebraElement b = a + (-a);
  CHECK(b.terms().empty());
  CHECK(R(a * Jm(2), 2) == R(a, 2) * R(Jm(2), 2));
}

TEST_CASE("generic gauged operator in generators") {
  oracle::Rng rng(61);
  for (int t = 0; t < 5; ++t) {
    const auto mc = MassConfig::finite(rng.masses());
    const auto gp = random_gauge(rng);
    const Rational d = t % 2 ? Rational(5) : Rational(7, 2);
    CHECK(h_es_from_generators(mc, gp, d) == build_h_es(mc, gp, d));
  }
}

TEST_CASE("special Lie forms") {
  const Rational m(3, 2), d(7, 2);
  GaugeParams gp = GaugeParams::uniform(Rational(5, 4), Rational(2, 3));
  CHECK(lie_form(LieForm::equal_grouped, m, gp, d).realize(0) == lie_form_target(LieForm::equal_grouped, m, gp, d));
  CHECK(lie_form(LieForm::equal_literal, m, gp, d).realize(0) != lie_form_target(LieForm::equal_literal, m, gp, d));

  GaugeParams g{{Rational(1, 2), 2, Rational(3, 4), 1, Rational(5, 3), Rational(2, 7)}, Rational(3, 2)};
  CHECK(lie_form(LieForm::atomic, m, g, d).realize(0) == lie_form_target(LieForm::atomic, m, g, d));
  g.g[0] = 0;
  CHECK(lie_form(LieForm::molecular_corrected, m, g, d).realize(0) ==
        lie_form_target(LieForm::molecular_corrected, m, g, d));
  CHECK(lie_form(LieForm::molecular_literal, m, g, d).realize(0) !=
        lie_form_target(LieForm::molecular_literal, m, g, d));
  g.g[1] = g.g[3] = 0;
  CHECK(lie_form(LieForm::three_center, m, g, d).realize(0) == lie_form_target(LieForm::three_center, m, g, d));
}
