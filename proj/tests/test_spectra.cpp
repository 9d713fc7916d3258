#include "rhoqes/errors.hpp"
#include "rhoqes/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace rhoqes;

TEST_CASE("equal masses: {0^1, 8^6, 16^21} on P_2") {
  const auto s = spectrum(build_h_es(MassConfig::equal(1), GaugeParams{}, 3), 2);
  CHECK(s.dimension == 28);
  CHECK(s.block_triangular);
  std::map<Rational, int> mult;
  for (const auto& e : s.eigenvalues) {
    REQUIRE(e.exact);
    ++mult[*e.exact];
  }
  CHECK(mult == std::map<Rational, int>{{0, 1}, {8, 6}, {16, 21}});
  REQUIRE(s.charpoly_match);
  CHECK(*s.charpoly_match);
}

TEST_CASE("equal masses, a and omega scale the levels: 8 a omega sum N") {
  const Rational a(3, 2), w(2, 3);
  const auto s = spectrum(build_h_es(MassConfig::equal(2), GaugeParams::uniform(a, w), 5), 1);
  for (const auto& lam : s.frequencies.lambda) {
    REQUIRE(lam.exact);
    CHECK(*lam.exact == equal_mass_energy(a, w, {1}));
  }
  CHECK(equal_mass_energy(1, 1, {1, 0, 2, 0, 0, 1}) == 32);
}

TEST_CASE("general masses: every level is a sum of fundamental frequencies") {
  const auto s = spectrum(build_h_es(MassConfig::finite({1, 2, 3, 4}), GaugeParams{}, 3), 2);
  CHECK(s.linear);
  CHECK(s.linearity_error < 1e-9);
  CHECK(s.frequencies.lambda.size() == 6);
  // the degree-1 trace equals the sum of the frequencies
  double sum = 0;
  for (const auto& l : s.frequencies.lambda) sum += l.value;
  CHECK(std::abs(sum - to_double(s.frequencies.trace)) < 1e-9);
}

TEST_CASE("frequencies do not depend on d") {
  const auto mc = MassConfig::finite({Rational(3, 2), 5, Rational(7, 3), 2});
  GaugeParams gp{{Rational(1, 2), 2, Rational(3, 4), 1, Rational(5, 3), Rational(2, 7)}, Rational(3, 2)};
  const auto a = fundamental_frequencies(build_h_es(mc, gp, 3));
  const auto b = fundamental_frequencies(build_h_es(mc, gp, Rational(7, 2)));
  REQUIRE(a.lambda.size() == b.lambda.size());
  for (std::size_t i = 0; i < a.lambda.size(); ++i) CHECK(std::abs(a.lambda[i].value - b.lambda[i].value) < 1e-9);
}

TEST_CASE("special variants: frozen operators are linear on their flags") {
  for (auto v : {Variant::atomic, Variant::molecular, Variant::three_center}) {
    const auto sm = make_model(v, MassConfig::equal(1), 1);
    GaugeParams gp;
    for (int k : sm.classical) gp.g[k] = 0;
    Point cl;
    cl.fill(Rational(1));
    const auto h = freeze_classical(build_special(sm, gp, 3), sm, cl);
    const auto s = spectrum(h, 2, dynamical_mask(sm));
    CHECK(s.linear);
    CHECK(s.frequencies.lambda.size() == sm.dynamical.size());
    const auto e0 = closed_form_special_energy(sm, gp, 3, std::vector<int>(sm.dynamical.size(), 0), cl);
    CHECK(std::abs(e0.value - to_double(special_ground_energy(sm, gp, 3, cl))) < 1e-12);
  }
}

TEST_CASE("spectrum rejects operators that leave the flag") {
  const auto raise = DiffOperator::multiplication(Polynomial::var(0));
  CHECK_THROWS_AS(spectrum(raise, 2), FlagViolation);
}
