#include "oracles.hpp"

#include "rhoqes/errors.hpp"
#include "rhoqes/oscillator.hpp"

#include <doctest.h>

#include <cmath>

using namespace rhoqes;

namespace {

GaugeParams random_gauge(oracle::Rng& rng) {
  GaugeParams gp;
  for (auto& g : gp.g) g = rng.positive(7, 4);
  gp.omega = rng.positive(5, 3);
  return gp;
}

Polynomial rho_linear(const std::array<Rational, kVars>& c) { return Polynomial::linear(c); }

}  // namespace

TEST_CASE("radial laplacian equals the Cartesian kinetic operator") {
  oracle::Rng rng(41);
  for (int dim : {3, 4, 5}) {
    for (int t = 0; t < 4; ++t) {
      const auto mc = MassConfig::finite(rng.masses());
      const auto c = oracle::random_config(rng, dim);
      const auto f = oracle::random_poly(rng, 3, 6);
      CHECK(build_delta_rad(mc, dim)(f).eval(oracle::rho_of(c)) == oracle::cartesian_laplacian(mc.inv_m, c, f));
    }
  }
}

TEST_CASE("ground state energy and annihilation") {
  oracle::Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const auto mc = MassConfig::finite(rng.masses());
    const auto gp = random_gauge(rng);
    const Rational d = t % 2 ? Rational(7, 2) : Rational(3);
    Rational sum = 0;
    for (const auto& g : gp.g) sum += g;
    const auto gs = ground_state_data(mc, gp, d);
    CHECK(gs.E0 == gp.omega * d * sum);
    CHECK(build_h_es(mc, gp, d)(Polynomial(1)).is_zero());
    CHECK(build_h_es(mc, gp, d) == h_es_by_conjugation(mc, gp, d));
  }
}

TEST_CASE("spring map reproduces the potential: ratio = V - E0") {
  // Oracle: e^{-phi} Delta e^{phi} from the Cartesian chain rule on phi and phi^2 terms.
  oracle::Rng rng(47);
  const auto mc = MassConfig::finite(rng.masses());
  const auto gp = random_gauge(rng);
  const auto gs = ground_state_data(mc, gp, 3);
  const auto sm = forward_spring_map(mc, gp, 3);
  std::array<Rational, kVars> minus_s;
  for (int k = 0; k < kVars; ++k) minus_s[k] = -gs.s[k];
  const auto phi = rho_linear(minus_s);
  for (int t = 0; t < 5; ++t) {
    const auto c = oracle::random_config(rng, 3);
    const Point x = oracle::rho_of(c);
    // e^{-phi} Delta e^{phi} = Delta phi + (1/2) sum_a |grad_a phi|^2 / m_a
    Rational grad2 = 0;
    for (int k = 0; k < kVars; ++k)
      for (int l = 0; l < kVars; ++l) grad2 += minus_s[k] * minus_s[l] * oracle::kinetic_metric(mc.inv_m, c, k, l);
    const Rational ratio = oracle::cartesian_laplacian(mc.inv_m, c, phi) + grad2 / 2;
    CHECK(sm.ratio.eval(x) == ratio);
    CHECK(ratio == build_es_potential(sm.nu, gp.omega).eval(x) - sm.E0);
  }
}

TEST_CASE("equal masses, unit gauge: all spring constants 1") {
  const auto sm = forward_spring_map(MassConfig::equal(1), GaugeParams{}, 3);
  for (const auto& n : sm.nu) CHECK(n == 1);
  CHECK(sm.E0 == 18);
}

TEST_CASE("printed spring relations: nu12 and nu13 hold, nu34 does not in general") {
  const auto mc = MassConfig::finite({1, 2, 3, 4});
  GaugeParams gp;
  gp.g = {Rational(5, 4), Rational(3, 2), 1, Rational(1, 3), 1, 2};
  const auto printed = printed_spring_relations(mc, gp);
  const auto nu = forward_spring_map(mc, gp).nu;
  REQUIRE(printed[0]);
  REQUIRE(printed[1]);
  REQUIRE(printed[5]);
  CHECK(*printed[0] == nu[0]);
  CHECK(*printed[1] == nu[1]);
  CHECK(*printed[5] != nu[5]);
}

TEST_CASE("spring quadratic forms are independent of omega") {
  oracle::Rng rng(53);
  const auto mc = MassConfig::finite(rng.masses());
  auto gp = random_gauge(rng);
  const auto Q = spring_quadratic_forms(mc);
  const auto a = forward_spring_map(mc, gp).nu;
  gp.omega *= 3;
  const auto b = forward_spring_map(mc, gp).nu;
  for (int k = 0; k < kVars; ++k) {
    Rational s = 0;
    for (int i = 0; i < kVars; ++i)
      for (int j = 0; j < kVars; ++j) s += gp.g[i] * Q[k](i, j) * gp.g[j];
    CHECK(s == a[k]);
    CHECK(a[k] == b[k]);
  }
}

TEST_CASE("inverse spring map: round trip, negative root, no convergence") {
  oracle::Rng rng(59);
  for (int t = 0; t < 5; ++t) {
    const auto mc = MassConfig::finite(rng.masses());
    const auto gp = random_gauge(rng);
    const auto nu = forward_spring_map(mc, gp).nu;
    std::array<double, kVars> target{}, seed{};
    for (int k = 0; k < kVars; ++k) {
      target[k] = to_double(nu[k]);
      seed[k] = 1.05 * to_double(gp.g[k]);
    }
    const auto r = inverse_spring_map(mc, target, seed);
    CHECK(r.residual < 1e-10);
    CHECK(r.verdict == InverseVerdict::ok);
    for (int k = 0; k < kVars; ++k) CHECK(std::abs(r.gauge[k] - to_double(gp.g[k])) < 1e-8);
  }
  std::array<double, kVars> neg{1, 1, 1, 1, 1, -7.0 / 8}, ones{1, 1, 1, 1, 1, 1};
  const auto r = inverse_spring_map(MassConfig::equal(1), neg, ones);
  CHECK(r.verdict == InverseVerdict::negative_root);
  std::array<double, kVars> bad{1, 1, 1, 1, 1, -50};
  try {
    inverse_spring_map(MassConfig::equal(1), bad, ones);
    FAIL("expected NoConvergence");
  } catch (const NoConvergence& e) {
    CHECK(e.last_iterate.size() == kVars);
    CHECK(e.residual > 0);
  }
}

TEST_CASE("gauge validation") {
  GaugeParams gp;
  gp.g[2] = -1;
  CHECK_THROWS_AS(ground_state_data(MassConfig::equal(1), gp, 3), NonNormalizable);
  const auto mol = make_model(Variant::molecular, MassConfig::equal(1), 1);
  CHECK_THROWS_AS(build_special(mol, GaugeParams{}, 3), BadLimit);
  CHECK(parse_variant("three-center") == Variant::three_center);
  CHECK_THROWS_AS(parse_variant("ionic"), ConfigError);
}

TEST_CASE("special variants: limits and ground energies") {
  for (auto v : {Variant::atomic, Variant::molecular, Variant::three_center}) {
    const auto sm = make_model(v, MassConfig::equal(1), Rational(3, 2));
    GaugeParams gp;
    for (int k : sm.classical) gp.g[k] = 0;
    CHECK(build_special(sm, gp, 3)(Polynomial(1)).is_zero());
    const auto a = limit_oracle(sm, gp, 3, Rational(1, 100));
    const auto b = limit_oracle(sm, gp, 3, Rational(1, 10000));
    CHECK(a.structural_match);
    CHECK(b.structural_match);
    CHECK(b.max_scaled_diff <= a.max_scaled_diff + 1);
  }
  // molecular: E0(rho12) = omega d (b+c+e+f+g) + 2 m omega^2 (be+cf) rho12
  const Rational m = 2;
  const auto sm = make_model(Variant::molecular, MassConfig::equal(m), m);
  GaugeParams gp;
  gp.g = {0, 1, 2, 3, 4, 5};
  gp.omega = Rational(3, 2);
  for (const Rational r : {Rational(0), Rational(1, 3), Rational(2)}) {
    Point cl{};
    cl[0] = r;
    const Rational want = gp.omega * 3 * 15 + 2 * m * gp.omega * gp.omega * (1 * 3 + 2 * 4) * r;
    CHECK(special_ground_energy(sm, gp, 3, cl) == want);
  }
  CHECK(ground_state_data(sm.masses, gp, 3).E0 == gp.omega * 3 * 15);
}
