#include "oracles.hpp"

#include "rhoqes/oscillator.hpp"
#include "rhoqes/reduced.hpp"

#include <doctest.h>

#include <cmath>

using namespace rhoqes;

namespace {

MultiIndex ps(int j, int k) {
  MultiIndex m;
  m.e[kSlotP] = static_cast<std::uint8_t>(j);
  m.e[kSlotS] = static_cast<std::uint8_t>(k);
  return m;
}

Polynomial P_poly(int k) { return Polynomial::monomial(MultiIndex::unit(kSlotP, k)); }

Point at_P(const Rational& P) {
  Point x{};
  x[kSlotP] = P;
  return x;
}

}  // namespace

TEST_CASE("volume variables") {
  Point one;
  one.fill(Rational(1));
  const auto vv = volume_vars(MassConfig::equal(1));
  CHECK(vv.P.eval(one) == Rational(3, 2));
  CHECK(vv.S.eval(one) == 12);
  // P is the moment of inertia about the centre of mass: sum m_i m_j rho_ij / M
  oracle::Rng rng(81);
  const auto m = rng.masses();
  const auto mc = MassConfig::finite(m);
  const auto c = oracle::random_config(rng, 3);
  Rational M = 0;
  std::vector<Rational> cm(3, Rational(0));
  for (int i = 0; i < 4; ++i) {
    M += m[i];
    for (int t = 0; t < 3; ++t) cm[t] += m[i] * c[i][t];
  }
  for (auto& x : cm) x /= M;
  Rational I = 0;
  for (int i = 0; i < 4; ++i) {
    const auto r = oracle::sub(c[i], cm);
    I += m[i] * oracle::dot(r, r);
  }
  CHECK(volume_vars(mc).P.eval(oracle::rho_of(c)) == I);
}

TEST_CASE("chain rule closes for P, not for S") {
  oracle::Rng rng(83);
  const auto mc = MassConfig::finite(rng.masses());
  const auto cr = chain_rule(mc, Rational(7, 2));
  CHECK(cr.g_pp_closes);
  CHECK(cr.g_ps_closes);
  CHECK(cr.lap_p_closes);
  CHECK(cr.lap_s_closes);
  REQUIRE(cr.g_ss_v4_factor);
  CHECK(*cr.g_ss_v4_factor == 3456 * mc.product() * mc.total());
  const auto vv = volume_vars(mc);
  const auto lap = build_delta_rad(mc, Rational(7, 2));
  for (const auto& m : {ps(0, 2), ps(1, 1), ps(3, 0), ps(2, 1)}) {
    const auto f = Polynomial::monomial(m);
    CHECK(chain_rule_apply(cr, vv, f) == lap(f.compose({vv.P, vv.S})));
  }
}

TEST_CASE("Delta_P is exact on the P-line; the displayed Delta_PS is not complete") {
  const auto mc = MassConfig::finite({1, 2, 3, 4});
  std::vector<MultiIndex> pl;
  for (int k = 0; k <= 5; ++k) pl.push_back(ps(k, 0));
  for (const auto& r : reduction_check(mc, 3, build_delta_P(3), pl)) CHECK(r.exact);
  const auto rc = reduction_check(mc, 3, build_delta_PS(mc, 3), {ps(1, 0), ps(0, 1), ps(0, 2), ps(1, 1)});
  CHECK(rc[0].exact);
  CHECK(rc[1].exact);
  CHECK_FALSE(rc[2].exact);
  CHECK_FALSE(rc[3].exact);
}

TEST_CASE("sl(2) realization") {
  const Rational N = 4;
  const auto jp = sl2_plus(N), j0 = sl2_zero(N), jm = sl2_minus();
  CHECK(commutator(jm, jp) == j0);
  CHECK(commutator(j0, jp) == Rational(2) * jp);
  CHECK(commutator(j0, jm) == Rational(-2) * jm);
  CHECK(jp(P_poly(4)).is_zero());
}

TEST_CASE("QES operator: gauge form, flag, eigenvalues") {
  const Rational A(1, 2), w(1), d(3);
  for (int N = 0; N <= 5; ++N) {
    CHECK(h_qes(A, w, d, N) == h_qes_gauge_form(A, w, d, N));
    const auto q = qes_model(A, w, d, N);
    CHECK(q.flag_preserved);
    CHECK(q.eigen_real.size() == static_cast<std::size_t>(N + 1));
    CHECK(q.residual < 1e-8);
    CHECK(q.max_imag < 1e-9);
  }
  const auto n1 = qes_exact_n1(A, w, d);
  CHECK(n1.discriminant == 22);
  CHECK(n1.eigen_equations_hold);
  const auto q1 = qes_model(A, w, d, 1);
  CHECK(std::abs(q1.eigen_real[0] - (2 - std::sqrt(22.0))) < 1e-9);
  CHECK(std::abs(q1.eigen_real[1] - (2 + std::sqrt(22.0))) < 1e-9);
}

TEST_CASE("A = 0: upper triangular with levels 4 omega k") {
  const auto q = qes_model(0, Rational(3, 2), 5, 4);
  CHECK(q.matrix.is_upper_triangular());
  for (int k = 0; k <= 4; ++k) CHECK(q.matrix(k, k) == 6 * k);
}

TEST_CASE("Laguerre eigenpolynomials: (3d+4N) omega") {
  for (const Rational d : {Rational(3), Rational(7, 2)})
    for (int N = 0; N <= 10; ++N) {
      const auto l = es_laguerre(d, Rational(2, 3), N);
      CHECK(l.residual_zero);
      CHECK(l.energy == (3 * d + 4 * N) * Rational(2, 3));
      CHECK(l.poly.degree() == N);
    }
  // L_1^{(7/2)}(2P) = 9/2 - 2P at d = 3, omega = 1
  CHECK(es_laguerre(3, 1, 1).poly == Polynomial(Rational(9, 2)) - Rational(2) * Polynomial::var(kSlotP));
}

TEST_CASE("Laplace-Beltrami form: derived potential reproduces h_qes, displayed does not") {
  const Rational A(1, 2), w(1), d(3);
  for (int N = 0; N <= 2; ++N)
    for (int k = 0; k <= N; ++k)
      for (const Rational P : {Rational(1, 3), Rational(2)}) {
        const auto p = P_poly(k);
        const Rational h = h_qes(A, w, d, N)(p).eval(at_P(P));
        const Rational base = 3 * d * w * p.eval(at_P(P));
        CHECK(lb_action_over_psi0(p, A, w, d, qes_potential_derived(A, w, d, N, P), P) - base == h);
        const bool displayed =
            lb_action_over_psi0(p, A, w, d, qes_potential_displayed(A, w, d, N, P), P) - base == h;
        if (N == 0) CHECK(displayed);
        else CHECK_FALSE(displayed);
      }
}

TEST_CASE("gauge rotation removes the first-order term") {
  for (const Rational d : {Rational(1), Rational(3), Rational(5, 2)}) {
    const auto g = gauge_check(d);
    CHECK(g.first_order == 1);
    CHECK(g.matches_u_eff);
    CHECK(g.potential_coeff == 3 * (d - 1) * (3 * d - 1) / 8);
  }
}
