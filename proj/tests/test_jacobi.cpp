#include "oracles.hpp"

#include "rhoqes/jacobi.hpp"

#include <doctest.h>

#include <cmath>

using namespace rhoqes;

TEST_CASE("kinetic term is diagonalized") {
  oracle::Rng rng(91);
  for (int t = 0; t < 20; ++t) {
    const auto k = kinetic_diagonalization_check(rng.masses());
    CHECK(k.diagonal_unit);
    CHECK(k.off_diagonal_exact_zero);
    CHECK(k.max_off_diagonal < 1e-12);
  }
}

TEST_CASE("Jacobi vectors: R0 is the scaled centre of mass") {
  ParticleSystem ps;
  ps.masses = {1, 2, 3, 4};
  ps.positions = {std::vector<Rational>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const auto jv = jacobi_vectors(ps);
  // sqrt(M) * sum m_i r_i / M
  const double s = std::sqrt(10.0);
  CHECK(std::abs(jv.R0[0] - 5 / s) < 1e-12);
  CHECK(std::abs(jv.R0[1] - 6 / s) < 1e-12);
  CHECK(std::abs(jv.R0[2] - 7 / s) < 1e-12);
  CHECK(quadratic_form_error(ps) < 1e-12);
}

TEST_CASE("moment of inertia form has unit coefficients") {
  for (const auto& m : {std::array<Rational, 4>{1, 1, 1, 1}, std::array<Rational, 4>{1, 2, 3, 4}}) {
    const auto f = moment_of_inertia_form(m);
    for (double c : f.coefficients) CHECK(std::abs(c - 1) < 1e-12);
    CHECK(f.max_cross < 1e-12);
  }
  CHECK(std::abs(moment_of_inertia_form({1, 1, 1, 1}).mu_claim - std::cbrt(0.25)) < 1e-12);
}

TEST_CASE("radial oracle matches the oscillator levels") {
  // -f'' - (d-1)/r f' + A w^2 r^2 f: levels w sqrt(A) (4n + d)
  CHECK(std::abs(radial_oracle(1, 1, 3, 0) - 3) < 1e-6);
  CHECK(std::abs(radial_oracle(4, 1, 3, 1) - 14) < 1e-6);
  CHECK(std::abs(radial_oracle(Rational(9, 4), Rational(2, 3), Rational(7, 2), 2) - 1.5 * (2.0 / 3) * (4 * 2 + 3.5)) < 1e-6);
  CHECK(std::abs(jacobi_spectrum({1, 4, 9}, 1, 3, {0, 1, 0}) - (3 + 14 + 9)) < 1e-12);
}
