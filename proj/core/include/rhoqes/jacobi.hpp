#pragma once

#include "rhoqes/rational.hpp"

#include <array>
#include <vector>

namespace rhoqes {

struct ParticleSystem {
  std::array<Rational, 4> masses{1, 1, 1, 1};
  std::array<std::vector<Rational>, 4> positions;  // four d-vectors
};

struct JacobiVectors {
  std::vector<double> R0;
  std::array<std::vector<double>, 3> rJ;
};
JacobiVectors jacobi_vectors(const ParticleSystem& ps);

// Row i of the coefficient matrix is sqrt(scale2[i]) * coeff[i]; row 0 is R0.
struct JacobiMatrix {
  std::array<Rational, 4> scale2;
  std::array<std::array<Rational, 4>, 4> coeff;
  std::array<std::array<double, 4>, 4> numeric() const;
};
JacobiMatrix jacobi_matrix(const std::array<Rational, 4>& masses);

struct KineticCheck {
  std::array<Rational, 4> diagonal;  // (A diag(1/m) A^T)_ii, exact
  bool diagonal_unit = false;
  bool off_diagonal_exact_zero = false;  // inner sums over Q vanish
  double max_off_diagonal = 0;           // float product
};
KineticCheck kinetic_diagonalization_check(const std::array<Rational, 4>& masses);

// |sum m_i r_i^2 - |R0|^2 - sum |rJ_j|^2|
double quadratic_form_error(const ParticleSystem& ps);

// sum m_i r_i^2 expressed in (R0, rJ): the coefficient of |rJ_j|^2 and the largest cross term.
struct MomentOfInertiaForm {
  std::array<double, 3> coefficients{};
  double max_cross = 0;
  double mu_claim = 0;  // (m1 m2 m3 m4 / M)^{1/3}
};
MomentOfInertiaForm moment_of_inertia_form(const std::array<Rational, 4>& masses);

// omega sum sqrt(A_i) (4 n_i + d)
double jacobi_spectrum(const std::array<Rational, 3>& A, const Rational& omega, const Rational& d,
                       const std::array<int, 3>& n);

// Level n of -f'' - (d-1)/r f' + A omega^2 r^2 f on [0, R] by finite volumes with
// Richardson extrapolation over two grids.
double radial_oracle(const Rational& A, const Rational& omega, const Rational& d, int n, int cells = 2000);

}  // namespace rhoqes
