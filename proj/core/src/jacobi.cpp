#include "rhoqes/jacobi.hpp"

#include "rhoqes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace rhoqes {

std::array<std::array<double, 4>, 4> JacobiMatrix::numeric() const {
  std::array<std::array<double, 4>, 4> a{};
  for (int i = 0; i < 4; ++i) {
    const double s = std::sqrt(scale2[i].get_d());
    for (int k = 0; k < 4; ++k) a[i][k] = s * coeff[i][k].get_d();
  }
  return a;
}

JacobiMatrix jacobi_matrix(const std::array<Rational, 4>& m) {
  for (const auto& x : m)
    if (x <= 0) throw ConfigError("masses must be positive");
  JacobiMatrix a;
  Rational M = 0;
  for (const auto& x : m) M += x;
  a.scale2[0] = 1 / M;
  for (int k = 0; k < 4; ++k) a.coeff[0][k] = m[k];
  Rational Mj = 0;
  for (int j = 1; j <= 3; ++j) {
    Mj += m[j - 1];
    const Rational Mj1 = Mj + m[j];
    a.scale2[j] = m[j] * Mj / Mj1;
    for (int k = 0; k < j; ++k) a.coeff[j][k] = -m[k] / Mj;
    a.coeff[j][j] = 1;
  }
  return a;
}

JacobiVectors jacobi_vectors(const ParticleSystem& ps) {
  const auto a = jacobi_matrix(ps.masses).numeric();
  const std::size_t d = ps.positions[0].size();
  for (const auto& r : ps.positions)
    if (r.size() != d) throw ConfigError("positions must share one dimension");
  JacobiVectors jv;
  std::array<std::vector<double>, 4> rows;
  for (int i = 0; i < 4; ++i) {
    rows[i].assign(d, 0.0);
    for (int k = 0; k < 4; ++k)
      for (std::size_t c = 0; c < d; ++c) rows[i][c] += a[i][k] * ps.positions[k][c].get_d();
  }
  jv.R0 = rows[0];
  for (int j = 0; j < 3; ++j) jv.rJ[j] = rows[j + 1];
  return jv;
}

KineticCheck kinetic_diagonalization_check(const std::array<Rational, 4>& m) {
  const JacobiMatrix a = jacobi_matrix(m);
  const auto an = a.numeric();
  KineticCheck kc;
  kc.diagonal_unit = true;
  kc.off_diagonal_exact_zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational inner = 0;
      double f = 0;
      for (int k = 0; k < 4; ++k) {
        inner += a.coeff[i][k] * a.coeff[j][k] / m[k];
        f += an[i][k] * an[j][k] / m[k].get_d();
      }
      if (i == j) {
        kc.diagonal[i] = a.scale2[i] * inner;
        if (kc.diagonal[i] != 1) kc.diagonal_unit = false;
      } else {
        if (inner != 0) kc.off_diagonal_exact_zero = false;
        kc.max_off_diagonal = std::max(kc.max_off_diagonal, std::abs(f));
      }
    }
  return kc;
}

double quadratic_form_error(const ParticleSystem& ps) {
  const JacobiVectors jv = jacobi_vectors(ps);
  auto norm2 = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
  };
  double lhs = 0;
  for (int i = 0; i < 4; ++i) {
    double r2 = 0;
    for (const auto& c : ps.positions[i]) r2 += c.get_d() * c.get_d();
    lhs += ps.masses[i].get_d() * r2;
  }
  double rhs = norm2(jv.R0);
  for (const auto& v : jv.rJ) rhs += norm2(v);
  return std::abs(lhs - rhs);
}

MomentOfInertiaForm moment_of_inertia_form(const std::array<Rational, 4>& m) {
  const auto an = jacobi_matrix(m).numeric();
  Eigen::Matrix4d a;
  Eigen::Vector4d mv;
  for (int i = 0; i < 4; ++i) {
    mv(i) = m[i].get_d();
    for (int k = 0; k < 4; ++k) a(i, k) = an[i][k];
  }
  const Eigen::Matrix4d ainv = a.inverse();
  const Eigen::Matrix4d form = ainv.transpose() * mv.asDiagonal() * ainv;
  MomentOfInertiaForm out;
  for (int j = 0; j < 3; ++j) out.coefficients[j] = form(j + 1, j + 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) out.max_cross = std::max(out.max_cross, std::abs(form(i, j)));
  out.mu_claim = std::cbrt(mv.prod() / mv.sum());
  return out;
}

double jacobi_spectrum(const std::array<Rational, 3>& A, const Rational& omega, const Rational& d,
                       const std::array<int, 3>& n) {
  double e = 0;
  for (int i = 0; i < 3; ++i) {
    if (A[i] < 0) throw ConfigError("spring constants must be non-negative");
    e += std::sqrt(A[i].get_d()) * (4 * n[i] + d.get_d());
  }
  return omega.get_d() * e;
}

namespace {

double fv_level(double lambda, double d, int n, int cells, double R) {
  const double h = R / cells;
  Eigen::VectorXd diag(cells), off(cells - 1);
  auto wt = [&](double r) { return std::pow(r, d - 1); };
  for (int i = 0; i < cells; ++i) {
    const double r = (i + 0.5) * h;
    const double w = wt(r);
    const double fm = i == 0 ? 0.0 : wt(i * h);
    const double fp = i == cells - 1 ? 2 * wt(R) : wt((i + 1) * h);
    diag(i) = (fm + fp) / (h * h * w) + lambda * lambda * r * r;
    if (i + 1 < cells) off(i) = -wt((i + 1) * h) / (h * h * std::sqrt(w * wt(r + h)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n);
}

}  // namespace

double radial_oracle(const Rational& A, const Rational& omega, const Rational& d, int n, int cells) {
  if (A <= 0 || omega <= 0) throw ConfigError("radial oracle needs A > 0 and omega > 0");
  if (n < 0 || n >= cells / 4) throw ConfigError("level index out of range");
  const double lambda = std::sqrt(A.get_d()) * omega.get_d();
  const double dd = d.get_d();
  const double R = std::sqrt((2 * std::log(1e14) + 2 * (4 * n + dd)) / lambda);
  const double coarse = fv_level(lambda, dd, n, cells, R);
  const double fine = fv_level(lambda, dd, n, 2 * cells, R);
  return (4 * fine - coarse) / 3;
}

}  // namespace rhoqes
