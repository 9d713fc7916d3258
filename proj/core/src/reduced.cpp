#include "rhoqes/reduced.hpp"

#include "rhoqes/oscillator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "rhoqes/errors.hpp"

namespace rhoqes {

namespace {

Polynomial heron(int a, int b, int c) {
  const Polynomial x = Polynomial::var(a), y = Polynomial::var(b), z = Polynomial::var(c);
  return Rational(2) * (x * z + y * z + x * y) - x * x - y * y - z * z;
}

Polynomial gram(const DiffOperator& lap, const Polynomial& f, const Polynomial& g) {
  return (lap(f * g) - f * lap(g) - g * lap(f)) * Rational(1, 2);
}

// a + b sqrt(D)
struct Surd {
  Rational a, b;
};
Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
Surd mul(const Surd& x, const Surd& y, const Rational& D) {
  return {x.a * y.a + x.b * y.b * D, x.a * y.b + x.b * y.a};
}

const Polynomial kP = Polynomial::var(kSlotP);

}  // namespace

VolumeVars volume_vars(const MassConfig& mc) {
  if (mc.infinite_count() > 0) throw BadLimit("volume variables need finite masses");
  VolumeVars vv;
  std::array<Rational, kVars> w;
  const Rational M = mc.total();
  for (int k = 0; k < kVars; ++k) w[k] = mc.mass(kPairs[k].first) * mc.mass(kPairs[k].second) / M;
  vv.P = Polynomial::linear(w);
  // face omitting particle q, weighted by the product of the other three masses
  for (int q = 3; q >= 0; --q) {
    Rational weight = 1;
    for (int i = 0; i < 4; ++i)
      if (i != q) weight *= mc.mass(i);
    const auto& f = kFaces[q];
    vv.S += weight * heron(f[0], f[1], f[2]);
  }
  return vv;
}

DiffOperator build_delta_P(const Rational& d) {
  return DiffOperator::dd(kSlotP, kSlotP, Rational(2) * kP) + DiffOperator::d(kSlotP, Polynomial(3 * d));
}

DiffOperator build_delta_PS(const MassConfig& mc, const Rational& d) {
  const Rational M = mc.total();
  const Polynomial S = Polynomial::var(kSlotS);
  DiffOperator op = DiffOperator::dd(kSlotP, kSlotP, Rational(2) * kP);
  op += DiffOperator::dd(kSlotS, kSlotS, 8 * M * kP * S);
  op += DiffOperator::d(kSlotS, 8 * M * (d - 1) * kP);
  op += DiffOperator::d(kSlotP, Polynomial(3 * d));
  return op;
}

std::vector<ReductionCheck> reduction_check(const MassConfig& mc, const Rational& d, const DiffOperator& reduced,
                                            const std::vector<MultiIndex>& monomials) {
  const VolumeVars vv = volume_vars(mc);
  const DiffOperator lap = build_delta_rad(mc, d);
  const std::vector<Polynomial> images{vv.P, vv.S};
  std::vector<ReductionCheck> out;
  for (const auto& m : monomials) {
    const Polynomial f = Polynomial::monomial(m);
    ReductionCheck rc;
    rc.monomial = m;
    rc.residual = lap(f.compose(images)) - reduced(f).compose(images);
    rc.exact = rc.residual.is_zero();
    out.push_back(std::move(rc));
  }
  return out;
}

ChainRule chain_rule(const MassConfig& mc, const Rational& d) {
  const VolumeVars vv = volume_vars(mc);
  const DiffOperator lap = build_delta_rad(mc, d);
  const Rational M = mc.total();
  ChainRule cr;
  cr.g_pp = gram(lap, vv.P, vv.P);
  cr.g_ps = gram(lap, vv.P, vv.S);
  cr.g_ss = gram(lap, vv.S, vv.S);
  cr.lap_p = lap(vv.P);
  cr.lap_s = lap(vv.S);
  cr.g_pp_closes = cr.g_pp == Rational(2) * vv.P;
  cr.g_ps_closes = cr.g_ps == Rational(4) * vv.S;
  cr.lap_p_closes = cr.lap_p == Polynomial(3 * d);
  cr.lap_s_closes = cr.lap_s == 8 * M * (d - 1) * vv.P;

  const Polynomial rest = cr.g_ss - 8 * M * vv.P * vv.S;
  const Polynomial v4 = v4_squared_poly();
  const auto& [mono, c] = *v4.terms().begin();
  const Rational k = rest.coeff(mono) / c;
  if (rest == k * v4) cr.g_ss_v4_factor = k;
  return cr;
}

Polynomial chain_rule_apply(const ChainRule& cr, const VolumeVars& vv, const Polynomial& f) {
  const std::vector<Polynomial> images{vv.P, vv.S};
  auto at = [&](const Polynomial& g) { return g.compose(images); };
  const Polynomial fp = partial_derivative(f, kSlotP), fs = partial_derivative(f, kSlotS);
  const Polynomial fpp = partial_derivative(fp, kSlotP), fps = partial_derivative(fp, kSlotS),
                   fss = partial_derivative(fs, kSlotS);
  return at(fpp) * cr.g_pp + Rational(2) * at(fps) * cr.g_ps + at(fss) * cr.g_ss + at(fp) * cr.lap_p +
         at(fs) * cr.lap_s;
}

DiffOperator sl2_plus(const Rational& N) {
  return DiffOperator::d(kSlotP, kP * kP) - DiffOperator::multiplication(N * kP);
}
DiffOperator sl2_zero(const Rational& N) {
  return DiffOperator::d(kSlotP, Rational(2) * kP) - DiffOperator::multiplication(Polynomial(N));
}
DiffOperator sl2_minus() { return DiffOperator::d(kSlotP); }

DiffOperator h_qes(const Rational& A, const Rational& omega, const Rational& d, int N) {
  const Rational n = N;
  DiffOperator h = -(sl2_minus() * sl2_zero(n));
  h -= (3 * d + n - 2) * sl2_minus();
  h += 4 * A * sl2_plus(n);
  h += 2 * omega * sl2_zero(n);
  h += DiffOperator::multiplication(Polynomial(2 * n * omega));
  return h;
}

DiffOperator h_qes_gauge_form(const Rational& A, const Rational& omega, const Rational& d, int N) {
  DiffOperator h = -build_delta_P(d);
  h += DiffOperator::d(kSlotP, Rational(4) * kP * (A * kP + Polynomial(omega)));
  h -= DiffOperator::multiplication(4 * Rational(N) * A * kP);
  return h;
}

Rational qes_v0(const Rational& A, const Rational& omega, const Rational& d, const Rational& P) {
  return 3 * (d - 1) * (3 * d - 1) / (8 * P) + 2 * omega * omega * P +
         A * (2 * A * P * P * P + 4 * P * P * omega - P * (3 * d + 2));
}

Rational qes_potential_displayed(const Rational& A, const Rational& omega, const Rational& d, int N,
                                 const Rational& P) {
  return 3 * (d - 1) * (3 * d - 1) / (8 * P) + 2 * omega * omega * P +
         A * (2 * A * P * P * P + 4 * P * P * omega - P * (3 * d + 2 - 4 * N)) + 2 * N * omega;
}

Rational qes_potential_derived(const Rational& A, const Rational& omega, const Rational& d, int N,
                               const Rational& P) {
  return qes_v0(A, omega, d, P) - 4 * N * A * P;
}

Rational lb_action_over_psi0(const Polynomial& p, const Rational& A, const Rational& omega, const Rational& d,
                             const Rational& V, const Rational& P) {
  if (P <= 0) throw SingularPoint("P must be positive");
  Point x{};
  x[kSlotP] = P;
  const Rational s = (3 * d - 1) / 4;
  const Rational L = s / P - omega - A * P;
  const Rational dL = -s / (P * P) - A;
  const Rational p0 = p.eval(x), p1 = partial_derivative(p, kSlotP).eval(x),
                 p2 = partial_derivative(p, kSlotP, 2).eval(x);
  const Rational f1 = p1 + p0 * L;
  const Rational f2 = p2 + 2 * p1 * L + p0 * (L * L + dL);
  return -(2 * P * f2 + f1) + V * p0;
}

QesModel qes_model(const Rational& A, const Rational& omega, const Rational& d, int N) {
  QesModel q;
  q.N = N;
  const OperatorMatrix om = matrix_on_basis(h_qes(A, omega, d, N), N, mask_of({kSlotP}));
  q.matrix = om.entries;
  q.charpoly = charpoly(q.matrix);
  const std::size_t n = q.matrix.rows();
  const auto flat = q.matrix.to_doubles();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = flat[i * n + j];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXcd vals = es.eigenvalues();
  const Eigen::MatrixXcd vecs = es.eigenvectors();
  const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    const Eigen::VectorXcd v = vecs.col(k);
    q.residual = std::max(q.residual, (mc * v - vals(k) * v).norm() / v.norm());
    q.max_imag = std::max(q.max_imag, std::abs(vals(k).imag()));
    q.eigen_real.push_back(vals(k).real());
  }
  std::sort(q.eigen_real.begin(), q.eigen_real.end());
  return q;
}

QesExactN1 qes_exact_n1(const Rational& A, const Rational& omega, const Rational& d) {
  QesExactN1 out;
  out.discriminant = 4 * omega * omega + 12 * d * A;
  const QMatrix m = qes_model(A, omega, d, 1).matrix;
  const Rational D = out.discriminant;
  out.eigen_equations_hold = true;
  for (int sign : {1, -1}) {
    const Surd lam{2 * omega, Rational(sign)};
    const Surd v0{3 * d, 0}, v1 = Surd{0, 0} - lam;
    for (int r = 0; r < 2; ++r) {
      const Surd lhs = mul({m(r, 0), 0}, v0, D) + mul({m(r, 1), 0}, v1, D);
      const Surd rhs = mul(lam, r == 0 ? v0 : v1, D);
      const Surd diff = lhs - rhs;
      if (diff.a != 0 || diff.b != 0) out.eigen_equations_hold = false;
    }
  }
  return out;
}

LaguerreSolution es_laguerre(const Rational& d, const Rational& omega, int N) {
  if (N < 0) throw ConfigError("N must be non-negative");
  const Rational alpha = (3 * d - 2) / 2;
  const Polynomial x = 2 * omega * kP;
  Polynomial prev(1), cur = Polynomial(1 + alpha) - x;
  if (N == 0) cur = prev;
  for (int k = 1; k < N; ++k) {
    Polynomial next = (Polynomial(2 * k + 1 + alpha) - x) * cur - (k + alpha) * prev;
    next *= Rational(1, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  LaguerreSolution out;
  out.poly = cur;
  out.energy = (3 * d + 4 * N) * omega;
  const DiffOperator h = -build_delta_P(d) + DiffOperator::d(kSlotP, 4 * omega * kP);
  out.residual_zero = (h(cur) - 4 * N * omega * cur).is_zero();
  return out;
}

GaugeCheck gauge_check(const Rational& d) {
  GaugeCheck g;
  const Rational s = -(3 * d - 1) / 4;
  const DiffOperator lap = build_delta_P(d);
  Point x{};
  x[kSlotP] = Rational(3, 2);
  const Rational c2 = lap.coeff(MultiIndex::unit(kSlotP, 2)).eval(x);
  const Rational c1 = lap.coeff(MultiIndex::unit(kSlotP)).eval(x);
  g.first_order = c1 + 2 * c2 * s / x[kSlotP];
  g.potential_coeff = -apply_to_power_product(lap, {{kP, s}}, x) * x[kSlotP];
  g.matches_u_eff = g.first_order == 1 && g.potential_coeff == 3 * (d - 1) * (3 * d - 1) / 8;
  return g;
}

}  // namespace rhoqes
