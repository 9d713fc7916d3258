#include "rhoqes/geometry.hpp"

#include "rhoqes/diffop.hpp"
#include "rhoqes/errors.hpp"
#include "rhoqes/oscillator.hpp"

namespace rhoqes {

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < kVars; ++k)
    if (kPairs[k].first == i && kPairs[k].second == j) return k;
  throw std::invalid_argument("no such particle pair");
}

MassConfig MassConfig::finite(const std::array<Rational, 4>& m) {
  MassConfig mc;
  for (int i = 0; i < 4; ++i) {
    if (m[i] <= 0) throw ConfigError("masses must be positive");
    mc.inv_m[i] = 1 / m[i];
  }
  return mc;
}

int MassConfig::infinite_count() const {
  int n = 0;
  for (int i = 0; i < 4; ++i) n += infinite(i);
  return n;
}

Rational MassConfig::mass(int i) const {
  if (infinite(i)) throw BadLimit("mass " + std::to_string(i + 1) + " is infinite");
  return 1 / inv_m[i];
}

Rational MassConfig::mu(int k) const {
  if (!mu_defined(k)) throw BadLimit("reduced mass of an infinite pair");
  return 1 / inv_mu(k);
}

Rational MassConfig::total() const {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += mass(i);
  return s;
}

Rational MassConfig::product() const {
  Rational p = 1;
  for (int i = 0; i < 4; ++i) p *= mass(i);
  return p;
}

Rational MassConfig::cm() const {
  Rational p = product();
  return total() / (p * p);
}

Rational heron_s2(const Rational& a, const Rational& b, const Rational& c) {
  return (2 * (a * b + a * c + b * c) - (a * a + b * b + c * c)) / 16;
}

Polynomial heron_s2_poly(int ka, int kb, int kc) {
  Polynomial a = Polynomial::var(ka), b = Polynomial::var(kb), c = Polynomial::var(kc);
  return (Rational(2) * (a * b + a * c + b * c) - (a * a + b * b + c * c)) * Rational(1, 16);
}

Polynomial v4_squared_poly() {
  using enum Var;
  auto r = [](Var v) { return Polynomial::var(v); };
  Polynomial p12 = r(r12), p13 = r(r13), p14 = r(r14), p23 = r(r23), p24 = r(r24), p34 = r(r34);
  Polynomial inner = ((p13 + p14 + p23 + p24) * p34 - (p13 - p14) * (p23 - p24) - p34 * p34) * p12;
  inner -= p13 * p13 * p24;
  inner -= p34 * p12 * p12;
  inner += p23 * ((p14 - p24) * p34 - p14 * (p14 + p23 - p24));
  inner += p13 * (p14 * (p23 + p24 - p34) + p24 * (p23 - p24 + p34));
  return inner * Rational(1, 144);
}

Rational v4_squared(const Point& x) {
  static const Polynomial v4 = v4_squared_poly();
  return v4.eval(x);
}

Rational cayley_menger_v4_squared(const Point& x) {
  QMatrix cm(5, 5);
  for (int i = 1; i < 5; ++i) {
    cm(0, i) = 1;
    cm(i, 0) = 1;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Rational& d = x[pair_index(i, j)];
      cm(i + 1, j + 1) = d;
      cm(j + 1, i + 1) = d;
    }
  return determinant(cm) / 288;
}

std::string to_string(Domain d) {
  switch (d) {
    case Domain::interior: return "interior";
    case Domain::boundary: return "boundary";
    case Domain::exterior: return "exterior";
  }
  return "?";
}

Domain domain_check(const Point& x) {
  bool edge = false;
  for (const auto& r : x) {
    if (r < 0) return Domain::exterior;
    if (r == 0) edge = true;
  }
  for (const auto& f : kFaces) {
    Rational s = heron_s2(x[f[0]], x[f[1]], x[f[2]]);
    if (s < 0) return Domain::exterior;
    if (s == 0) edge = true;
  }
  Rational v = v4_squared(x);
  if (v < 0) return Domain::exterior;
  if (v == 0) edge = true;
  return edge ? Domain::boundary : Domain::interior;
}

std::vector<std::vector<Polynomial>> cometric_poly(const MassConfig& mc) {
  std::vector<std::vector<Polynomial>> g(kVars, std::vector<Polynomial>(kVars));
  for (int k = 0; k < kVars; ++k) g[k][k] = Polynomial::var(k) * (2 * mc.inv_mu(k));
  for (int k = 0; k < kVars; ++k)
    for (int l = k + 1; l < kVars; ++l) {
      auto [a, b] = kPairs[k];
      auto [c, e] = kPairs[l];
      int shared = -1, p = -1, q = -1;
      if (a == c) shared = a, p = b, q = e;
      else if (a == e) shared = a, p = b, q = c;
      else if (b == c) shared = b, p = a, q = e;
      else if (b == e) shared = b, p = a, q = c;
      if (shared < 0) continue;
      Polynomial entry = (Polynomial::var(k) + Polynomial::var(l) - Polynomial::var(pair_index(p, q))) *
                         mc.inv_m[shared];
      g[k][l] = entry;
      g[l][k] = entry;
    }
  return g;
}

QMatrix cometric(const MassConfig& mc, const Point& x) {
  auto g = cometric_poly(mc);
  QMatrix out(kVars, kVars);
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) out(i, j) = g[i][j].eval(x);
  return out;
}

Polynomial sum_v2m_poly(const MassConfig& mc) {
  Polynomial s;
  for (int k = 0; k < kVars; ++k)
    s += Polynomial::var(k) * (mc.mass(kPairs[k].first) * mc.mass(kPairs[k].second));
  return s;
}

Polynomial sum_v3m_poly(const MassConfig& mc) {
  Polynomial s;
  for (int p = 0; p < 4; ++p) s += heron_s2_poly(kFaces[p][0], kFaces[p][1], kFaces[p][2]) * mc.inv_m[p];
  return s;
}

Polynomial displayed_det_poly(const MassConfig& mc) {
  Polynomial v4 = v4_squared_poly();
  return v4 * (sum_v2m_poly(mc) * sum_v3m_poly(mc) - v4 * (9 * mc.total())) * (9216 * mc.cm());
}

Polynomial cometric_det_poly(const MassConfig& mc) { return determinant(cometric_poly(mc)); }

DetIdentity det_identity_check(const MassConfig& mc, const Point& x) {
  DetIdentity r;
  r.lhs = determinant(cometric(mc, x));
  Rational v4 = v4_squared(x);
  r.rhs = 9216 * mc.cm() * v4 *
          (sum_v2m_poly(mc).eval(x) * sum_v3m_poly(mc).eval(x) - 9 * mc.total() * v4);
  r.equal = r.lhs == r.rhs;
  return r;
}

VeffEvaluation gauge_factor_and_veff(const MassConfig& mc, const Rational& d, const Point& x) {
  const Polynomial v4 = v4_squared_poly();
  const Polynomial D = cometric_det_poly(mc);
  const Rational v4x = v4.eval(x), Dx = D.eval(x);
  if (v4x <= 0 || Dx <= 0) throw SingularPoint("gauge factor requires an interior point");

  const DiffOperator lap = build_delta_rad(mc, d);
  VeffEvaluation r;
  r.oracle_literal = -apply_to_power_product(
      lap, {{D, Rational(-1, 4)}, {v4, (1 - d / 4) / 2}}, x);
  r.oracle_measure = -apply_to_power_product(lap, {{D, Rational(-1, 4)}, {v4, (4 - d) / 4}}, x);

  const Rational M = mc.total(), pm = mc.product();
  const Rational s2 = sum_v2m_poly(mc).eval(x), s3 = sum_v3m_poly(mc).eval(x);
  Rational s2sq = 0;
  for (int k = 0; k < kVars; ++k) {
    Rational t = mc.mass(kPairs[k].first) * mc.mass(kPairs[k].second) * x[k];
    s2sq += t * t;
  }
  const Rational den = 32 * pm * (s2 * s3 - 9 * M * v4x);
  r.second_term = (d - 5) * (d - 3) * s3 / (72 * v4x);
  r.transcribed = (3 * s2 * s2 + 28 * M * pm * s3) / den + r.second_term;
  r.alt_sum_of_squares = (3 * s2sq + 28 * M * pm * s3) / den + r.second_term;
  r.alt_unsquared = (3 * s2 + 28 * M * pm * s3) / den + r.second_term;
  return r;
}

RadialMeasure radial_measure(const Rational& d, const Point& x) {
  RadialMeasure r;
  r.base = v4_squared(x);
  if (r.base <= 0) throw SingularPoint("radial measure requires V4^2 > 0");
  r.exponent = (d - 4) / 2;
  if (r.exponent.get_den() == 1) r.value = pow(r.base, r.exponent.get_num().get_si());
  return r;
}

MassConfig special_masses(SpecialVariant v, const Rational& m) {
  MassConfig mc = MassConfig::equal(m);
  const int heavy = v == SpecialVariant::atomic ? 1 : v == SpecialVariant::molecular ? 2 : 3;
  for (int i = 0; i < heavy; ++i) mc.inv_m[i] = 0;
  return mc;
}

std::vector<int> dynamical_variables(SpecialVariant v) {
  switch (v) {
    case SpecialVariant::atomic: return {0, 1, 2, 3, 4, 5};
    case SpecialVariant::molecular: return {1, 2, 3, 4, 5};
    case SpecialVariant::three_center: return {2, 4, 5};
  }
  return {};
}

SpecialDeterminant special_determinants(SpecialVariant v, const Rational& m, const Point& x) {
  SpecialDeterminant r;
  const Rational v4 = v4_squared(x);
  const auto dyn = dynamical_variables(v);
  r.direct = determinant(cometric(special_masses(v, m), x).submatrix(dyn, dyn));
  switch (v) {
    case SpecialVariant::atomic: {
      Rational faces = heron_s2(x[1], x[2], x[5]) + heron_s2(x[0], x[2], x[4]) + heron_s2(x[0], x[1], x[3]);
      r.displayed = 9216 / pow(m, 6) * v4 * ((x[0] + x[1] + x[2]) * faces - 9 * v4);
      break;
    }
    case SpecialVariant::molecular: {
      Rational g2 = 2 * x[0] * (x[1] + x[2] + x[3] + x[4] - x[0]) - (x[1] - x[3]) * (x[1] - x[3]) -
                    (x[2] - x[4]) * (x[2] - x[4]);
      r.displayed = 288 / pow(m, 5) * v4 * g2;
      break;
    }
    case SpecialVariant::three_center:
      r.displayed = 288 / pow(m, 3) * v4;
      break;
  }
  return r;
}

}  // namespace rhoqes
