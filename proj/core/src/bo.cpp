#include "rhoqes/bo.hpp"

#include "rhoqes/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rhoqes {

namespace {

// gauge slots: a=12 b=13 c=14 e=23 f=24 g=34
Rational sum_bcef(const GaugeParams& gp) { return gp.g[1] + gp.g[2] + gp.g[3] + gp.g[4]; }
Rational prod_pairs(const GaugeParams& gp) { return gp.g[1] * gp.g[3] + gp.g[2] * gp.g[4]; }

}  // namespace

Rational bo_vibrational_square(const BOParams& p) {
  if (p.mu() <= 0) throw ConfigError("nuclear reduced mass must be positive");
  return ((p.b * p.e + p.c * p.f) * p.m + p.nu12) / p.mu();
}

double nuclear_ground_energy(const BOParams& p) {
  if (p.L != 0) throw ConfigError("only the L = 0 branch is implemented");
  const Rational X = bo_vibrational_square(p);
  if (X < 0) throw ConfigError("negative vibrational factor");
  const double wd = to_double(p.omega * p.d);
  return wd * to_double(p.b + p.c + p.e + p.f + p.g) + wd * std::sqrt(X.get_d());
}

BOParams bo_params_from_gauge(const GaugeParams& gp, const Rational& d, const Rational& m) {
  if (m <= 0) throw ConfigError("electron mass must be positive");
  const SpringMap sm = forward_spring_map(MassConfig::finite({1, 1, m, m}), gp, d);
  BOParams p;
  p.m1 = p.m2 = 1;
  p.m = m;
  p.b = gp.g[1];
  p.c = gp.g[2];
  p.e = gp.g[3];
  p.f = gp.g[4];
  p.g = gp.g[5];
  p.omega = gp.omega;
  p.d = d;
  p.nu12 = sm.nu[0];
  return p;
}

BOGap bo_gap(const GaugeParams& gp, const Rational& d, const Rational& m) {
  BOGap out;
  out.E0 = gp.omega * d * (gp.g[0] + gp.g[1] + gp.g[2] + gp.g[3] + gp.g[4] + gp.g[5]);
  if (m == 0) return out;
  const BOParams p = bo_params_from_gauge(gp, d, m);
  const Rational E0 = forward_spring_map(MassConfig::finite({1, 1, m, m}), gp, d).E0;
  if (E0 != out.E0) throw IdentityFailure("exact ground energy differs from omega d sum g");
  out.X = bo_vibrational_square(p);
  const Rational a = gp.g[0];
  const double wd = to_double(gp.omega * d);
  out.gap = wd * to_double(out.X - a * a) / (std::sqrt(out.X.get_d()) + a.get_d());
  return out;
}

double bo_c2_displayed(const GaugeParams& gp, const Rational& d) {
  const Rational a = gp.g[0], s = sum_bcef(gp), p = prod_pairs(gp);
  if (a == 0) throw ConfigError("the expansion needs a > 0");
  return to_double(-(gp.omega * d / 2) * (4 * (a * s - 4 * p) + s * s) / (4 * a));
}

BOExpansion bo_gap_expansion_check(const GaugeParams& gp, const Rational& d, std::vector<Rational> m_values) {
  if (m_values.size() < 2) throw ConfigError("need at least two electron masses");
  std::sort(m_values.begin(), m_values.end());
  BOExpansion ex;
  ex.m_values = m_values;
  for (const auto& m : m_values) ex.gaps.push_back(bo_gap(gp, d, m).gap);
  for (std::size_t i = 1; i < ex.gaps.size(); ++i)
    if (!(ex.gaps[i] > ex.gaps[i - 1])) throw NoFit("gap is not monotone in the electron mass");

  const std::size_t n = m_values.size();
  std::vector<double> m(n), G(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = m_values[i].get_d();
    G[i] = ex.gaps[i] / m[i];
  }
  const double d01 = (G[1] - G[0]) / (m[1] - m[0]);
  if (n >= 3) {
    // gap/m = c1 + c2 m + c3 m^2 through the three smallest masses
    const double d12 = (G[2] - G[1]) / (m[2] - m[1]);
    const double c3 = (d12 - d01) / (m[2] - m[0]);
    ex.c2 = d01 - c3 * (m[0] + m[1]);
    ex.leading = G[0] - m[0] * d01 + m[0] * m[1] * c3;
  } else {
    ex.c2 = d01;
    ex.leading = G[0] - m[0] * d01;
  }
  ex.leading_expected = to_double(gp.omega * d * sum_bcef(gp) / 2);
  ex.c2_expected = bo_c2_displayed(gp, d);
  ex.ratio = ex.gaps[n - 1] / ex.gaps[n - 2];
  ex.leading_ok = std::abs(ex.leading - ex.leading_expected) <= 0.01 * std::abs(ex.leading_expected);
  const double scale = std::max(std::abs(ex.c2_expected), std::abs(ex.leading_expected) * 1e-3);
  ex.c2_ok = std::abs(ex.c2 - ex.c2_expected) <= 0.05 * scale;
  ex.ratio_ok = ex.ratio >= 9.5 && ex.ratio <= 10.5;
  return ex;
}

}  // namespace rhoqes
