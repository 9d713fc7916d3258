#pragma once

#include "rhoqes/oscillator.hpp"

#include <vector>

namespace rhoqes {

struct BOParams {
  Rational m1 = 1, m2 = 1;  // nuclei
  Rational m = 1;           // electrons
  Rational b = 1, c = 1, e = 1, f = 1, g = 1;
  Rational omega = 1, d = 3;
  int L = 0;
  Rational nu12 = 0;

  Rational mu() const { return m1 * m2 / (m1 + m2); }
};

// X = ((be+cf) m + nu12) / mu, the squared vibrational factor.
Rational bo_vibrational_square(const BOParams& p);

// omega d (b+c+e+f+g) + omega d sqrt(X); L = 0 only.
double nuclear_ground_energy(const BOParams& p);

// Nuclear parameters at masses (1,1,m,m) with nu12 from the forward spring map.
BOParams bo_params_from_gauge(const GaugeParams& gp, const Rational& d, const Rational& m);

struct BOGap {
  double gap = 0;     // E0^(nucl) - E0, rationalized: omega d (X - a^2) / (sqrt X + a)
  Rational E0;        // exact ground energy of the full system
  Rational X;
};
// m = 0 returns a zero gap.
BOGap bo_gap(const GaugeParams& gp, const Rational& d, const Rational& m);

struct BOExpansion {
  std::vector<Rational> m_values;  // ascending
  std::vector<double> gaps;
  double leading = 0, leading_expected = 0;
  double c2 = 0, c2_expected = 0;
  double ratio = 0;  // gap of the two largest masses, spaced by 10
  bool leading_ok = false, c2_ok = false, ratio_ok = false;
};
// Polynomial fit of gap/m in m (quadratic with three or more masses, linear with two).
// Throws NoFit when the gaps are not monotone in m.
BOExpansion bo_gap_expansion_check(const GaugeParams& gp, const Rational& d,
                                   std::vector<Rational> m_values = {Rational(1, 100000), Rational(1, 10000),
                                                                     Rational(1, 1000)});

// The displayed m^2 coefficient: -(omega d / 2) [4(a s - 4p) + s^2] / (4a), s = b+c+e+f, p = be+cf.
double bo_c2_displayed(const GaugeParams& gp, const Rational& d);

}  // namespace rhoqes
