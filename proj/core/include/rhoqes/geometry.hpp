#pragma once

#include "rhoqes/linalg.hpp"
#include "rhoqes/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhoqes {

// Pair k <-> particles (i,j), 0-based, in the fixed variable order.
inline constexpr std::array<std::pair<int, int>, kVars> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j);

// Four masses stored as inverses so that an infinite mass is exactly 0.
struct MassConfig {
  std::array<Rational, 4> inv_m{1, 1, 1, 1};

  static MassConfig finite(const std::array<Rational, 4>& m);
  static MassConfig equal(const Rational& m) { return finite({m, m, m, m}); }

  bool infinite(int i) const { return inv_m[i] == 0; }
  int infinite_count() const;
  Rational mass(int i) const;           // throws BadLimit when infinite
  Rational inv_mu(int k) const { return inv_m[kPairs[k].first] + inv_m[kPairs[k].second]; }
  bool mu_defined(int k) const { return inv_mu(k) != 0; }
  Rational mu(int k) const;             // throws BadLimit when both masses are infinite
  Rational total() const;               // M
  Rational product() const;             // m1 m2 m3 m4
  Rational cm() const;                  // M / (m1 m2 m3 m4)^2
};

// [2(AB+AC+BC) - (A^2+B^2+C^2)] / 16
Rational heron_s2(const Rational& a, const Rational& b, const Rational& c);
Polynomial heron_s2_poly(int ka, int kb, int kc);

// Squared tetrahedron volume, transcribed term by term.
Polynomial v4_squared_poly();
Rational v4_squared(const Point& x);

// Independent oracle: bordered 5x5 Cayley-Menger determinant / 288.
Rational cayley_menger_v4_squared(const Point& x);

enum class Domain { interior, boundary, exterior };
std::string to_string(Domain d);
Domain domain_check(const Point& x);

// Face triangles (pair indices) of the tetrahedron, one per omitted particle.
inline constexpr std::array<std::array<int, 3>, 4> kFaces = {
    {{3, 4, 5}, {1, 2, 5}, {0, 2, 4}, {0, 1, 3}}};

std::vector<std::vector<Polynomial>> cometric_poly(const MassConfig& mc);
QMatrix cometric(const MassConfig& mc, const Point& x);

Polynomial sum_v2m_poly(const MassConfig& mc);
Polynomial sum_v3m_poly(const MassConfig& mc);
// 9216 c_m V4^2 [(sum V2m)(sum V3m) - 9 M V4^2]
Polynomial displayed_det_poly(const MassConfig& mc);
Polynomial cometric_det_poly(const MassConfig& mc);

struct DetIdentity {
  Rational lhs, rhs;
  bool equal;
};
DetIdentity det_identity_check(const MassConfig& mc, const Point& x);

struct VeffEvaluation {
  Rational transcribed;          // plain reading of the displayed formula
  Rational oracle_literal;       // -[Delta Gamma]/Gamma, Gamma = D^{-1/4} (V4^2)^{(1-d/4)/2}
  Rational oracle_measure;       // Gamma = D^{-1/4} (V4^2)^{(4-d)/4}, matches the measure V4^{d-4}
  Rational alt_sum_of_squares;   // numerator read with sum of squared V2 terms
  Rational alt_unsquared;        // numerator read with (sum V2) unsquared
  Rational second_term;          // (d-5)(d-3) sum V3m / (72 V4^2)
};
VeffEvaluation gauge_factor_and_veff(const MassConfig& mc, const Rational& d, const Point& x);

struct RadialMeasure {
  Rational base;      // V4^2
  Rational exponent;  // (d-4)/2
  std::optional<Rational> value;
};
RadialMeasure radial_measure(const Rational& d, const Point& x);

enum class SpecialVariant { atomic, molecular, three_center };
struct SpecialDeterminant {
  Rational displayed;
  Rational direct;
};
// Equal finite masses m for the finite particles.
SpecialDeterminant special_determinants(SpecialVariant v, const Rational& m, const Point& x);
MassConfig special_masses(SpecialVariant v, const Rational& m);
std::vector<int> dynamical_variables(SpecialVariant v);

}  // namespace rhoqes
