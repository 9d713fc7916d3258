#pragma once

#include "rhoqes/diffop.hpp"
#include "rhoqes/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rhoqes {

// Ground-state exponent parameters (a,b,c,e,f,g) in pair order plus omega.
struct GaugeParams {
  std::array<Rational, kVars> g{1, 1, 1, 1, 1, 1};
  Rational omega = 1;

  static GaugeParams uniform(const Rational& a, const Rational& omega) {
    return {{a, a, a, a, a, a}, omega};
  }
};

using SpringConstants = std::array<Rational, kVars>;

DiffOperator build_delta_rad(const MassConfig& mc, const Rational& d);
Polynomial build_es_potential(const SpringConstants& nu, const Rational& omega);

// g_k mu_k, with 0 allowed for a pair of infinite masses only when g_k = 0.
std::array<Rational, kVars> weighted_gauge(const MassConfig& mc, const GaugeParams& gp);

struct GroundState {
  std::array<Rational, kVars> s;  // Psi0 = exp(-sum s_k rho_k)
  Rational E0;
};
// Throws NonNormalizable for a non-positive gauge parameter on a finite pair,
// BadLimit for a nonzero parameter on a pair of infinite masses.
GroundState ground_state_data(const MassConfig& mc, const GaugeParams& gp, const Rational& d);

struct SpringMap {
  SpringConstants nu;
  Rational E0;            // minus the constant term of the ratio
  Polynomial ratio;       // e^{-phi} Delta_rad e^{phi}
};
// Derived from the chain rule applied to the ground state; no printed relations used.
SpringMap forward_spring_map(const MassConfig& mc, const GaugeParams& gp, const Rational& d = 3);

// The three relations printed in closed form (nu12, nu13, nu34); finite masses.
std::array<std::optional<Rational>, kVars> printed_spring_relations(const MassConfig& mc,
                                                                    const GaugeParams& gp);

// nu_k = g^T Q_k g (omega-independent); obtained by polarization of the forward map.
std::array<QMatrix, kVars> spring_quadratic_forms(const MassConfig& mc);

enum class InverseVerdict { ok, negative_root };
struct InverseResult {
  std::array<double, kVars> gauge{};
  double residual = 0;
  int iterations = 0;
  InverseVerdict verdict = InverseVerdict::ok;
};
// Newton iteration in double precision. Throws NoConvergence after 100 steps.
InverseResult inverse_spring_map(const MassConfig& mc, const std::array<double, kVars>& nu,
                                 const std::array<double, kVars>& seed, double tol = 1e-12);

DiffOperator build_nabla_rad(const MassConfig& mc, const GaugeParams& gp);
DiffOperator build_h_es(const MassConfig& mc, const GaugeParams& gp, const Rational& d);
// Conjugation of (-Delta_rad + V - E0) by the ground state, built independently of nabla_rad.
DiffOperator h_es_by_conjugation(const MassConfig& mc, const GaugeParams& gp, const Rational& d);

enum class Variant { generic, equal, atomic, molecular, three_center };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct SpecialModel {
  Variant variant = Variant::generic;
  MassConfig masses;
  std::vector<int> dynamical;  // pair indices that stay dynamical
  std::vector<int> classical;  // frozen pair indices (parameters)
};
SpecialModel make_model(Variant v, const MassConfig& generic_masses, const Rational& m);
VarMask dynamical_mask(const SpecialModel& model);

// Validates the gauge zeros the limit requires, then builds the limiting operator
// with classical variables left symbolic in the coefficients.
DiffOperator build_special(const SpecialModel& model, const GaugeParams& gp, const Rational& d);

// Substitutes values for the classical variables.
DiffOperator freeze_classical(const DiffOperator& op, const SpecialModel& model, const Point& classical);

// Ground energy with the V(0) = 0 convention: E0 - sum_{classical} 2 omega^2 nu_k rho_k.
Rational special_ground_energy(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                               const Point& classical);

struct LimitComparison {
  Rational t;                 // inverse of the large finite masses
  Rational max_scaled_diff;   // max |c(t) - c(0)| / t over all coefficients
  bool structural_match;      // no term appears in one operator only
};
// Generic operator at finite masses 1/t compared coefficient-wise with the limit.
LimitComparison limit_oracle(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                             const Rational& t);

}  // namespace rhoqes
