#pragma once

#include "rhoqes/diffop.hpp"
#include "rhoqes/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rhoqes {

// Reduced operators act on an abstract ring: slot 0 is P, slot 1 is S.
inline constexpr int kSlotP = 0;
inline constexpr int kSlotS = 1;

struct VolumeVars {
  Polynomial P;  // sum m_i m_j rho_ij / M
  Polynomial S;  // mass-weighted sum of the four Heron quadratics
};
VolumeVars volume_vars(const MassConfig& mc);

DiffOperator build_delta_P(const Rational& d);                         // 2P d^2 + 3d d
DiffOperator build_delta_PS(const MassConfig& mc, const Rational& d);  // as displayed

struct ReductionCheck {
  MultiIndex monomial;  // exponents of (P, S)
  bool exact = false;
  Polynomial residual;  // Delta_rad(f(P,S)) - (reduced f)(P,S), in rho
};
// For each monomial: Delta_rad applied to f(P(rho), S(rho)) vs the reduced operator.
std::vector<ReductionCheck> reduction_check(const MassConfig& mc, const Rational& d, const DiffOperator& reduced,
                                            const std::vector<MultiIndex>& monomials);

// Gram entries g(grad f, grad g) of Delta_rad and the Laplacians of P and S.
struct ChainRule {
  Polynomial g_pp, g_ps, g_ss, lap_p, lap_s;
  bool g_pp_closes = false;   // = 2P
  bool g_ps_closes = false;   // = 4S
  bool lap_p_closes = false;  // = 3d
  bool lap_s_closes = false;  // = 8M(d-1)P
  // k with g_ss - 8MPS = k V4^2, when such k exists.
  std::optional<Rational> g_ss_v4_factor;
};
ChainRule chain_rule(const MassConfig& mc, const Rational& d);

// Delta_rad f(P,S) through the chain rule with the computed gram entries.
Polynomial chain_rule_apply(const ChainRule& cr, const VolumeVars& vv, const Polynomial& f);

// ---- sl(2) model in P ----

DiffOperator sl2_plus(const Rational& N);  // P^2 d - N P
DiffOperator sl2_zero(const Rational& N);  // 2P d - N
DiffOperator sl2_minus();                  // d

// -J-J0 - (3d+N-2)J- + 4A J+ + 2 omega J0 + 2N omega
DiffOperator h_qes(const Rational& A, const Rational& omega, const Rational& d, int N);
// -Delta_P + 4P(AP + omega) d - 4NAP, the gauge-rotated form minus 4NAP
DiffOperator h_qes_gauge_form(const Rational& A, const Rational& omega, const Rational& d, int N);

// Potentials at a point P > 0.
Rational qes_v0(const Rational& A, const Rational& omega, const Rational& d, const Rational& P);
Rational qes_potential_displayed(const Rational& A, const Rational& omega, const Rational& d, int N,
                                 const Rational& P);
Rational qes_potential_derived(const Rational& A, const Rational& omega, const Rational& d, int N,
                               const Rational& P);

// [(-Delta_LB + V)(p psi0)] / psi0 at P, psi0 = P^{(3d-1)/4} exp(-omega P - A P^2/2).
Rational lb_action_over_psi0(const Polynomial& p, const Rational& A, const Rational& omega, const Rational& d,
                             const Rational& V, const Rational& P);

struct QesModel {
  int N = 0;
  QMatrix matrix;                  // column k = h(P^k) on {1, P, ..., P^N}
  UPoly charpoly;                  // exact
  std::vector<double> eigen_real;  // ascending
  double max_imag = 0;
  double residual = 0;
  bool flag_preserved = true;
};
QesModel qes_model(const Rational& A, const Rational& omega, const Rational& d, int N);

// N = 1 in Q(sqrt D): eigenvalues 2 omega +- sqrt(4 omega^2 + 12 d A), eigenpolynomials 3d - lambda P.
struct QesExactN1 {
  Rational discriminant;  // 4 omega^2 + 12 d A
  bool eigen_equations_hold = false;
};
QesExactN1 qes_exact_n1(const Rational& A, const Rational& omega, const Rational& d);

struct LaguerreSolution {
  Polynomial poly;  // L_N^{((3d-2)/2)}(2 omega P), in slot 0
  Rational energy;  // (3d + 4N) omega
  bool residual_zero = false;
};
LaguerreSolution es_laguerre(const Rational& d, const Rational& omega, int N);

struct GaugeCheck {
  Rational first_order;      // coefficient of d after rotation by P^{-(3d-1)/4}
  Rational potential_coeff;  // c with U_eff = c / P
  bool matches_u_eff = false;
};
GaugeCheck gauge_check(const Rational& d);

}  // namespace rhoqes
