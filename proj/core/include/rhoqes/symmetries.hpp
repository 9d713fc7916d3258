#pragma once

#include "rhoqes/diffop.hpp"
#include "rhoqes/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rhoqes {

struct SymmetryOperator {
  DiffOperator op;
  Rational normalizer_squared;  // alpha_i^2 for first-order operators, 1 otherwise
};

// alpha_i J_i for i = 1,2,3.  The third operator is the displayed bracket itself.
SymmetryOperator build_first_order(const MassConfig& mc, int i);

// S_1..S_4 in the form fixed by sum S_p/m_p = Delta_rad; S_5, S_6 as displayed.
SymmetryOperator build_second_order(const MassConfig& mc, const Rational& d, int i);

// S_1..S_4 exactly as displayed (with 1/mu factors and a trailing multiplication term).
DiffOperator printed_second_order(const MassConfig& mc, const Rational& d, int i);

// k with lhs = k * rhs, if one exists.
std::optional<Rational> proportionality(const DiffOperator& lhs, const DiffOperator& rhs);

// Rank of a family of operators viewed as coefficient vectors.
std::size_t operator_rank(const std::vector<DiffOperator>& ops);

// Expected so(3) structure constants k for [B_i, B_j] = k B_l (rational, positive).
Rational so3_constant(const MassConfig& mc, int i, int j);

struct SymmetryCheck {
  std::string id;
  bool pass = false;
  std::string details;
};

struct SymmetrySuite {
  std::vector<SymmetryCheck> checks;
  // k with k [B_3, S_1] = m3 S5 - m4 S6, compared with the displayed prefactor squared 1/(4 m1).
  std::optional<Rational> j3s1_factor;
  Rational j3s1_printed_square;
  bool ok() const;
};

// corrupt_s1 flips the sign of one cross term in S_1 (negative control).
SymmetrySuite verify_symmetry_suite(const MassConfig& mc, const Rational& d, bool corrupt_s1 = false);

}  // namespace rhoqes
