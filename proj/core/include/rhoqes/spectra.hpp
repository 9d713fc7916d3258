#pragma once

#include "rhoqes/diffop.hpp"
#include "rhoqes/oscillator.hpp"

#include <optional>
#include <vector>

namespace rhoqes {

// Exact when available, always with a float value.
struct Energy {
  std::optional<Rational> exact;
  double value = 0;

  static Energy of(const Rational& r) { return {r, r.get_d()}; }
};

struct BlockEigen {
  int degree = 0;
  std::size_t size = 0;
  enum class Method { triangular, scalar_plus_nilpotent, numeric } method = Method::triangular;
  std::vector<Energy> eigenvalues;
  double residual = 0;  // max |Bv - lambda v| / |v| for numeric blocks
};

struct FundamentalFrequencies {
  std::vector<Energy> lambda;  // one per dynamical variable, ascending
  bool exact = false;
  double residual = 0;
  Rational trace;  // trace of the degree-1 block
};

// Eigenvalues of the degree-1 block of op on the flag over the masked variables.
FundamentalFrequencies fundamental_frequencies(const DiffOperator& h, VarMask mask = kAllVars);

struct SpectrumLevel {
  std::vector<int> quantum;  // representative tuple
  Energy energy;
  int multiplicity = 1;
};

struct Spectrum {
  int N = 0;
  std::size_t dimension = 0;
  bool block_triangular = false;  // no entry from a degree-n column to a higher-degree row
  std::vector<BlockEigen> blocks;
  std::vector<Energy> eigenvalues;  // with multiplicity, ascending
  FundamentalFrequencies frequencies;
  std::vector<SpectrumLevel> levels;  // sum n_i lambda_i over |n| <= N, grouped by energy
  bool linear = false;                 // block eigenvalues equal the level energies per degree
  double linearity_error = 0;
  std::optional<bool> charpoly_match;  // full vs product of blocks, N <= 2
};

// Throws FlagViolation when h does not preserve the flag up to N.
Spectrum spectrum(const DiffOperator& h, int N, VarMask mask = kAllVars, double tol = 1e-9);

// Closed-form energies.  Equal masses: 8 a omega sum N_i.  Molecular and three-center:
// the V(0) = 0 ground energy plus sum k_i lambda_i with lambda from the frozen operator.
Energy closed_form_special_energy(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                                  const std::vector<int>& quantum, const Point& classical);

Rational equal_mass_energy(const Rational& a, const Rational& omega, const std::vector<int>& quantum);

}  // namespace rhoqes
