#pragma once

#include "rhoqes/diffop.hpp"
#include "rhoqes/oscillator.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace rhoqes {

// Generators of the affine subalgebra of sl(7) acting on polynomials in u1..u6.
// Indices are 1-based, as in the usual notation J^0_{ij}.
struct GeneratorId {
  enum class Kind { lower, cartan, euler, raiser };
  Kind kind = Kind::lower;
  int i = 0, j = 0;

  static GeneratorId lower(int i) { return {Kind::lower, i, 0}; }
  static GeneratorId cartan(int i, int j) { return {Kind::cartan, i, j}; }
  static GeneratorId euler() { return {Kind::euler, 0, 0}; }
  static GeneratorId raiser(int i) { return {Kind::raiser, i, 0}; }

  auto operator<=>(const GeneratorId&) const = default;
  std::string to_string() const;
};

std::vector<GeneratorId> all_generators();  // 49 ids

DiffOperator realize(const GeneratorId& g, const Rational& N);

// Linear combination of words in the generators.  Words are realized left to right.
class AlgebraElement {
 public:
  using Word = std::vector<GeneratorId>;

  AlgebraElement() = default;
  AlgebraElement(const Rational& c);  // NOLINT
  AlgebraElement(const GeneratorId& g);  // NOLINT

  const std::map<Word, Rational>& terms() const { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& a);
  AlgebraElement operator-() const;

  DiffOperator realize(const Rational& N) const;
  std::string to_string() const;

 private:
  void add(const Word& w, const Rational& c);
  std::map<Word, Rational> terms_;
};

// Shorthands, 1-based.
inline AlgebraElement Jm(int i) { return GeneratorId::lower(i); }
inline AlgebraElement J0(int i, int j) { return GeneratorId::cartan(i, j); }
inline AlgebraElement J0N() { return GeneratorId::euler(); }
inline AlgebraElement Jp(int i) { return GeneratorId::raiser(i); }

struct RelationCheck {
  std::string name;
  bool holds = false;
  std::string residual;  // empty when the relation holds
};

struct RelationReport {
  std::size_t checked = 0;
  std::vector<RelationCheck> failures;
  bool ok() const { return failures.empty(); }
};
RelationReport verify_algebra_relations(const Rational& N);

struct FlagReport {
  int N = 0;
  std::size_t dimension = 0;
  std::size_t generators = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
FlagReport flag_action_check(int N);

// The generic Lie-algebraic form of the gauged operator, written in generators.
AlgebraElement h_es_generators(const MassConfig& mc, const GaugeParams& gp, const Rational& d);
DiffOperator h_es_from_generators(const MassConfig& mc, const GaugeParams& gp, const Rational& d);

// Special-case Lie-algebraic forms as displayed.  Equal mass m for every finite particle.
enum class LieForm {
  equal_literal,        // bracket closing as printed: nine terms outside the -2/m bracket
  equal_grouped,        // all twelve mixed terms inside the -2/m bracket
  atomic,
  molecular_literal,
  molecular_corrected,  // d-term, J4/J5 coefficients and the f-term repaired
  three_center,
};
std::string to_string(LieForm f);
AlgebraElement lie_form(LieForm f, const Rational& m, const GaugeParams& gp, const Rational& d);

// The operator a displayed form must reproduce.
DiffOperator lie_form_target(LieForm f, const Rational& m, const GaugeParams& gp, const Rational& d);

}  // namespace rhoqes
