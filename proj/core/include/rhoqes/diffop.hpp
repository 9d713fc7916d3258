#pragma once

#include "rhoqes/linalg.hpp"
#include "rhoqes/polynomial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rhoqes {

// Finite sum  sum_alpha c_alpha(u) d^alpha  with polynomial coefficients.
class DiffOperator {
 public:
  using Terms = std::map<MultiIndex, Polynomial, GradedOrder>;

  DiffOperator() = default;

  static DiffOperator identity() { return multiplication(Polynomial(1)); }
  static DiffOperator multiplication(const Polynomial& p);
  static DiffOperator derivative(const MultiIndex& alpha, const Polynomial& coeff = Polynomial(1));
  // coeff * d_v
  static DiffOperator d(int v, const Polynomial& coeff = Polynomial(1));
  // coeff * d_v d_w
  static DiffOperator dd(int v, int w, const Polynomial& coeff = Polynomial(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;  // -1 for the zero operator
  Polynomial coeff(const MultiIndex& alpha) const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const MultiIndex& alpha, const Polynomial& c);

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Rational& c);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const Rational& c) { return a *= c; }
  friend DiffOperator operator*(const Rational& c, DiffOperator a) { return a *= c; }
  // Left multiplication of every coefficient by a polynomial.
  friend DiffOperator operator*(const Polynomial& p, const DiffOperator& a);
  // Composition a o b.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  DiffOperator operator-() const;
  bool operator==(const DiffOperator& o) const { return terms_ == o.terms_; }

  Polynomial operator()(const Polynomial& p) const;

  // Applies f to every coefficient polynomial, dropping terms that become zero.
  template <class F>
  DiffOperator map_coefficients(F&& f) const {
    DiffOperator out;
    for (const auto& [alpha, c] : terms_) out.add_term(alpha, f(c));
    return out;
  }

  VarMask derivative_support() const;
  VarMask coefficient_support() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Terms terms_;
};

Polynomial apply(const DiffOperator& op, const Polynomial& p);
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

// e^{-phi} o op o e^{phi}
DiffOperator conjugate_exponential(const DiffOperator& op, const Polynomial& phi);

// e^{-phi} op(e^{phi}) for an operator of order <= 2; a polynomial.
Polynomial exponential_ratio(const DiffOperator& op, const Polynomial& phi);

// e^{-phi} op(p e^{phi}) evaluated at x, from first and second partials only.
Rational apply_to_exp_product(const DiffOperator& op, const Polynomial& p, const Polynomial& phi,
                              const Point& x);

struct PowerFactor {
  Polynomial base;
  Rational exponent;
};

// [op F]/F at x for F = prod A_k^{alpha_k}; op of order <= 2.
Rational apply_to_power_product(const DiffOperator& op, const std::vector<PowerFactor>& factors,
                                const Point& x);

struct OperatorMatrix {
  std::vector<MultiIndex> basis;
  QMatrix entries;  // column j = coordinates of op(basis[j])
  std::vector<int> degrees;
};

// Throws FlagViolation if op maps a basis monomial outside span(basis).
OperatorMatrix matrix_on_basis(const DiffOperator& op, int N, VarMask mask = kAllVars);

}  // namespace rhoqes
