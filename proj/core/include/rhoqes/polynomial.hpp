#pragma once

#include "rhoqes/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rhoqes {

inline constexpr int kVars = 6;

// Pair variables in the fixed order 12,13,14,23,24,34 (u1..u6).
enum class Var : int { r12 = 0, r13, r14, r23, r24, r34 };

inline constexpr int idx(Var v) { return static_cast<int>(v); }

std::string_view var_name(int v);

// Bit set over the six slots.  Abstract rings (P, or P and S) use the
// low slots of the same representation.
using VarMask = std::uint8_t;
inline constexpr VarMask kAllVars = 0x3F;
constexpr VarMask mask_of(std::initializer_list<int> vars) {
  VarMask m = 0;
  for (int v : vars) m = static_cast<VarMask>(m | (1u << v));
  return m;
}

struct MultiIndex {
  std::array<std::uint8_t, kVars> e{};

  int degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  static MultiIndex unit(int v, int k = 1) {
    MultiIndex m;
    m.e[v] = static_cast<std::uint8_t>(k);
    return m;
  }
  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex m;
    for (int i = 0; i < kVars; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return m;
  }
  bool within(VarMask mask) const {
    for (int i = 0; i < kVars; ++i)
      if (e[i] && !(mask & (1u << i))) return false;
    return true;
  }
  bool operator==(const MultiIndex&) const = default;
};

// Total degree first, then lexicographic with u1 > u2 > ... > u6.
struct GradedOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  }
};

using Point = std::array<Rational, kVars>;

class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedOrder>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial var(int v);
  static Polynomial var(Var v) { return var(idx(v)); }
  static Polynomial monomial(const MultiIndex& m, const Rational& c = 1);
  // Linear form sum_k coeffs[k] * u_k.
  static Polynomial linear(const std::array<Rational, kVars>& coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Rational coeff(const MultiIndex& m) const;
  Rational constant_term() const { return coeff(MultiIndex{}); }
  VarMask support() const;

  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial pow(int n) const;
  Rational eval(const Point& x) const;
  // Replaces u_v by a constant.
  Polynomial substitute(int v, const Rational& value) const;
  // Replaces every slot k by images[k] (missing slots stay as they are).
  Polynomial compose(const std::vector<Polynomial>& images) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Terms terms_;
};

Polynomial partial_derivative(const Polynomial& p, int v, int order = 1);
Polynomial partial_derivative(const Polynomial& p, const MultiIndex& alpha);

// All monomials in the masked variables of total degree <= N, ordered by
// GradedOrder.  Length C(N+k, k) where k is the number of masked variables.
std::vector<MultiIndex> graded_basis(int N, VarMask mask = kAllVars);

// Basis restricted to exact degree n.
std::vector<MultiIndex> homogeneous_basis(int n, VarMask mask = kAllVars);

std::string monomial_string(const MultiIndex& m, const std::vector<std::string>& names = {});

}  // namespace rhoqes
