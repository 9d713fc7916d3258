#include "rhoqes/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rhoqes {

std::string_view var_name(int v) {
  static constexpr std::string_view names[kVars] = {"r12", "r13", "r14", "r23", "r24", "r34"};
  if (v < 0 || v >= kVars) throw std::out_of_range("variable index");
  return names[v];
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(MultiIndex{}, c);
}

Polynomial Polynomial::var(int v) { return monomial(MultiIndex::unit(v)); }

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(const std::array<Rational, kVars>& coeffs) {
  Polynomial p;
  for (int k = 0; k < kVars; ++k) p.add_term(MultiIndex::unit(k), coeffs[k]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

VarMask Polynomial::support() const {
  VarMask m = 0;
  for (const auto& [mi, c] : terms_)
    for (int i = 0; i < kVars; ++i)
      if (mi.e[i]) m = static_cast<VarMask>(m | (1u << i));
  return m;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out(1), base = *this;
  while (n) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

Rational Polynomial::eval(const Point& x) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kVars; ++i)
      if (m.e[i]) t *= rhoqes::pow(x[i], m.e[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::substitute(int v, const Rational& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    MultiIndex r = m;
    r.e[v] = 0;
    out.add_term(r, c * rhoqes::pow(value, m.e[v]));
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  // Cache powers of each image so repeated exponents are not recomputed.
  std::vector<std::vector<Polynomial>> powers(kVars);
  auto power = [&](int v, int k) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(Polynomial(1));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[v]);
    return pv[k];
  };
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    MultiIndex kept;
    for (int i = 0; i < kVars; ++i) {
      if (!m.e[i]) continue;
      if (i < static_cast<int>(images.size()))
        t = t * power(i, m.e[i]);
      else
        kept.e[i] = m.e[i];
    }
    out += t * monomial(kept);
  }
  return out;
}

std::string monomial_string(const MultiIndex& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kVars; ++i) {
    if (!m.e[i]) continue;
    if (!first) os << '*';
    first = false;
    if (i < static_cast<int>(names.size()))
      os << names[i];
    else
      os << var_name(i);
    if (m.e[i] > 1) os << '^' << int(m.e[i]);
  }
  return first ? "1" : os.str();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = m.degree() == 0;
    if (unit || a != 1) {
      os << a.get_str();
      if (!unit) os << '*';
    }
    if (!unit) os << monomial_string(m, names);
  }
  return os.str();
}

Polynomial partial_derivative(const Polynomial& p, int v, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return p;
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.e[v] < order) continue;
    Rational f = c;
    for (int k = 0; k < order; ++k) f *= m.e[v] - k;
    MultiIndex r = m;
    r.e[v] = static_cast<std::uint8_t>(m.e[v] - order);
    out.add_term(r, f);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, const MultiIndex& alpha) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational f = c;
    MultiIndex r = m;
    bool zero = false;
    for (int i = 0; i < kVars && !zero; ++i) {
      if (m.e[i] < alpha.e[i]) {
        zero = true;
        break;
      }
      for (int k = 0; k < alpha.e[i]; ++k) f *= m.e[i] - k;
      r.e[i] = static_cast<std::uint8_t>(m.e[i] - alpha.e[i]);
    }
    if (!zero) out.add_term(r, f);
  }
  return out;
}

std::vector<MultiIndex> homogeneous_basis(int n, VarMask mask) {
  std::vector<MultiIndex> out;
  std::vector<int> vars;
  for (int i = 0; i < kVars; ++i)
    if (mask & (1u << i)) vars.push_back(i);
  if (vars.empty()) {
    if (n == 0) out.push_back(MultiIndex{});
    return out;
  }
  // Enumerate in descending lex order: first variable gets the largest exponent first.
  MultiIndex cur;
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == vars.size()) {
      cur.e[vars[pos]] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      cur.e[vars[pos]] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.e[vars[pos]] = static_cast<std::uint8_t>(k);
      self(self, pos + 1, left - k);
    }
    cur.e[vars[pos]] = 0;
  };
  rec(rec, 0, n);
  return out;
}

std::vector<MultiIndex> graded_basis(int N, VarMask mask) {
  std::vector<MultiIndex> out;
  for (int n = 0; n <= N; ++n) {
    auto h = homogeneous_basis(n, mask);
    out.insert(out.end(), h.begin(), h.end());
  }
  return out;
}

}  // namespace rhoqes
