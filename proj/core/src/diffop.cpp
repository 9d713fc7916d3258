#include "rhoqes/diffop.hpp"

#include "rhoqes/errors.hpp"

#include <sstream>

namespace rhoqes {

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
  DiffOperator op;
  op.add_term(MultiIndex{}, p);
  return op;
}

DiffOperator DiffOperator::derivative(const MultiIndex& alpha, const Polynomial& coeff) {
  DiffOperator op;
  op.add_term(alpha, coeff);
  return op;
}

DiffOperator DiffOperator::d(int v, const Polynomial& coeff) {
  return derivative(MultiIndex::unit(v), coeff);
}

DiffOperator DiffOperator::dd(int v, int w, const Polynomial& coeff) {
  MultiIndex a = MultiIndex::unit(v);
  a.e[w] = static_cast<std::uint8_t>(a.e[w] + 1);
  return derivative(a, coeff);
}

int DiffOperator::order() const {
  int o = -1;
  for (const auto& [alpha, c] : terms_) o = std::max(o, alpha.degree());
  return o;
}

Polynomial DiffOperator::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Polynomial() : it->second;
}

void DiffOperator::add_term(const MultiIndex& alpha, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

DiffOperator operator*(const Polynomial& p, const DiffOperator& a) {
  DiffOperator out;
  for (const auto& [alpha, c] : a.terms_) out.add_term(alpha, p * c);
  return out;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator out = *this;
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

namespace {

// All gamma <= alpha componentwise, with the multinomial weight prod C(alpha_i, gamma_i).
void for_each_subindex(const MultiIndex& alpha, auto&& f) {
  MultiIndex g;
  auto rec = [&](auto&& self, int i, Rational w) -> void {
    if (i == kVars) {
      f(g, w);
      return;
    }
    for (int k = 0; k <= alpha.e[i]; ++k) {
      g.e[i] = static_cast<std::uint8_t>(k);
      self(self, i + 1, w * binomial(alpha.e[i], k));
    }
    g.e[i] = 0;
  };
  rec(rec, 0, Rational(1));
}

MultiIndex minus(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r;
  for (int i = 0; i < kVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return r;
}

}  // namespace

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out;
  for (const auto& [alpha, ca] : a.terms_)
    for (const auto& [beta, cb] : b.terms_)
      for_each_subindex(alpha, [&](const MultiIndex& gamma, const Rational& w) {
        Polynomial dcb = partial_derivative(cb, gamma);
        if (dcb.is_zero()) return;
        out.add_term(minus(alpha, gamma) + beta, ca * dcb * w);
      });
  return out;
}

Polynomial DiffOperator::operator()(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [alpha, c] : terms_) {
    Polynomial dp = partial_derivative(p, alpha);
    if (!dp.is_zero()) out += c * dp;
  }
  return out;
}

VarMask DiffOperator::derivative_support() const {
  VarMask m = 0;
  for (const auto& [alpha, c] : terms_)
    for (int i = 0; i < kVars; ++i)
      if (alpha.e[i]) m = static_cast<VarMask>(m | (1u << i));
  return m;
}

VarMask DiffOperator::coefficient_support() const {
  VarMask m = 0;
  for (const auto& [alpha, c] : terms_) m = static_cast<VarMask>(m | c.support());
  return m;
}

std::string DiffOperator::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string(names) << ')';
    if (alpha.degree() > 0) os << "*D[" << monomial_string(alpha, names) << ']';
  }
  return os.str();
}

Polynomial apply(const DiffOperator& op, const Polynomial& p) { return op(p); }

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) { return a * b; }

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

DiffOperator conjugate_exponential(const DiffOperator& op, const Polynomial& phi) {
  std::vector<DiffOperator> shifted(kVars);
  for (int i = 0; i < kVars; ++i)
    shifted[i] = DiffOperator::d(i) + DiffOperator::multiplication(partial_derivative(phi, i));
  DiffOperator out;
  for (const auto& [alpha, c] : op.terms()) {
    DiffOperator t = DiffOperator::multiplication(c);
    for (int i = 0; i < kVars; ++i)
      for (int k = 0; k < alpha.e[i]; ++k) t = t * shifted[i];
    out += t;
  }
  return out;
}

namespace {

std::pair<int, int> second_order_pair(const MultiIndex& alpha) {
  int first = -1, second = -1;
  for (int i = 0; i < kVars; ++i)
    for (int k = 0; k < alpha.e[i]; ++k) (first < 0 ? first : second) = i;
  return {first, second};
}

}  // namespace

Polynomial exponential_ratio(const DiffOperator& op, const Polynomial& phi) {
  if (op.order() > 2) throw std::invalid_argument("exponential_ratio: order > 2");
  Polynomial out;
  for (const auto& [alpha, c] : op.terms()) {
    const int deg = alpha.degree();
    if (deg == 0) {
      out += c;
    } else if (deg == 1) {
      auto [m, unused] = second_order_pair(alpha);
      out += c * partial_derivative(phi, m);
    } else {
      auto [m, n] = second_order_pair(alpha);
      out += c * (partial_derivative(phi, m) * partial_derivative(phi, n) + partial_derivative(phi, alpha));
    }
  }
  return out;
}

Rational apply_to_exp_product(const DiffOperator& op, const Polynomial& p, const Polynomial& phi,
                              const Point& x) {
  if (op.order() > 2) throw std::invalid_argument("apply_to_exp_product: order > 2");
  Rational out = 0;
  const Rational p0 = p.eval(x);
  for (const auto& [alpha, c] : op.terms()) {
    const Rational cx = c.eval(x);
    if (cx == 0) continue;
    const int deg = alpha.degree();
    if (deg == 0) {
      out += cx * p0;
    } else if (deg == 1) {
      auto [m, unused] = second_order_pair(alpha);
      out += cx * (partial_derivative(p, m).eval(x) + p0 * partial_derivative(phi, m).eval(x));
    } else {
      auto [m, n] = second_order_pair(alpha);
      Rational pm = partial_derivative(p, m).eval(x), pn = partial_derivative(p, n).eval(x);
      Rational fm = partial_derivative(phi, m).eval(x), fn = partial_derivative(phi, n).eval(x);
      Rational pmn = partial_derivative(p, alpha).eval(x), fmn = partial_derivative(phi, alpha).eval(x);
      out += cx * (pmn + pm * fn + pn * fm + p0 * (fmn + fm * fn));
    }
  }
  return out;
}

Rational apply_to_power_product(const DiffOperator& op, const std::vector<PowerFactor>& factors,
                                const Point& x) {
  if (op.order() > 2) throw std::invalid_argument("apply_to_power_product: order > 2");
  // L1[m] = sum a dA/A,  L2[m][n] = sum a (d2A/A - dA dA / A^2)
  std::array<Rational, kVars> L1{};
  std::array<std::array<Rational, kVars>, kVars> L2{};
  for (const auto& f : factors) {
    const Rational A = f.base.eval(x);
    if (A == 0) throw SingularPoint("power-product factor vanishes at the evaluation point");
    std::array<Rational, kVars> g;
    for (int m = 0; m < kVars; ++m) g[m] = partial_derivative(f.base, m).eval(x) / A;
    for (int m = 0; m < kVars; ++m) {
      L1[m] += f.exponent * g[m];
      for (int n = m; n < kVars; ++n) {
        MultiIndex a = MultiIndex::unit(m);
        a.e[n] = static_cast<std::uint8_t>(a.e[n] + 1);
        Rational h = partial_derivative(f.base, a).eval(x) / A;
        L2[m][n] += f.exponent * (h - g[m] * g[n]);
        L2[n][m] = L2[m][n];
      }
    }
  }
  Rational out = 0;
  for (const auto& [alpha, c] : op.terms()) {
    const Rational cx = c.eval(x);
    if (cx == 0) continue;
    const int deg = alpha.degree();
    if (deg == 0) {
      out += cx;
    } else if (deg == 1) {
      auto [m, unused] = second_order_pair(alpha);
      out += cx * L1[m];
    } else {
      auto [m, n] = second_order_pair(alpha);
      out += cx * (L1[m] * L1[n] + L2[m][n]);
    }
  }
  return out;
}

OperatorMatrix matrix_on_basis(const DiffOperator& op, int N, VarMask mask) {
  OperatorMatrix om;
  om.basis = graded_basis(N, mask);
  std::map<MultiIndex, std::size_t, GradedOrder> index;
  for (std::size_t j = 0; j < om.basis.size(); ++j) {
    index.emplace(om.basis[j], j);
    om.degrees.push_back(om.basis[j].degree());
  }
  const std::size_t n = om.basis.size();
  om.entries = QMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img = op(Polynomial::monomial(om.basis[j]));
    for (const auto& [m, c] : img.terms()) {
      auto it = index.find(m);
      if (it == index.end())
        throw FlagViolation("operator maps " + monomial_string(om.basis[j]) + " to " +
                            monomial_string(m) + " outside the degree-" + std::to_string(N) +
                            " space");
      om.entries(it->second, j) = c;
    }
  }
  return om;
}

}  // namespace rhoqes
