#pragma once

// Independent oracles for the unit tests.  Nothing here calls into the
// quantities it is used to check.

#include "rhoqes/geometry.hpp"
#include "rhoqes/polynomial.hpp"

#include <array>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using rhoqes::Point;
using rhoqes::Polynomial;
using rhoqes::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int integer(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational positive(int num = 9, int den = 5) {
    Rational r(integer(1, num), integer(1, den));
    r.canonicalize();
    return r;
  }
  Rational signed_rational(int num = 9, int den = 5) {
    Rational r(integer(-num, num), integer(1, den));
    r.canonicalize();
    return r;
  }
  std::array<Rational, 4> masses() { return {positive(), positive(), positive(), positive()}; }

 private:
  std::mt19937_64 g_;
};

// Four particles in dim dimensions, integer coordinates.
using Config = std::array<std::vector<Rational>, 4>;

inline Config random_config(Rng& rng, int dim, int range = 5) {
  Config c;
  for (auto& r : c) {
    r.resize(dim);
    for (auto& x : r) x = rng.integer(-range, range);
  }
  return c;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Point rho_of(const Config& c) {
  Point x;
  for (int k = 0; k < rhoqes::kVars; ++k) {
    const auto [i, j] = rhoqes::kPairs[k];
    const auto d = sub(c[i], c[j]);
    x[k] = dot(d, d);
  }
  return x;
}

// (det[r2-r1, r3-r1, r4-r1] / 6)^2 for points in 3D.
inline Rational triple_product_volume_squared(const Config& c) {
  const auto a = sub(c[1], c[0]), b = sub(c[2], c[0]), e = sub(c[3], c[0]);
  const Rational det = a[0] * (b[1] * e[2] - b[2] * e[1]) - a[1] * (b[0] * e[2] - b[2] * e[0]) +
                       a[2] * (b[0] * e[1] - b[1] * e[0]);
  return det * det / 36;
}

// Gradient of rho_k with respect to particle a: 2 (r_i - r_j) (delta_ai - delta_aj).
inline std::vector<Rational> grad_rho(const Config& c, int k, int a) {
  const auto [i, j] = rhoqes::kPairs[k];
  std::vector<Rational> g(c[0].size(), Rational(0));
  if (a != i && a != j) return g;
  const auto d = sub(c[i], c[j]);
  const Rational sign = a == i ? 2 : -2;
  for (std::size_t t = 0; t < g.size(); ++t) g[t] = sign * d[t];
  return g;
}

// sum_a (1/m_a) grad_a rho_k . grad_a rho_l
inline Rational kinetic_metric(const std::array<Rational, 4>& inv_m, const Config& c, int k, int l) {
  Rational s = 0;
  for (int a = 0; a < 4; ++a) s += inv_m[a] * dot(grad_rho(c, k, a), grad_rho(c, l, a));
  return s;
}

// sum_a (1/2m_a) Laplacian_a of f(rho(r)), by the chain rule in Cartesian coordinates.
inline Rational cartesian_laplacian(const std::array<Rational, 4>& inv_m, const Config& c, const Polynomial& f) {
  const Point x = rho_of(c);
  const int dim = static_cast<int>(c[0].size());
  Rational out = 0;
  for (int k = 0; k < rhoqes::kVars; ++k) {
    const auto fk = rhoqes::partial_derivative(f, k);
    const auto [i, j] = rhoqes::kPairs[k];
    // Laplacian_a rho_ij = 2 dim for a in {i, j}
    out += fk.eval(x) * (inv_m[i] + inv_m[j]) * 2 * dim;
    for (int l = 0; l < rhoqes::kVars; ++l)
      out += rhoqes::partial_derivative(fk, l).eval(x) * kinetic_metric(inv_m, c, k, l);
  }
  return out / 2;
}

// Leibniz expansion, for small matrices.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Polynomial random_poly(Rng& rng, int degree, int terms) {
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    rhoqes::MultiIndex m;
    int left = rng.integer(0, degree);
    for (int v = 0; v < rhoqes::kVars && left > 0; ++v) {
      const int e = rng.integer(0, left);
      m.e[v] = static_cast<std::uint8_t>(e);
      left -= e;
    }
    p.add_term(m, rng.signed_rational());
  }
  return p;
}

}  // namespace oracle
