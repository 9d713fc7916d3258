#include "rhoqes/symmetries.hpp"

#include "rhoqes/errors.hpp"
#include "rhoqes/oscillator.hpp"

#include <map>
#include <utility>

namespace rhoqes {

namespace {

using P = Polynomial;

const P r12 = P::var(Var::r12), r13 = P::var(Var::r13), r14 = P::var(Var::r14), r23 = P::var(Var::r23),
        r24 = P::var(Var::r24), r34 = P::var(Var::r34);

constexpr int d12 = 0, d13 = 1, d14 = 2, d23 = 3, d24 = 4, d34 = 5;

DiffOperator first_order(const std::array<P, kVars>& c) {
  DiffOperator op;
  for (int k = 0; k < kVars; ++k)
    if (!c[k].is_zero()) op += DiffOperator::d(k, c[k]);
  return op;
}

DiffOperator b1(const Rational& m1, const Rational& m2, const Rational& m3, const Rational& m4) {
  std::array<P, kVars> c;
  c[d12] = m1 * m3 * (r12 + r13 - r23) - m2 * m3 * (r12 - r13 + r23) + m1 * m4 * (r12 + r14 - r24) -
           m2 * m4 * (r12 - r14 + r24);
  c[d13] = m2 * m3 * (r13 - r12 + r23) - m1 * m2 * (r12 + r13 - r23) + m2 * m4 * (r14 - r12 + r23 - r34);
  c[d14] = m2 * m4 * (r14 - r12 + r24) - m1 * m2 * (r12 + r14 - r24) + m2 * m3 * (r13 - r12 + r24 - r34);
  c[d23] = m1 * m2 * r12 - m1 * m2 * r13 + m1 * m3 * (r12 - r13 - r23) + m1 * m2 * r23 +
           m1 * m4 * (r12 - r13 - r24 + r34);
  c[d24] = m1 * m2 * r12 - m1 * m2 * r14 + m1 * m4 * (r12 - r14 - r24) + m1 * m2 * r24 +
           m1 * m3 * (r12 - r14 - r23 + r34);
  return first_order(c);
}

DiffOperator b2(const Rational& m1, const Rational& m2, const Rational& m3, const Rational& m4) {
  std::array<P, kVars> c;
  const P x = r13 - r14 - r23 + r24;
  c[d12] = m1 * m3 * m4 * x + m2 * m3 * m4 * x + m3 * m4 * (m3 + m4) * x;
  const Rational m44 = m4 * m4, m33 = m3 * m3;
  c[d13] = m2 * m44 * r14 - m2 * m44 * r12 + m2 * m44 * r23 - m2 * m44 * r34 -
           m1 * m2 * m4 * (r12 + r13 - r23) + m2 * m3 * m4 * (r13 - r12 + r23);
  c[d14] = m2 * m33 * (r12 - r13 - r24 + r34) + m2 * m4 * m3 * (r12 - r14 - r24) +
           m1 * m2 * m3 * (r12 + r14 - r24);
  c[d23] = m2 * m44 * r23 + m2 * m44 * r24 - m2 * m44 * r34 + m2 * m3 * m4 * r23 +
           m1 * m2 * m4 * (r12 - r13 + r23) + m2 * m3 * m4 * r24 - m2 * m3 * m4 * r34 -
           m1 * m3 * m4 * (r23 - r24 + r34) - m3 * (m3 + m4) * m4 * (r23 - r24 + r34);
  c[d24] = -(m2 * m33 * (r23 + r24 - r34)) - m2 * m4 * m3 * r23 - m2 * m4 * m3 * r24 -
           m1 * m2 * m3 * (r12 - r14 + r24) + m2 * m4 * m3 * r34 + m1 * m4 * m3 * (r24 - r23 + r34) +
           m4 * (m3 + m4) * m3 * (r24 - r23 + r34);
  c[d34] = m2 * m33 * (r23 - r24 + r34) + 2 * m2 * m4 * m3 * r23 + m1 * m2 * m3 * (r14 - r13 + r23 - r24) -
           2 * m2 * m4 * m3 * r24 + m2 * m44 * r23 + m1 * m2 * m4 * (r14 - r13 + r23 - r24) -
           m2 * m44 * r24 - m2 * m44 * r34;
  return first_order(c);
}

DiffOperator b3(const Rational& m1, const Rational& m3, const Rational& m4) {
  std::array<P, kVars> c;
  c[d12] = m3 * m4 * (r13 - r14 - r23 + r24);
  c[d13] = m3 * m4 * (r13 - r14) - m1 * m4 * (r13 + r14 - r34) + m3 * m4 * r34;
  c[d14] = m1 * m3 * r13 + m3 * m4 * (r13 - r14) + m1 * m3 * r14 - m1 * m3 * r34 - m3 * m4 * r34;
  c[d23] = m1 * m4 * (r12 - r13 - r24 + r34);
  c[d24] = m1 * m3 * r14 - m1 * m3 * r12 + m1 * m3 * r23 - m1 * m3 * r34;
  c[d34] = m1 * m3 * r14 - m1 * m3 * r13 - m1 * m3 * r34 + m1 * m4 * (r14 - r13 + r34);
  return first_order(c);
}

// The three pairs containing particle p (0-based) and the three pairs of pairs sharing it.
std::array<int, 3> pairs_of(int p) {
  std::array<int, 3> out{};
  int n = 0;
  for (int k = 0; k < kVars; ++k)
    if (kPairs[k].first == p || kPairs[k].second == p) out[n++] = k;
  return out;
}

int other(int k, int p) { return kPairs[k].first == p ? kPairs[k].second : kPairs[k].first; }

// rho_k + rho_l - rho_opp for pairs k=(p,q), l=(p,r) sharing p.
P triangle(int k, int l, int p) {
  return P::var(k) + P::var(l) - P::var(pair_index(other(k, p), other(l, p)));
}

DiffOperator corrected_s(int p, const Rational& d) {
  const auto ks = pairs_of(p);
  DiffOperator op;
  for (int k : ks) op += DiffOperator::dd(k, k, Rational(2) * P::var(k)) + DiffOperator::d(k, P(d));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) op += DiffOperator::dd(ks[a], ks[b], Rational(2) * triangle(ks[a], ks[b], p));
  return op;
}

DiffOperator s5(const Rational& d) {
  DiffOperator op = DiffOperator::dd(d14, d14, Rational(2) * r14);
  op += DiffOperator::dd(d12, d14, r12 + r14 - r24);
  op += DiffOperator::dd(d12, d24, -(r12 - r14 + r24));
  op += DiffOperator::dd(d12, d34, -r13 + r14 + r23 - r24);
  op += DiffOperator::dd(d13, d14, r13 + r14 - r34);
  op += DiffOperator::dd(d13, d24, -r12 + r14 + r23 - r34);
  op += DiffOperator::dd(d13, d34, -(r13 - r14 + r34));
  op += DiffOperator::dd(d14, d24, -r12 + r14 + r24);
  op += DiffOperator::dd(d14, d34, -r13 + r14 + r34);
  op += DiffOperator::d(d14, P(d));
  return op;
}

DiffOperator s6(const Rational& d) {
  DiffOperator op = DiffOperator::dd(d13, d13, Rational(2) * r13);
  op += DiffOperator::dd(d12, d13, r12 + r13 - r23);
  op += DiffOperator::dd(d12, d23, -(r12 - r13 + r23));
  op += DiffOperator::dd(d12, d34, r13 - r14 - r23 + r24);
  op += DiffOperator::dd(d13, d14, r13 + r14 - r34);
  op += DiffOperator::dd(d13, d23, -r12 + r13 + r23);
  op += DiffOperator::dd(d13, d34, r13 - r14 + r34);
  op += DiffOperator::dd(d14, d23, -r12 + r13 + r24 - r34);
  op += DiffOperator::dd(d14, d34, r13 - r14 - r34);
  op += DiffOperator::d(d13, P(d));
  return op;
}

std::array<Rational, 4> masses(const MassConfig& mc) {
  if (mc.infinite_count() > 0) throw BadLimit("symmetry operators need finite masses");
  return {mc.mass(0), mc.mass(1), mc.mass(2), mc.mass(3)};
}

}  // namespace

SymmetryOperator build_first_order(const MassConfig& mc, int i) {
  const auto [m1, m2, m3, m4] = masses(mc);
  const Rational M = mc.total();
  switch (i) {
    case 1: return {b1(m1, m2, m3, m4), m1 * m2 * (m3 + m4) * M};
    case 2: return {b2(m1, m2, m3, m4), m2 * m3 * m4 * (m3 + m4) * (m1 + m3 + m4) * M};
    case 3: return {b3(m1, m3, m4), m1 * m3 * m4 * (m1 + m3 + m4)};
    default: throw ConfigError("first-order symmetry index must be 1..3");
  }
}

SymmetryOperator build_second_order(const MassConfig&, const Rational& d, int i) {
  if (i >= 1 && i <= 4) return {corrected_s(i - 1, d), 1};
  if (i == 5) return {s5(d), 1};
  if (i == 6) return {s6(d), 1};
  throw ConfigError("second-order symmetry index must be 1..6");
}

DiffOperator printed_second_order(const MassConfig& mc, const Rational& d, int i) {
  if (i < 1 || i > 4) throw ConfigError("displayed S_i exists for i = 1..4");
  const int p = i - 1;
  const auto ks = pairs_of(p);
  DiffOperator inner;
  P sum;
  for (int k : ks) {
    inner += DiffOperator::dd(k, k, mc.inv_mu(k) * P::var(k));
    sum += P::var(k);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) inner += DiffOperator::dd(ks[a], ks[b], triangle(ks[a], ks[b], p));
  return Rational(-2) * inner - DiffOperator::multiplication(d * sum);
}

std::optional<Rational> proportionality(const DiffOperator& lhs, const DiffOperator& rhs) {
  if (rhs.is_zero()) return std::nullopt;
  const auto& [alpha, c] = *rhs.terms().begin();
  const auto& [mono, v] = *c.terms().begin();
  const Rational k = lhs.coeff(alpha).coeff(mono) / v;
  if (lhs == k * rhs) return k;
  return std::nullopt;
}

std::size_t operator_rank(const std::vector<DiffOperator>& ops) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> column;
  auto key = [](const MultiIndex& a, const MultiIndex& m) {
    return std::pair{std::vector<int>(a.e.begin(), a.e.end()), std::vector<int>(m.e.begin(), m.e.end())};
  };
  for (const auto& op : ops)
    for (const auto& [alpha, c] : op.terms())
      for (const auto& [mono, v] : c.terms()) column.try_emplace(key(alpha, mono), column.size());
  QMatrix a(ops.size(), column.size());
  for (std::size_t r = 0; r < ops.size(); ++r)
    for (const auto& [alpha, c] : ops[r].terms())
      for (const auto& [mono, v] : c.terms()) a(r, column.at(key(alpha, mono))) = v;
  return rank(a);
}

Rational so3_constant(const MassConfig& mc, int i, int j) {
  const auto [m1, m2, m3, m4] = masses(mc);
  const Rational M = mc.total();
  if (i == 1 && j == 2) return m2 * (m3 + m4) * M;
  if (i == 3 && j == 1) return m1;
  if (i == 2 && j == 3) return m3 * m4 * (m1 + m3 + m4);
  throw ConfigError("so(3) constants are defined for (1,2), (3,1), (2,3)");
}

bool SymmetrySuite::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SymmetrySuite verify_symmetry_suite(const MassConfig& mc, const Rational& d, bool corrupt_s1) {
  SymmetrySuite suite;
  const DiffOperator delta = build_delta_rad(mc, d);
  std::array<DiffOperator, 3> b;
  for (int i = 0; i < 3; ++i) b[i] = build_first_order(mc, i + 1).op;
  std::array<DiffOperator, 6> s;
  for (int i = 0; i < 6; ++i) s[i] = build_second_order(mc, d, i + 1).op;
  if (corrupt_s1) {
    // flip the (12,13) cross term
    const MultiIndex a = MultiIndex::unit(d12) + MultiIndex::unit(d13);
    s[0].add_term(a, Rational(-2) * s[0].coeff(a));
  }

  auto add = [&](std::string id, bool pass, std::string details) {
    suite.checks.push_back({std::move(id), pass, std::move(details)});
  };

  for (int i = 0; i < 3; ++i) {
    const bool z = commutator(delta, b[i]).is_zero();
    add("commute_delta_J" + std::to_string(i + 1), z, z ? "" : "[Delta_rad, J] != 0");
  }

  const std::array<std::array<int, 3>, 3> triples = {{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}};
  for (const auto& [i, j, l] : triples) {
    const auto k = proportionality(commutator(b[i - 1], b[j - 1]), b[l - 1]);
    const Rational expect = so3_constant(mc, i, j);
    const std::string id = "so3_" + std::to_string(i) + std::to_string(j);
    if (!k) {
      add(id, false, "commutator not proportional to J" + std::to_string(l));
      continue;
    }
    const bool pass = *k * *k == expect * expect && *k > 0;
    add(id, pass, "k=" + to_pq(*k) + " expected=" + to_pq(expect));
  }

  DiffOperator sum;
  for (int p = 0; p < 4; ++p) sum += mc.inv_m[p] * s[p];
  add("decomposition", sum == delta, sum == delta ? "" : "sum S_p/m_p != Delta_rad");

  for (int i = 0; i < 6; ++i) {
    const bool z = commutator(delta, s[i]).is_zero();
    add("commute_delta_S" + std::to_string(i + 1), z, z ? "" : "[Delta_rad, S] != 0");
  }
  std::size_t failed_pairs = 0;
  std::string first_bad;
  for (int j = 0; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k)
      if (!commutator(s[j], s[k]).is_zero()) {
        if (!failed_pairs++) first_bad = "S" + std::to_string(j + 1) + ",S" + std::to_string(k + 1);
      }
  add("s_commute", failed_pairs == 0,
      failed_pairs ? std::to_string(failed_pairs) + " non-commuting pairs, first " + first_bad : "15 pairs");

  const std::size_t r = operator_rank({s.begin(), s.end()});
  add("s_rank", r == 6, "rank=" + std::to_string(r));

  const auto [m1, m2, m3, m4] = masses(mc);
  const DiffOperator rhs = m3 * s[4] - m4 * s[5];
  suite.j3s1_factor = proportionality(rhs, commutator(b[2], s[0]));
  suite.j3s1_printed_square = 1 / (4 * m1);
  add("j3_s1_relation", suite.j3s1_factor.has_value(),
      suite.j3s1_factor ? "k=" + to_pq(*suite.j3s1_factor) + " k^2=" +
                              to_pq(*suite.j3s1_factor * *suite.j3s1_factor) +
                              " displayed k^2=" + to_pq(suite.j3s1_printed_square)
                        : "m3 S5 - m4 S6 not proportional to [J3, S1]");
  return suite;
}

}  // namespace rhoqes
