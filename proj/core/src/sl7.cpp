#include "rhoqes/sl7.hpp"

#include "rhoqes/errors.hpp"

#include <sstream>

namespace rhoqes {

std::string GeneratorId::to_string() const {
  switch (kind) {
    case Kind::lower: return "J-" + std::to_string(i);
    case Kind::cartan: return "J0_" + std::to_string(i) + std::to_string(j);
    case Kind::euler: return "J0(N)";
    case Kind::raiser: return "J+" + std::to_string(i);
  }
  return "?";
}

std::vector<GeneratorId> all_generators() {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= kVars; ++i) out.push_back(GeneratorId::lower(i));
  for (int i = 1; i <= kVars; ++i)
    for (int j = 1; j <= kVars; ++j) out.push_back(GeneratorId::cartan(i, j));
  out.push_back(GeneratorId::euler());
  for (int i = 1; i <= kVars; ++i) out.push_back(GeneratorId::raiser(i));
  return out;
}

namespace {

DiffOperator euler_operator(const Rational& N) {
  DiffOperator e = DiffOperator::multiplication(Polynomial(-N));
  for (int k = 0; k < kVars; ++k) e += DiffOperator::d(k, Polynomial::var(k));
  return e;
}

}  // namespace

DiffOperator realize(const GeneratorId& g, const Rational& N) {
  switch (g.kind) {
    case GeneratorId::Kind::lower: return DiffOperator::d(g.i - 1);
    case GeneratorId::Kind::cartan: return DiffOperator::d(g.j - 1, Polynomial::var(g.i - 1));
    case GeneratorId::Kind::euler: return euler_operator(N);
    case GeneratorId::Kind::raiser: return Polynomial::var(g.i - 1) * euler_operator(N);
  }
  return {};
}

AlgebraElement::AlgebraElement(const Rational& c) { add({}, c); }

AlgebraElement::AlgebraElement(const GeneratorId& g) { add({g}, 1); }

void AlgebraElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      AlgebraElement::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

AlgebraElement AlgebraElement::operator-() const { return Rational(-1) * *this; }

DiffOperator AlgebraElement::realize(const Rational& N) const {
  DiffOperator out;
  for (const auto& [w, c] : terms_) {
    DiffOperator t = DiffOperator::identity();
    for (const auto& g : w) t = t * rhoqes::realize(g, N);
    out += t * c;
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (const auto& g : w) os << '*' << g.to_string();
  }
  return os.str();
}

RelationReport verify_algebra_relations(const Rational& N) {
  RelationReport rep;
  auto check = [&](const std::string& name, const AlgebraElement& a, const AlgebraElement& b,
                   const AlgebraElement& expected) {
    ++rep.checked;
    DiffOperator lhs = commutator(a.realize(N), b.realize(N));
    DiffOperator diff = lhs - expected.realize(N);
    if (!diff.is_zero()) rep.failures.push_back({name, false, diff.to_string()});
  };
  auto delta = [](int x, int y) { return Rational(x == y ? 1 : 0); };
  const int n = kVars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          check("[J0_" + std::to_string(i) + std::to_string(j) + ",J0_" + std::to_string(k) +
                    std::to_string(l) + "]",
                J0(i, j), J0(k, l), delta(j, k) * J0(i, l) - delta(l, i) * J0(k, j));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const std::string jk = std::to_string(j) + std::to_string(k);
        check("[J-" + std::to_string(i) + ",J0_" + jk + "]", Jm(i), J0(j, k), delta(i, j) * Jm(k));
        check("[J0_" + jk + ",J+" + std::to_string(i) + "]", J0(j, k), Jp(i), delta(k, i) * Jp(j));
      }
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      check("[J-" + ij + "]", Jm(i), Jm(j), AlgebraElement{});
      check("[J+" + ij + "]", Jp(i), Jp(j), AlgebraElement{});
      check("[J-" + std::to_string(i) + ",J+" + std::to_string(j) + "]", Jm(i), Jp(j),
            delta(i, j) * J0N() + J0(j, i));
      check("[J0_" + std::to_string(i) + std::to_string(j) + ",J0(N)]", J0(i, j), J0N(), AlgebraElement{});
    }
    check("[J-" + std::to_string(i) + ",J0(N)]", Jm(i), J0N(), Jm(i));
    check("[J+" + std::to_string(i) + ",J0(N)]", Jp(i), J0N(), -Jp(i));
  }
  return rep;
}

FlagReport flag_action_check(int N) {
  FlagReport rep;
  rep.N = N;
  rep.dimension = graded_basis(N).size();
  for (const auto& g : all_generators()) {
    ++rep.generators;
    try {
      matrix_on_basis(realize(g, Rational(N)), N);
    } catch (const FlagViolation& e) {
      rep.violations.push_back(g.to_string() + ": " + e.what());
    }
  }
  return rep;
}

AlgebraElement h_es_generators(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  const auto w = weighted_gauge(mc, gp);
  const auto& im = mc.inv_m;
  const auto& [a, b, c, e, f, g] = gp.g;
  const Rational &w12 = w[0], &w13 = w[1], &w14 = w[2], &w23 = w[3], &w24 = w[4], &w34 = w[5];
  const Rational &im1 = im[0], &im2 = im[1], &im3 = im[2], &im4 = im[3];

  AlgebraElement second, first;
  for (int k = 1; k <= kVars; ++k) {
    second += mc.inv_mu(k - 1) * (J0(k, k) * Jm(k));
    first += mc.inv_mu(k - 1) * Jm(k);
  }
  AlgebraElement h = Rational(-2) * second - d * first;

  h -= (2 * im1) * ((J0(1, 1) + J0(2, 1) - J0(4, 1)) * Jm(2) + (J0(1, 1) + J0(3, 1) - J0(5, 1)) * Jm(3) +
                    (J0(2, 2) + J0(3, 2) - J0(6, 2)) * Jm(3));
  h -= (2 * im2) * ((J0(1, 1) + J0(4, 1) - J0(2, 1)) * Jm(4) + (J0(1, 1) + J0(5, 1) - J0(3, 1)) * Jm(5) +
                    (J0(4, 4) + J0(5, 4) - J0(6, 4)) * Jm(5));
  h -= (2 * im3) * ((J0(2, 2) + J0(4, 2) - J0(1, 2)) * Jm(4) + (J0(2, 2) + J0(6, 2) - J0(3, 2)) * Jm(6) +
                    (J0(4, 4) + J0(6, 4) - J0(5, 4)) * Jm(6));
  h -= (2 * im4) * ((J0(3, 3) + J0(5, 3) - J0(1, 3)) * Jm(5) + (J0(3, 3) + J0(6, 3) - J0(2, 3)) * Jm(6) +
                    (J0(5, 5) + J0(6, 5) - J0(4, 5)) * Jm(6));

  AlgebraElement inner = (2 * a) * J0(1, 1) + (2 * b) * J0(2, 2) + (2 * c) * J0(3, 3) + (2 * e) * J0(4, 4) +
                         (2 * f) * J0(5, 5) + (2 * g) * J0(6, 6);
  inner += (w13 * im1) * (J0(1, 1) + J0(2, 1) - J0(4, 1));
  inner += (w23 * im2) * (J0(1, 1) - J0(2, 1) + J0(4, 1));
  inner += (w14 * im1) * (J0(1, 1) + J0(3, 1) - J0(5, 1));
  inner += (w24 * im2) * (J0(1, 1) - J0(3, 1) + J0(5, 1));
  inner += (w12 * im1) * (J0(1, 2) + J0(2, 2) - J0(4, 2));
  inner += (w14 * im1) * (J0(2, 2) - J0(6, 2) + J0(3, 2));
  inner += (w23 * im3) * (J0(4, 2) + J0(2, 2) - J0(1, 2));
  inner += (w34 * im3) * (J0(6, 2) - J0(3, 2) + J0(2, 2));
  inner += (w12 * im1) * (J0(3, 3) + J0(1, 3) - J0(5, 3));
  inner += (w13 * im1) * (J0(3, 3) + J0(2, 3) - J0(6, 3));
  inner += (w24 * im4) * (J0(3, 3) + J0(5, 3) - J0(1, 3));
  inner += (w34 * im4) * (J0(3, 3) + J0(6, 3) - J0(2, 3));
  inner += (w12 * im2) * (J0(4, 4) + J0(1, 4) - J0(2, 4));
  inner += (w13 * im3) * (J0(4, 4) + J0(2, 4) - J0(1, 4));
  inner += (w24 * im2) * (J0(4, 4) + J0(5, 4) - J0(6, 4));
  inner += (w34 * im3) * (J0(4, 4) + J0(6, 4) - J0(5, 4));
  inner += (w12 * im2) * (J0(5, 5) + J0(1, 5) - J0(3, 5));
  inner += (w14 * im4) * (J0(5, 5) + J0(3, 5) - J0(1, 5));
  inner += (w23 * im2) * (J0(5, 5) + J0(4, 5) - J0(6, 5));
  inner += (w34 * im4) * (J0(5, 5) + J0(6, 5) - J0(4, 5));
  inner += (w13 * im3) * (J0(6, 6) + J0(2, 6) - J0(3, 6));
  inner += (w14 * im4) * (J0(6, 6) + J0(3, 6) - J0(2, 6));
  inner += (w23 * im3) * (J0(6, 6) + J0(4, 6) - J0(5, 6));
  inner += (w24 * im4) * (J0(6, 6) + J0(5, 6) - J0(4, 6));
  return h + (2 * gp.omega) * inner;
}

DiffOperator h_es_from_generators(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  // h_es contains no raising generators, so N does not enter.
  return h_es_generators(mc, gp, d).realize(0);
}

std::string to_string(LieForm f) {
  switch (f) {
    case LieForm::equal_literal: return "equal-literal";
    case LieForm::equal_grouped: return "equal-grouped";
    case LieForm::atomic: return "atomic";
    case LieForm::molecular_literal: return "molecular-literal";
    case LieForm::molecular_corrected: return "molecular-corrected";
    case LieForm::three_center: return "three-center";
  }
  return "?";
}

namespace {

// Mixed second-order groups attached to particles 1..4.
AlgebraElement mixed_p1() {
  return (J0(1, 1) + J0(2, 1) - J0(4, 1)) * Jm(2) + (J0(1, 1) + J0(3, 1) - J0(5, 1)) * Jm(3) +
         (J0(2, 2) + J0(3, 2) - J0(6, 2)) * Jm(3);
}
AlgebraElement mixed_p2() {
  return (J0(1, 1) + J0(4, 1) - J0(2, 1)) * Jm(4) + (J0(1, 1) + J0(5, 1) - J0(3, 1)) * Jm(5) +
         (J0(4, 4) + J0(5, 4) - J0(6, 4)) * Jm(5);
}
AlgebraElement mixed_p3() {
  return (J0(2, 2) + J0(4, 2) - J0(1, 2)) * Jm(4) + (J0(2, 2) + J0(6, 2) - J0(3, 2)) * Jm(6) +
         (J0(4, 4) + J0(6, 4) - J0(5, 4)) * Jm(6);
}
AlgebraElement mixed_p4() {
  return (J0(3, 3) + J0(5, 3) - J0(1, 3)) * Jm(5) + (J0(3, 3) + J0(6, 3) - J0(2, 3)) * Jm(6) +
         (J0(5, 5) + J0(6, 5) - J0(4, 5)) * Jm(6);
}

AlgebraElement equal_form(bool literal, const Rational& m, const GaugeParams& gp, const Rational& d) {
  const Rational& a = gp.g[0];
  AlgebraElement diag, lower, cartan;
  for (int k = 1; k <= kVars; ++k) {
    diag += J0(k, k) * Jm(k);
    lower += Jm(k);
    cartan += J0(k, k);
  }
  AlgebraElement h = Rational(-4) / m * diag - 2 * d / m * lower;
  if (literal)
    h += Rational(-2) / m * mixed_p1() + mixed_p2() + mixed_p3() + mixed_p4();
  else
    h += Rational(-2) / m * (mixed_p1() + mixed_p2() + mixed_p3() + mixed_p4());
  return h + 8 * a * gp.omega * cartan;
}

AlgebraElement atomic_form(const Rational& m, const GaugeParams& gp, const Rational& d) {
  const auto& [a, b, c, e, f, g] = gp.g;
  AlgebraElement h =
      Rational(-2) / m *
          (J0(1, 1) * Jm(1) + J0(2, 2) * Jm(2) + J0(3, 3) * Jm(3) + 2 * (J0(4, 4) * Jm(4)) +
           2 * (J0(5, 5) * Jm(5)) + 2 * (J0(6, 6) * Jm(6))) -
      d / m * (Jm(1) + Jm(2) + Jm(3) + 2 * Jm(4) + 2 * Jm(5) + 2 * Jm(6)) -
      Rational(2) / m * (mixed_p2() + mixed_p3() + mixed_p4());
  AlgebraElement w = (4 * a + e + f) * J0(1, 1) + (4 * b + e + g) * J0(2, 2) + (4 * c + f + g) * J0(3, 3) +
                     (4 * e + 2 * a + 2 * b + f + g) * J0(4, 4) + (4 * f + 2 * a + 2 * c + e + g) * J0(5, 5) +
                     (4 * g + 2 * b + 2 * c + e + f) * J0(6, 6);
  w += 2 * a * (J0(1, 5) + J0(1, 4) - J0(3, 5) - J0(2, 4));
  w += 2 * b * (J0(2, 6) + J0(2, 4) - J0(3, 6) - J0(1, 4));
  w += 2 * c * (J0(3, 6) + J0(3, 5) - J0(2, 6) - J0(1, 5));
  w += e * (J0(4, 5) + J0(4, 1) + J0(4, 2) + J0(4, 6) - J0(1, 2) - J0(5, 6) - J0(2, 1) - J0(6, 5));
  w += f * (J0(5, 6) + J0(5, 1) + J0(5, 4) + J0(5, 3) - J0(6, 4) - J0(1, 3) - J0(3, 1) - J0(4, 6));
  w += g * (J0(6, 5) + J0(6, 4) + J0(6, 2) + J0(6, 3) - J0(5, 4) - J0(3, 2) - J0(4, 5) - J0(2, 3));
  return h + gp.omega * w;
}

AlgebraElement molecular_form(bool literal, const Rational& m, const GaugeParams& gp, const Rational& d) {
  const auto& [a, b, c, e, f, g] = gp.g;
  (void)a;
  AlgebraElement lower = literal ? Jm(1) + Jm(2) + Jm(3) + 2 * Jm(4) + 2 * Jm(5) + 2 * Jm(6)
                                 : Jm(2) + Jm(3) + Jm(4) + Jm(5) + 2 * Jm(6);
  AlgebraElement h = Rational(-2) / m *
                         (J0(2, 2) * Jm(2) + J0(3, 3) * Jm(3) + J0(4, 4) * Jm(4) + J0(5, 5) * Jm(5) +
                          2 * (J0(6, 6) * Jm(6))) -
                     d / m * lower - Rational(2) / m * (mixed_p3() + mixed_p4());
  AlgebraElement w = (4 * b + 2 * e + g) * J0(2, 2) + (4 * c + 2 * f + g) * J0(3, 3) +
                     (4 * e + 2 * b + g) * J0(4, 4) + (4 * f + 2 * c + g) * J0(5, 5) +
                     (4 * g + 2 * b + 2 * c + 2 * e + 2 * f) * J0(6, 6);
  w += 2 * b * (J0(2, 6) + J0(2, 4) - J0(3, 6) - J0(1, 4));
  w += 2 * c * (J0(3, 6) + J0(3, 5) - J0(2, 6) - J0(1, 5));
  w += 2 * e * (J0(4, 2) + J0(4, 6) - J0(1, 2) - J0(5, 6));
  if (literal)
    w += 2 * f * (J0(5, 6) * J0(5, 4) - J0(6, 4) - J0(4, 6));
  else
    w += 2 * f * (J0(5, 3) + J0(5, 6) - J0(1, 3) - J0(4, 6));
  w += g * (J0(6, 5) + J0(6, 4) + J0(6, 2) + J0(6, 3) - J0(5, 4) - J0(3, 2) - J0(4, 5) - J0(2, 3));
  return h + gp.omega * w;
}

AlgebraElement three_center_form(const Rational& m, const GaugeParams& gp, const Rational& d) {
  const Rational &c = gp.g[2], &f = gp.g[4], &g = gp.g[5];
  AlgebraElement h = Rational(-2) / m * (J0(3, 3) * Jm(3) + J0(5, 5) * Jm(5) + J0(6, 6) * Jm(6)) -
                     d / m * (Jm(3) + Jm(5) + Jm(6)) - Rational(2) / m * mixed_p4();
  AlgebraElement w = (2 * c + f + g) * J0(3, 3) + (2 * f + c + g) * J0(5, 5) + (2 * g + f + c) * J0(6, 6);
  w += c * (J0(3, 5) + J0(3, 6) - J0(1, 5) - J0(2, 6));
  w += f * (J0(5, 3) + J0(5, 6) - J0(1, 3) - J0(4, 6));
  w += g * (J0(6, 3) + J0(6, 5) - J0(2, 3) - J0(4, 5));
  return h + 2 * gp.omega * w;
}

}  // namespace

AlgebraElement lie_form(LieForm f, const Rational& m, const GaugeParams& gp, const Rational& d) {
  switch (f) {
    case LieForm::equal_literal: return equal_form(true, m, gp, d);
    case LieForm::equal_grouped: return equal_form(false, m, gp, d);
    case LieForm::atomic: return atomic_form(m, gp, d);
    case LieForm::molecular_literal: return molecular_form(true, m, gp, d);
    case LieForm::molecular_corrected: return molecular_form(false, m, gp, d);
    case LieForm::three_center: return three_center_form(m, gp, d);
  }
  return {};
}

DiffOperator lie_form_target(LieForm f, const Rational& m, const GaugeParams& gp, const Rational& d) {
  switch (f) {
    case LieForm::equal_literal:
    case LieForm::equal_grouped: return build_h_es(MassConfig::equal(m), gp, d);
    case LieForm::atomic: return build_special(make_model(Variant::atomic, {}, m), gp, d);
    case LieForm::molecular_literal:
    case LieForm::molecular_corrected:
      return build_special(make_model(Variant::molecular, {}, m), gp, d);
    case LieForm::three_center: return build_special(make_model(Variant::three_center, {}, m), gp, d);
  }
  return {};
}

}  // namespace rhoqes
