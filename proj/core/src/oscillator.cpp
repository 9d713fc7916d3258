#include "rhoqes/oscillator.hpp"

#include "rhoqes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace rhoqes {

namespace {

Polynomial R(int k) { return Polynomial::var(k); }

}  // namespace

DiffOperator build_delta_rad(const MassConfig& mc, const Rational& d) {
  DiffOperator op;
  for (int k = 0; k < kVars; ++k) {
    op += DiffOperator::dd(k, k, R(k) * (2 * mc.inv_mu(k)));
    op += DiffOperator::d(k, Polynomial(d * mc.inv_mu(k)));
  }
  // For each particle, the three pairs it belongs to, grouped by 1/m_p.
  for (int p = 0; p < 4; ++p) {
    if (mc.inv_m[p] == 0) continue;
    std::vector<int> others;
    for (int q = 0; q < 4; ++q)
      if (q != p) others.push_back(q);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int k = pair_index(p, others[i]), l = pair_index(p, others[j]);
        int opp = pair_index(others[i], others[j]);
        op += DiffOperator::dd(k, l, (R(k) + R(l) - R(opp)) * (2 * mc.inv_m[p]));
      }
  }
  return op;
}

Polynomial build_es_potential(const SpringConstants& nu, const Rational& omega) {
  std::array<Rational, kVars> c;
  for (int k = 0; k < kVars; ++k) c[k] = 2 * omega * omega * nu[k];
  return Polynomial::linear(c);
}

std::array<Rational, kVars> weighted_gauge(const MassConfig& mc, const GaugeParams& gp) {
  std::array<Rational, kVars> w;
  for (int k = 0; k < kVars; ++k) {
    if (mc.mu_defined(k)) {
      w[k] = gp.g[k] * mc.mu(k);
    } else if (gp.g[k] != 0) {
      throw BadLimit("gauge parameter of pair " + std::string(var_name(k)) +
                     " must vanish when both masses are infinite");
    }
  }
  return w;
}

GroundState ground_state_data(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  if (gp.omega <= 0) throw NonNormalizable("omega must be positive");
  GroundState gs;
  auto w = weighted_gauge(mc, gp);
  gs.E0 = 0;
  for (int k = 0; k < kVars; ++k) {
    if (mc.mu_defined(k) && gp.g[k] <= 0)
      throw NonNormalizable("gauge parameter of pair " + std::string(var_name(k)) + " must be positive");
    gs.s[k] = gp.omega * w[k];
    gs.E0 += gp.g[k];
  }
  gs.E0 *= gp.omega * d;
  return gs;
}

SpringMap forward_spring_map(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  auto w = weighted_gauge(mc, gp);
  std::array<Rational, kVars> s;
  for (int k = 0; k < kVars; ++k) s[k] = -gp.omega * w[k];
  SpringMap out;
  out.ratio = exponential_ratio(build_delta_rad(mc, d), Polynomial::linear(s));
  const Rational two_w2 = 2 * gp.omega * gp.omega;
  for (int k = 0; k < kVars; ++k) out.nu[k] = out.ratio.coeff(MultiIndex::unit(k)) / two_w2;
  out.E0 = -out.ratio.constant_term();
  return out;
}

std::array<std::optional<Rational>, kVars> printed_spring_relations(const MassConfig& mc,
                                                                    const GaugeParams& gp) {
  const auto& [a, b, c, e, f, g] = gp.g;
  Rational m1 = mc.mass(0), m2 = mc.mass(1), m3 = mc.mass(2), m4 = mc.mass(3);
  Rational u12 = mc.mu(0), u13 = mc.mu(1), u14 = mc.mu(2), u23 = mc.mu(3), u24 = mc.mu(4), u34 = mc.mu(5);
  std::array<std::optional<Rational>, kVars> out;
  out[0] = a * a * u12 + a * b * u12 * u13 / m1 + a * c * u12 * u14 / m1 + a * e * u12 * u23 / m2 +
           a * f * u12 * u24 / m2 - b * e * u13 * u23 / m3 - c * f * u14 * u24 / m4;
  out[1] = b * b * u13 + b * a * u13 * u12 / m1 + b * c * u13 * u14 / m1 + b * e * u13 * u23 / m3 +
           b * g * u13 * u34 / m3 - a * e * u12 * u23 / m2 - c * g * u14 * u34 / m4;
  out[5] = g * g * u34 + g * b * u34 * u13 / m3 + g * c * u34 * u14 / m4 + g * e * u34 * u23 / m3 +
           g * f * u34 * u24 / m4 - b * c * u13 * u14 / m1 - e * f * u23 * u24 / m4;
  return out;
}

std::array<QMatrix, kVars> spring_quadratic_forms(const MassConfig& mc) {
  auto nu_at = [&](const std::array<Rational, kVars>& g) {
    return forward_spring_map(mc, GaugeParams{g, 1}).nu;
  };
  std::array<std::array<Rational, kVars>, kVars> diag;
  for (int i = 0; i < kVars; ++i) {
    std::array<Rational, kVars> g{};
    g[i] = 1;
    diag[i] = nu_at(g);
  }
  std::array<QMatrix, kVars> Q;
  for (auto& q : Q) q = QMatrix(kVars, kVars);
  for (int i = 0; i < kVars; ++i) {
    for (int k = 0; k < kVars; ++k) Q[k](i, i) = diag[i][k];
    for (int j = i + 1; j < kVars; ++j) {
      std::array<Rational, kVars> g{};
      g[i] = 1;
      g[j] = 1;
      auto both = nu_at(g);
      for (int k = 0; k < kVars; ++k) {
        Rational off = (both[k] - diag[i][k] - diag[j][k]) / 2;
        Q[k](i, j) = off;
        Q[k](j, i) = off;
      }
    }
  }
  return Q;
}

InverseResult inverse_spring_map(const MassConfig& mc, const std::array<double, kVars>& nu,
                                 const std::array<double, kVars>& seed, double tol) {
  auto Qx = spring_quadratic_forms(mc);
  std::array<Eigen::Matrix<double, kVars, kVars>, kVars> Q;
  for (int k = 0; k < kVars; ++k)
    for (int i = 0; i < kVars; ++i)
      for (int j = 0; j < kVars; ++j) Q[k](i, j) = Qx[k](i, j).get_d();
  Eigen::Matrix<double, kVars, 1> target, x;
  for (int k = 0; k < kVars; ++k) {
    target(k) = nu[k];
    x(k) = seed[k];
  }
  auto residual = [&](const Eigen::Matrix<double, kVars, 1>& g) {
    Eigen::Matrix<double, kVars, 1> F;
    for (int k = 0; k < kVars; ++k) F(k) = g.dot(Q[k] * g) - target(k);
    return F;
  };
  InverseResult out;
  auto F = residual(x);
  for (int it = 0; it < 100; ++it) {
    double norm = F.cwiseAbs().maxCoeff();
    if (norm < tol) {
      out.iterations = it;
      out.residual = norm;
      for (int k = 0; k < kVars; ++k) out.gauge[k] = x(k);
      bool positive = std::all_of(out.gauge.begin(), out.gauge.end(), [](double v) { return v > 0; });
      out.verdict = positive ? InverseVerdict::ok : InverseVerdict::negative_root;
      return out;
    }
    Eigen::Matrix<double, kVars, kVars> J;
    for (int k = 0; k < kVars; ++k) J.row(k) = 2 * (Q[k] * x).transpose();
    Eigen::Matrix<double, kVars, 1> step = J.fullPivLu().solve(-F);
    if (!step.allFinite()) break;
    double lambda = 1;
    for (int bt = 0; bt < 30; ++bt) {
      auto trial = x + lambda * step;
      auto Ft = residual(trial);
      if (Ft.cwiseAbs().maxCoeff() < norm || bt == 29) {
        x = trial;
        F = Ft;
        break;
      }
      lambda /= 2;
    }
  }
  throw NoConvergence("inverse spring map did not converge in 100 Newton steps",
                      std::vector<double>(x.data(), x.data() + kVars), F.cwiseAbs().maxCoeff());
}

DiffOperator build_nabla_rad(const MassConfig& mc, const GaugeParams& gp) {
  const auto w = weighted_gauge(mc, gp);
  const auto& im = mc.inv_m;
  const auto& [a, b, c, e, f, g] = gp.g;
  const Polynomial r12 = R(0), r13 = R(1), r14 = R(2), r23 = R(3), r24 = R(4), r34 = R(5);
  const Rational &w12 = w[0], &w13 = w[1], &w14 = w[2], &w23 = w[3], &w24 = w[4], &w34 = w[5];

  DiffOperator op;
  op += DiffOperator::d(0, r12 * (2 * a) + (r12 + r13 - r23) * (w13 * im[0]) +
                               (r12 - r13 + r23) * (w23 * im[1]) + (r12 + r14 - r24) * (w14 * im[0]) +
                               (r12 - r14 + r24) * (w24 * im[1]));
  op += DiffOperator::d(1, r13 * (2 * b) + (r12 + r13 - r23) * (w12 * im[0]) +
                               (r13 - r34 + r14) * (w14 * im[0]) + (r23 + r13 - r12) * (w23 * im[2]) +
                               (r34 - r14 + r13) * (w34 * im[2]));
  op += DiffOperator::d(2, r14 * (2 * c) + (r14 + r12 - r24) * (w12 * im[0]) +
                               (r14 + r13 - r34) * (w13 * im[0]) + (r14 + r24 - r12) * (w24 * im[3]) +
                               (r14 + r34 - r13) * (w34 * im[3]));
  op += DiffOperator::d(3, r23 * (2 * e) + (r23 + r12 - r13) * (w12 * im[1]) +
                               (r23 + r13 - r12) * (w13 * im[2]) + (r23 + r24 - r34) * (w24 * im[1]) +
                               (r23 + r34 - r24) * (w34 * im[2]));
  op += DiffOperator::d(4, r24 * (2 * f) + (r24 + r12 - r14) * (w12 * im[1]) +
                               (r24 + r14 - r12) * (w14 * im[3]) + (r24 + r23 - r34) * (w23 * im[1]) +
                               (r24 + r34 - r23) * (w34 * im[3]));
  op += DiffOperator::d(5, r34 * (2 * g) + (r34 + r13 - r14) * (w13 * im[2]) +
                               (r34 + r14 - r13) * (w14 * im[3]) + (r34 + r23 - r24) * (w23 * im[2]) +
                               (r34 + r24 - r23) * (w24 * im[3]));
  return op;
}

DiffOperator build_h_es(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  return -build_delta_rad(mc, d) + build_nabla_rad(mc, gp) * (2 * gp.omega);
}

DiffOperator h_es_by_conjugation(const MassConfig& mc, const GaugeParams& gp, const Rational& d) {
  const auto sm = forward_spring_map(mc, gp, d);
  const auto w = weighted_gauge(mc, gp);
  std::array<Rational, kVars> s;
  for (int k = 0; k < kVars; ++k) s[k] = -gp.omega * w[k];
  DiffOperator H = -build_delta_rad(mc, d) +
                   DiffOperator::multiplication(build_es_potential(sm.nu, gp.omega) - Polynomial(sm.E0));
  return conjugate_exponential(H, Polynomial::linear(s));
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::generic: return "generic";
    case Variant::equal: return "equal";
    case Variant::atomic: return "atomic";
    case Variant::molecular: return "molecular";
    case Variant::three_center: return "three-center";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (Variant v : {Variant::generic, Variant::equal, Variant::atomic, Variant::molecular,
                    Variant::three_center})
    if (to_string(v) == s) return v;
  throw ConfigError("unknown variant: " + s);
}

SpecialModel make_model(Variant v, const MassConfig& generic_masses, const Rational& m) {
  SpecialModel model;
  model.variant = v;
  switch (v) {
    case Variant::generic: model.masses = generic_masses; break;
    case Variant::equal: model.masses = MassConfig::equal(m); break;
    case Variant::atomic: model.masses = special_masses(SpecialVariant::atomic, m); break;
    case Variant::molecular: model.masses = special_masses(SpecialVariant::molecular, m); break;
    case Variant::three_center: model.masses = special_masses(SpecialVariant::three_center, m); break;
  }
  for (int k = 0; k < kVars; ++k)
    (model.masses.mu_defined(k) ? model.dynamical : model.classical).push_back(k);
  return model;
}

VarMask dynamical_mask(const SpecialModel& model) {
  VarMask m = 0;
  for (int k : model.dynamical) m = static_cast<VarMask>(m | (1u << k));
  return m;
}

DiffOperator build_special(const SpecialModel& model, const GaugeParams& gp, const Rational& d) {
  weighted_gauge(model.masses, gp);  // BadLimit on forbidden nonzero parameters
  DiffOperator op = build_h_es(model.masses, gp, d);
  if (op.derivative_support() & ~dynamical_mask(model))
    throw BadLimit("limiting operator differentiates a classical variable");
  return op;
}

DiffOperator freeze_classical(const DiffOperator& op, const SpecialModel& model, const Point& classical) {
  return op.map_coefficients([&](const Polynomial& c) {
    Polynomial out = c;
    for (int k : model.classical) out = out.substitute(k, classical[k]);
    return out;
  });
}

Rational special_ground_energy(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                               const Point& classical) {
  const auto sm = forward_spring_map(model.masses, gp, d);
  Rational e = sm.E0;
  for (int k : model.classical) e -= 2 * gp.omega * gp.omega * sm.nu[k] * classical[k];
  return e;
}

LimitComparison limit_oracle(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                             const Rational& t) {
  MassConfig near = model.masses;
  for (int i = 0; i < 4; ++i)
    if (near.inv_m[i] == 0) near.inv_m[i] = t;
  const DiffOperator lim = build_special(model, gp, d);
  const DiffOperator fin = build_h_es(near, gp, d);
  LimitComparison out{t, 0, true};
  for (const auto& [alpha, c] : lim.terms()) {
    const Polynomial cf = fin.coeff(alpha);
    for (const auto& [m, v] : c.terms())
      if (cf.coeff(m) == 0) out.structural_match = false;
  }
  const DiffOperator diff = fin - lim;
  for (const auto& [alpha, c] : diff.terms())
    for (const auto& [m, v] : c.terms()) out.max_scaled_diff = std::max<Rational>(out.max_scaled_diff, abs(v) / t);
  return out;
}

}  // namespace rhoqes
