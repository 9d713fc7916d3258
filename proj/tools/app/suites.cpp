#include "app/suites.hpp"

#include "app/sampler.hpp"
#include "rhoqes/bo.hpp"
#include "rhoqes/errors.hpp"
#include "rhoqes/geometry.hpp"
#include "rhoqes/jacobi.hpp"
#include "rhoqes/oscillator.hpp"
#include "rhoqes/reduced.hpp"
#include "rhoqes/sl7.hpp"
#include "rhoqes/spectra.hpp"
#include "rhoqes/symmetries.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

namespace rhoqes::app {

namespace {

using nlohmann::json;

template <std::size_t K>
json pq_array(const std::array<Rational, K>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(pq(x));
  return a;
}

json energy_json(const Energy& e) {
  if (e.exact) return pq(*e.exact);
  return e.value;
}

std::string clip(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

// A check whose body may throw; exceptions become a fail with the message attached.
template <class F>
Check checked(std::string id, F&& body) {
  Check c{std::move(id), Status::fail, json::object()};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = Status::fail;
    c.details["error"] = e.what();
  }
  return c;
}

bool all_finite(const MassConfig& mc) { return mc.infinite_count() == 0; }

// The configured masses when usable for a generic-mass check, then random draws.
std::vector<MassConfig> mass_draws(const Model& mdl, Sampler& rng, int n) {
  std::vector<MassConfig> out;
  if (all_finite(mdl.masses)) out.push_back(mdl.masses);
  while (static_cast<int>(out.size()) < n) out.push_back(rng.mass_config());
  return out;
}

Point ones() {
  Point x;
  x.fill(Rational(1));
  return x;
}

// Unit gauge with the parameters the limit requires to vanish set to zero.
GaugeParams limit_gauge(const SpecialModel& sm, GaugeParams gp) {
  for (int k : sm.classical) gp.g[k] = 0;
  return gp;
}

DiffOperator model_operator(const Model& mdl, VarMask& mask) {
  mask = kAllVars;
  if (mdl.variant == Variant::generic || mdl.variant == Variant::equal)
    return build_h_es(mdl.masses, mdl.gauge, mdl.d);
  mask = dynamical_mask(mdl.special);
  return freeze_classical(build_special(mdl.special, mdl.gauge, mdl.d), mdl.special, mdl.classical);
}

}  // namespace

// ---------------------------------------------------------------- geometry

std::vector<Check> geometry_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "geometry");

  out.push_back(checked("geometry.cayley_menger", [&](Check& c) {
    const Rational unit = v4_squared(ones());
    int bad = 0;
    for (int i = 0; i < o.cm_points; ++i) {
      const Point x = rng.interior_point();
      if (v4_squared(x) != cayley_menger_v4_squared(x)) {
        if (!bad) c.details["first_mismatch"] = pq_array(x);
        ++bad;
      }
    }
    c.details["points"] = o.cm_points;
    c.details["mismatches"] = bad;
    c.details["v4_squared_unit"] = pq(unit);
    c.status = pass_if(bad == 0 && unit == Rational(1, 72) && cayley_menger_v4_squared(ones()) == unit);
  }));

  out.push_back(checked("geometry.det_identity", [&](Check& c) {
    int bad = 0, total = 0, non_positive = 0;
    json sample;
    for (const auto& mc : mass_draws(mdl, rng, o.det_masses)) {
      for (int i = 0; i < o.det_points; ++i) {
        const Point x = rng.interior_point();
        const auto r = det_identity_check(mc, x);
        if (total == 0) sample = {{"masses", pq_array(mc.inv_m)}, {"point", pq_array(x)}, {"det", pq(r.lhs)}};
        ++total;
        if (!r.equal) {
          if (!bad) c.details["first_mismatch"] = {{"lhs", pq(r.lhs)}, {"rhs", pq(r.rhs)}};
          ++bad;
        }
        non_positive += r.lhs <= 0;  // positive definite in the interior
      }
    }
    c.details["evaluations"] = total;
    c.details["mismatches"] = bad;
    c.details["non_positive"] = non_positive;
    c.details["sample"] = sample;
    c.status = pass_if(bad == 0 && non_positive == 0);
  }));

  out.push_back(checked("geometry.domain", [&](Check& c) {
    const Point regular = ones();
    const Point collinear{1, 4, 1, 1, 2, 5};    // particles 1,2,3 on a line
    const Point broken{1, 1, 1, 1, 1, 16};      // face (1,3,4) violates the triangle inequality
    const auto a = domain_check(regular), b = domain_check(collinear), e = domain_check(broken);
    c.details = {{"regular", to_string(a)}, {"collinear", to_string(b)}, {"triangle_violation", to_string(e)}};
    c.status = pass_if(a == Domain::interior && b == Domain::boundary && e == Domain::exterior);
  }));

  out.push_back(checked("geometry.veff_reading", [&](Check& c) {
    const MassConfig mc = all_finite(mdl.masses) ? mdl.masses : MassConfig::finite({1, 2, 3, 4});
    // The two gauge exponents coincide at d = 4; use a dimension that separates them.
    const Rational d = mdl.d == 4 ? Rational(3) : mdl.d;
    const int n = 5;
    int measure = 0, literal = 0;
    for (int i = 0; i < n; ++i) {
      const Point x = rng.interior_point();
      const auto v = gauge_factor_and_veff(mc, d, x);
      measure += v.transcribed == v.oracle_measure;
      literal += v.transcribed == v.oracle_literal;
      if (i == 0)
        c.details["sample"] = {{"point", pq_array(x)},
                               {"transcribed", pq(v.transcribed)},
                               {"oracle_measure_gauge", pq(v.oracle_measure)},
                               {"oracle_literal_gauge", pq(v.oracle_literal)},
                               {"alt_sum_of_squares", pq(v.alt_sum_of_squares)},
                               {"alt_unsquared", pq(v.alt_unsquared)}};
    }
    c.details["d"] = pq(d);
    c.details["points"] = n;
    c.details["matches_measure_gauge"] = measure;
    c.details["matches_literal_gauge"] = literal;
    c.details["verdict"] =
        "the effective potential formula equals -[Delta Gamma]/Gamma for Gamma = D^(-1/4) (V4^2)^((4-d)/4), "
        "the factor consistent with the measure V4^(d-4); the gauge exponent (1-d/4)/2 taken literally gives a "
        "different potential";
    if (measure == n && literal == n) c.status = Status::pass;
    else if (measure == n) c.status = Status::reported_discrepancy;
    else c.status = Status::fail;
  }));

  out.push_back(checked("geometry.special_determinants", [&](Check& c) {
    bool ok = true;
    for (auto v : {SpecialVariant::atomic, SpecialVariant::molecular, SpecialVariant::three_center}) {
      const Rational m = rng.positive();
      int bad = 0;
      for (int i = 0; i < 10; ++i) {
        const auto r = special_determinants(v, m, rng.interior_point());
        if (r.direct != r.displayed) ++bad;
      }
      const char* name = v == SpecialVariant::atomic ? "atomic" : v == SpecialVariant::molecular ? "molecular"
                                                                                                 : "three-center";
      c.details[name] = {{"m", pq(m)}, {"points", 10}, {"mismatches", bad}};
      ok = ok && bad == 0;
    }
    c.status = pass_if(ok);
  }));
  return out;
}

// ---------------------------------------------------------------- oscillator

std::vector<Check> oscillator_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "oscillator");

  out.push_back(checked("oscillator.ground_state", [&](Check& c) {
    int bad = 0;
    for (int i = 0; i < o.ground_draws; ++i) {
      const auto mc = rng.mass_config();
      const auto gp = rng.gauge();
      const auto d = rng.dimension();
      if (!build_h_es(mc, gp, d)(Polynomial(1)).is_zero()) ++bad;
    }
    VarMask mask;
    const bool model_ok = model_operator(mdl, mask)(Polynomial(1)).is_zero();
    c.details = {{"draws", o.ground_draws}, {"failures", bad}, {"configured_model", model_ok}};
    c.status = pass_if(bad == 0 && model_ok);
  }));

  out.push_back(checked("oscillator.conjugation", [&](Check& c) {
    int bad = 0;
    const int n = 5;
    for (int i = 0; i < n; ++i) {
      const auto mc = rng.mass_config();
      const auto gp = rng.gauge();
      const auto d = rng.dimension();
      if (build_h_es(mc, gp, d) != h_es_by_conjugation(mc, gp, d)) ++bad;
    }
    c.details = {{"draws", n}, {"failures", bad}};
    c.status = pass_if(bad == 0);
  }));

  out.push_back(checked("oscillator.springs_equal", [&](Check& c) {
    const auto sm = forward_spring_map(MassConfig::equal(1), GaugeParams{}, 3);
    bool ok = sm.E0 == 18;
    for (const auto& v : sm.nu) ok = ok && v == 1;
    c.details = {{"nu", pq_array(sm.nu)}, {"E0", pq(sm.E0)}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("oscillator.springs_printed", [&](Check& c) {
    std::vector<MassConfig> masses{MassConfig::finite({1, 2, 3, 4})};
    if (all_finite(mdl.masses)) masses.push_back(mdl.masses);
    masses.push_back(rng.mass_config());
    static const int slots[] = {0, 1, 5};
    static const char* names[] = {"nu12", "nu13", "nu34"};
    std::array<int, 3> agree{};
    for (std::size_t i = 0; i < masses.size(); ++i) {
      const auto gp = rng.gauge();
      const auto printed = printed_spring_relations(masses[i], gp);
      const auto derived = forward_spring_map(masses[i], gp).nu;
      json row = {{"inverse_masses", pq_array(masses[i].inv_m)}, {"gauge", pq_array(gp.g)}};
      for (int s = 0; s < 3; ++s) {
        const int k = slots[s];
        const bool eq = printed[k] && *printed[k] == derived[k];
        agree[s] += eq;
        row[names[s]] = {{"printed", printed[k] ? pq(*printed[k]) : "n/a"}, {"derived", pq(derived[k])}};
      }
      c.details["draws"].push_back(row);
    }
    const int n = static_cast<int>(masses.size());
    c.details["agree"] = {{"nu12", agree[0]}, {"nu13", agree[1]}, {"nu34", agree[2]}};
    if (agree[0] == n && agree[1] == n && agree[2] == n) c.status = Status::pass;
    else if (agree[0] == n && agree[1] == n) {
      c.status = Status::reported_discrepancy;
      c.details["verdict"] = "printed nu34 relation disagrees with the spring constants derived from the ground state";
    } else {
      c.status = Status::fail;
    }
  }));

  out.push_back(checked("oscillator.springs_quadratic_forms", [&](Check& c) {
    const auto mc = rng.mass_config();
    const auto gp = rng.gauge();
    const auto Q = spring_quadratic_forms(mc);
    const auto nu = forward_spring_map(mc, gp).nu;
    bool ok = true;
    for (int k = 0; k < kVars; ++k) {
      Rational s = 0;
      for (int i = 0; i < kVars; ++i)
        for (int j = 0; j < kVars; ++j) s += gp.g[i] * Q[k](i, j) * gp.g[j];
      ok = ok && s == nu[k];
    }
    c.details = {{"inverse_masses", pq_array(mc.inv_m)}, {"nu", pq_array(nu)}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("oscillator.springs_inverse", [&](Check& c) {
    const int n = 5;
    double worst = 0;
    int bad = 0;
    for (int i = 0; i < n; ++i) {
      const auto mc = rng.mass_config();
      const auto gp = rng.gauge();
      const auto nu = forward_spring_map(mc, gp).nu;
      std::array<double, kVars> target{}, seed{};
      for (int k = 0; k < kVars; ++k) {
        target[k] = to_double(nu[k]);
        seed[k] = 1.1 * to_double(gp.g[k]);
      }
      try {
        const auto r = inverse_spring_map(mc, target, seed);
        worst = std::max(worst, r.residual);
        if (!(r.residual < 1e-10)) ++bad;
      } catch (const NoConvergence&) {
        ++bad;
      }
    }
    c.details = {{"draws", n}, {"failures", bad}, {"max_residual", worst}};
    c.status = pass_if(bad == 0);
  }));
  return out;
}

// ---------------------------------------------------------------- sl7

std::vector<Check> sl7_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "sl7");

  out.push_back(checked("sl7.relations", [&](Check& c) {
    const auto r = verify_algebra_relations(Rational(3));
    c.details = {{"N", 3}, {"checked", r.checked}, {"failures", r.failures.size()}};
    if (!r.ok()) c.details["first_failure"] = r.failures.front().name;
    c.status = pass_if(r.ok() && r.checked > 0);
  }));

  out.push_back(checked("sl7.generator_flags", [&](Check& c) {
    bool ok = true;
    for (int N = 0; N <= o.flag_N; ++N) {
      const auto r = flag_action_check(N);
      c.details["N" + std::to_string(N)] = {{"dimension", r.dimension}, {"violations", r.violations.size()}};
      ok = ok && r.ok();
    }
    c.status = pass_if(ok);
  }));

  out.push_back(checked("sl7.generator_equivalence", [&](Check& c) {
    int bad = 0, flag_bad = 0;
    std::vector<std::tuple<MassConfig, GaugeParams, Rational>> draws;
    if (mdl.variant == Variant::generic || mdl.variant == Variant::equal)
      draws.emplace_back(mdl.masses, mdl.gauge, mdl.d);
    for (int i = 0; i < o.sl7_draws; ++i) draws.emplace_back(rng.mass_config(), rng.gauge(), rng.dimension());
    for (const auto& [mc, gp, d] : draws) {
      const auto a = h_es_from_generators(mc, gp, d);
      const auto b = build_h_es(mc, gp, d);
      if (a != b) ++bad;
      for (const auto* op : {&a, &b}) {
        try {
          matrix_on_basis(*op, o.flag_N);
        } catch (const FlagViolation&) {
          ++flag_bad;
        }
      }
    }
    c.details = {{"draws", draws.size()}, {"mismatches", bad}, {"flag_N", o.flag_N}, {"flag_violations", flag_bad}};
    c.status = pass_if(bad == 0 && flag_bad == 0);
  }));

  for (auto f : {LieForm::equal_literal, LieForm::equal_grouped, LieForm::atomic, LieForm::molecular_literal,
                 LieForm::molecular_corrected, LieForm::three_center}) {
    out.push_back(checked("sl7.lie_form." + to_string(f), [&](Check& c) {
      const Variant v = (f == LieForm::equal_literal || f == LieForm::equal_grouped) ? Variant::equal
                        : f == LieForm::atomic                                        ? Variant::atomic
                        : f == LieForm::three_center                                  ? Variant::three_center
                                                                                      : Variant::molecular;
      const Rational m = rng.positive();
      const Rational d = rng.dimension();
      const auto sm = make_model(v, MassConfig::equal(m), m);
      GaugeParams gp = limit_gauge(sm, rng.gauge());
      if (v == Variant::equal) gp = GaugeParams::uniform(gp.g[0], gp.omega);  // the equal-mass form has one a
      const auto lhs = lie_form(f, m, gp, d).realize(0);
      const auto rhs = lie_form_target(f, m, gp, d);
      const auto diff = lhs - rhs;
      c.details = {{"m", pq(m)}, {"d", pq(d)}, {"gauge", pq_array(gp.g)}, {"omega", pq(gp.omega)},
                   {"differing_terms", diff.size()}};
      if (diff.is_zero()) {
        c.status = Status::pass;
      } else if (f == LieForm::equal_literal || f == LieForm::molecular_literal) {
        c.status = Status::reported_discrepancy;
        c.details["difference"] = clip(diff.to_string());
        c.details["verdict"] = f == LieForm::equal_literal
                                   ? "with the bracket closed as printed the form does not reproduce the operator; "
                                     "grouping all mixed terms inside the -2/m bracket does"
                                   : "the printed molecular form needs the d-term, J4/J5 coefficients and f-term "
                                     "repaired to reproduce the operator";
      } else {
        c.status = Status::fail;
        c.details["difference"] = clip(diff.to_string());
      }
    }));
  }
  return out;
}

// ---------------------------------------------------------------- spectrum

std::vector<Check> spectrum_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;

  out.push_back(checked("spectrum.equal_mass", [&](Check& c) {
    const auto s = spectrum(build_h_es(MassConfig::equal(1), GaugeParams{}, 3), 2);
    std::map<Rational, int> mult;
    bool exact = true;
    for (const auto& e : s.eigenvalues) {
      if (!e.exact) exact = false;
      else ++mult[*e.exact];
    }
    json m = json::object();
    for (const auto& [e, k] : mult) m[pq(e)] = k;
    c.details = {{"N", 2}, {"dimension", s.dimension}, {"multiplicities", m}};
    const std::map<Rational, int> want{{Rational(0), 1}, {Rational(8), 6}, {Rational(16), 21}};
    c.status = pass_if(exact && mult == want && s.block_triangular);
  }));

  out.push_back(checked("spectrum.general_linearity", [&](Check& c) {
    const auto s = spectrum(build_h_es(MassConfig::finite({1, 2, 3, 4}), GaugeParams{}, 3), 2);
    json f = json::array();
    for (const auto& l : s.frequencies.lambda) f.push_back(energy_json(l));
    c.details = {{"N", 2}, {"frequencies", f}, {"frequencies_exact", s.frequencies.exact},
                 {"linearity_error", s.linearity_error}, {"levels", s.levels.size()}};
    c.status = pass_if(s.linear && s.linearity_error < 1e-9);
  }));

  out.push_back(checked("spectrum.configured_model", [&](Check& c) {
    VarMask mask;
    const auto h = model_operator(mdl, mask);
    const int N = std::clamp(o.N, 0, 3);
    const auto s = spectrum(h, N, mask);
    json f = json::array();
    for (const auto& l : s.frequencies.lambda) f.push_back(energy_json(l));
    c.details = {{"variant", to_string(mdl.variant)}, {"N", N}, {"dimension", s.dimension}, {"frequencies", f},
                 {"linearity_error", s.linearity_error}};
    bool closed = true;
    if (mdl.variant != Variant::generic && mdl.variant != Variant::equal) {
      const Rational base = special_ground_energy(mdl.special, mdl.gauge, mdl.d, mdl.classical);
      c.details["ground_energy"] = pq(base);
      for (const auto& lv : s.levels) {
        const auto e = closed_form_special_energy(mdl.special, mdl.gauge, mdl.d, lv.quantum, mdl.classical);
        if (std::abs(e.value - to_double(base) - lv.energy.value) > 1e-9 * (1 + std::abs(e.value))) closed = false;
      }
    }
    c.status = pass_if(s.linear && s.block_triangular && closed);
  }));

  for (auto v : {Variant::atomic, Variant::molecular, Variant::three_center}) {
    out.push_back(checked("spectrum.special." + to_string(v), [&](Check& c) {
      const auto sm = make_model(v, MassConfig::equal(1), 1);
      const GaugeParams gp = limit_gauge(sm, GaugeParams{});
      const Point cl = ones();
      const auto h = freeze_classical(build_special(sm, gp, 3), sm, cl);
      const auto s = spectrum(h, 2, dynamical_mask(sm));
      const Rational base = special_ground_energy(sm, gp, 3, cl);
      const auto ground = closed_form_special_energy(sm, gp, 3, std::vector<int>(sm.dynamical.size(), 0), cl);
      json f = json::array();
      for (const auto& l : s.frequencies.lambda) f.push_back(energy_json(l));
      c.details = {{"frequencies", f}, {"ground_energy", pq(base)}, {"linearity_error", s.linearity_error},
                   {"dynamical", sm.dynamical.size()}};
      c.status = pass_if(s.linear && std::abs(ground.value - to_double(base)) < 1e-12 * (1 + to_double(base)));
    }));
  }
  return out;
}

// ---------------------------------------------------------------- symmetries

std::vector<Check> symmetry_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "symmetry");

  out.push_back(checked("symmetry.suite", [&](Check& c) {
    std::vector<std::pair<MassConfig, Rational>> draws;
    if (all_finite(mdl.masses)) draws.emplace_back(mdl.masses, mdl.d);
    for (int i = 0; i < o.symmetry_draws; ++i) draws.emplace_back(rng.mass_config(), rng.dimension());
    std::map<std::string, int> failures;
    bool ok = true;
    for (const auto& [mc, d] : draws) {
      const auto s = verify_symmetry_suite(mc, d);
      for (const auto& ch : s.checks) {
        failures[ch.id] += !ch.pass;
        ok = ok && ch.pass;
      }
    }
    const auto& mc0 = draws.front().first;
    c.details = {{"draws", draws.size()},
                 {"failures", failures},
                 {"so3_constants",
                  {{"k12", pq(so3_constant(mc0, 1, 2))},
                   {"k31", pq(so3_constant(mc0, 3, 1))},
                   {"k23", pq(so3_constant(mc0, 2, 3))},
                   {"inverse_masses", pq_array(mc0.inv_m)}}}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("symmetry.printed_s_decomposition", [&](Check& c) {
    const auto mc = MassConfig::finite({Rational(3, 2), 5, Rational(7, 3), 2});
    const Rational d = Rational(7, 2);
    const auto lap = build_delta_rad(mc, d);
    DiffOperator printed, corrected;
    int printed_commuting = 0;
    for (int i = 1; i <= 4; ++i) {
      const auto p = printed_second_order(mc, d, i);
      printed += p * mc.inv_m[i - 1];
      corrected += build_second_order(mc, d, i).op * mc.inv_m[i - 1];
      printed_commuting += commutator(lap, p).is_zero();
    }
    const auto pr = printed - lap, cr = corrected - lap;
    c.details = {{"inverse_masses", pq_array(mc.inv_m)},
                 {"d", pq(d)},
                 {"printed_residual_terms", pr.size()},
                 {"printed_residual", clip(pr.to_string())},
                 {"corrected_residual_terms", cr.size()},
                 {"printed_commuting_with_laplacian", printed_commuting},
                 {"verdict", "sum S_i/m_i = Delta_rad fails for S_1..S_4 as printed and holds for the corrected form"}};
    if (!cr.is_zero()) c.status = Status::fail;
    else c.status = pr.is_zero() ? Status::pass : Status::reported_discrepancy;
  }));

  out.push_back(checked("symmetry.j3_s1_prefactor", [&](Check& c) {
    const auto mc = MassConfig::finite({Rational(3, 2), 5, Rational(7, 3), 2});
    const auto s = verify_symmetry_suite(mc, Rational(7, 2));
    if (!s.j3s1_factor) {
      c.details["error"] = "[B3,S1] not proportional to m3 S5 - m4 S6";
      return;
    }
    const Rational k = *s.j3s1_factor;
    c.details = {{"m1", pq(mc.mass(0))},
                 {"k", pq(k)},
                 {"k_squared", pq(k * k)},
                 {"printed_square", pq(s.j3s1_printed_square)},
                 {"verdict", "the computed factor is -1/(2 m1); its square differs from the printed 1/(4 m1) unless m1 = 1"}};
    c.status = k * k == s.j3s1_printed_square ? Status::pass : Status::reported_discrepancy;
  }));

  out.push_back(checked("symmetry.negative_control", [&](Check& c) {
    const auto mc = MassConfig::finite({1, 2, 3, 4});
    const auto s = verify_symmetry_suite(mc, 3, true);
    json failed = json::array();
    for (const auto& ch : s.checks)
      if (!ch.pass) failed.push_back(ch.id);
    c.details = {{"corrupted", "sign of one cross term in S1"}, {"failed_checks", failed}};
    c.status = pass_if(!s.ok());
  }));
  return out;
}

// ---------------------------------------------------------------- reduced representation

std::vector<Check> reduction_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "reduction");
  const Rational A(1, 2);
  const Rational w = mdl.gauge.omega, d = mdl.d;

  out.push_back(checked("reduced.volume_vars", [&](Check& c) {
    const auto vv = volume_vars(MassConfig::equal(1));
    const Rational P = vv.P.eval(ones()), S = vv.S.eval(ones());
    c.details = {{"P_unit", pq(P)}, {"S_unit", pq(S)}};
    c.status = pass_if(P == Rational(3, 2) && S == 12);
  }));

  out.push_back(checked("reduced.p_reduction", [&](Check& c) {
    std::vector<MultiIndex> mons;
    for (int k = 0; k <= 4; ++k) mons.push_back(MultiIndex::unit(kSlotP, k));
    int bad = 0, total = 0;
    for (const auto& mc : mass_draws(mdl, rng, 3)) {
      for (const auto& r : reduction_check(mc, d, build_delta_P(d), mons)) {
        ++total;
        bad += !r.exact;
      }
    }
    c.details = {{"monomials", "P^0..P^4"}, {"checks", total}, {"failures", bad}};
    c.status = pass_if(bad == 0);
  }));

  out.push_back(checked("reduced.chain_rule", [&](Check& c) {
    bool ok = true;
    for (const auto& mc : mass_draws(mdl, rng, 3)) {
      const auto cr = chain_rule(mc, d);
      const auto vv = volume_vars(mc);
      const auto lap = build_delta_rad(mc, d);
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; j + k <= 2; ++k) {
          MultiIndex m;
          m.e[kSlotP] = static_cast<std::uint8_t>(j);
          m.e[kSlotS] = static_cast<std::uint8_t>(k);
          const auto f = Polynomial::monomial(m);
          ok = ok && chain_rule_apply(cr, vv, f) == lap(f.compose({vv.P, vv.S}));
        }
      ok = ok && cr.g_pp_closes && cr.lap_p_closes && cr.lap_s_closes;
    }
    c.details = {{"draws", 3}, {"monomials", "P^j S^k, j+k <= 2"}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("reduced.delta_ps_completeness", [&](Check& c) {
    const auto mc = all_finite(mdl.masses) ? mdl.masses : MassConfig::finite({1, 2, 3, 4});
    std::vector<MultiIndex> mons;
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; j + k <= 2; ++k) {
        MultiIndex m;
        m.e[kSlotP] = static_cast<std::uint8_t>(j);
        m.e[kSlotS] = static_cast<std::uint8_t>(k);
        mons.push_back(m);
      }
    json exact = json::array(), inexact = json::array();
    for (const auto& r : reduction_check(mc, d, build_delta_PS(mc, d), mons)) {
      const std::string name = "P^" + std::to_string(r.monomial.e[kSlotP]) + " S^" + std::to_string(r.monomial.e[kSlotS]);
      (r.exact ? exact : inexact).push_back(name);
    }
    const auto cr = chain_rule(mc, d);
    c.details = {{"inverse_masses", pq_array(mc.inv_m)},
                 {"exact_monomials", exact},
                 {"inexact_monomials", inexact},
                 {"g_pp_equals_2P", cr.g_pp_closes},
                 {"g_ps_equals_4S", cr.g_ps_closes},
                 {"lap_p_equals_3d", cr.lap_p_closes},
                 {"lap_s_equals_8M(d-1)P", cr.lap_s_closes},
                 {"g_ss_minus_8MPS_over_V4sq", cr.g_ss_v4_factor ? pq(*cr.g_ss_v4_factor) : "not proportional"},
                 {"3456_prod_m_M", pq(3456 * mc.product() * mc.total())}};
    c.details["verdict"] =
        "the displayed two-variable operator lacks the mixed term 2 g_ps d_P d_S with g_ps = 4S and uses "
        "g_ss = 8MPS, while g_ss - 8MPS = 3456 (m1 m2 m3 m4) M V4^2; the reduction closes on the P-line only";
    const bool facts = cr.g_ps_closes && cr.g_ss_v4_factor && *cr.g_ss_v4_factor == 3456 * mc.product() * mc.total();
    if (!facts) c.status = Status::fail;
    else c.status = inexact.empty() ? Status::pass : Status::reported_discrepancy;
  }));

  out.push_back(checked("reduced.qes_flag", [&](Check& c) {
    bool ok = true;
    double worst = 0;
    for (int N = 0; N <= 6; ++N) {
      const auto q = qes_model(A, w, d, N);
      ok = ok && q.flag_preserved && h_qes(A, w, d, N) == h_qes_gauge_form(A, w, d, N);
      worst = std::max(worst, q.residual);
    }
    c.details = {{"A", pq(A)}, {"omega", pq(w)}, {"d", pq(d)}, {"N_max", 6}, {"max_eigen_residual", worst}};
    c.status = pass_if(ok && worst < 1e-8);
  }));

  out.push_back(checked("reduced.qes_n1_exact", [&](Check& c) {
    const auto r = qes_exact_n1(A, w, d);
    c.details = {{"discriminant", pq(r.discriminant)}, {"eigen_equations_hold", r.eigen_equations_hold}};
    c.status = pass_if(r.eigen_equations_hold);
  }));

  out.push_back(checked("reduced.qes_a0_triangular", [&](Check& c) {
    const auto q = qes_model(0, w, d, 4);
    bool ok = q.matrix.is_upper_triangular();
    json diag = json::array();
    for (std::size_t k = 0; k < q.matrix.rows(); ++k) {
      diag.push_back(pq(q.matrix(k, k)));
      ok = ok && q.matrix(k, k) == 4 * w * static_cast<long>(k);
    }
    c.details = {{"N", 4}, {"diagonal", diag}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("reduced.qes_potential", [&](Check& c) {
    // (-Delta_LB + V) p psi0 / psi0 - 3 d omega p must reproduce h_qes p at every P.
    bool derived_ok = true, displayed_ok = true;
    const int N = 2;
    for (int k = 0; k <= N; ++k)
      for (const Rational P : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
        const auto p = Polynomial::monomial(MultiIndex::unit(kSlotP, k));
        Point x{};
        x[kSlotP] = P;
        const Rational h = h_qes(A, w, d, N)(p).eval(x);
        const Rational base = 3 * d * w * p.eval(x);
        derived_ok = derived_ok &&
                     lb_action_over_psi0(p, A, w, d, qes_potential_derived(A, w, d, N, P), P) - base == h;
        displayed_ok = displayed_ok &&
                       lb_action_over_psi0(p, A, w, d, qes_potential_displayed(A, w, d, N, P), P) - base == h;
      }
    const Rational P1 = 1;
    c.details = {{"N", N},
                 {"derived_reproduces_h_qes", derived_ok},
                 {"displayed_reproduces_h_qes", displayed_ok},
                 {"derived_at_P1", pq(qes_potential_derived(A, w, d, N, P1))},
                 {"displayed_at_P1", pq(qes_potential_displayed(A, w, d, N, P1))},
                 {"verdict", "the potential matching the sl(2) operator is V0 - 4NAP; the displayed form differs"}};
    if (!derived_ok) c.status = Status::fail;
    else c.status = displayed_ok ? Status::pass : Status::reported_discrepancy;
  }));

  out.push_back(checked("reduced.laguerre", [&](Check& c) {
    bool ok = true;
    json energies = json::array();
    for (int N = 0; N <= o.laguerre_max; ++N) {
      const auto l = es_laguerre(d, w, N);
      ok = ok && l.residual_zero && l.energy == (3 * d + 4 * N) * w;
      energies.push_back(pq(l.energy));
    }
    c.details = {{"d", pq(d)}, {"omega", pq(w)}, {"energies", energies},
                 {"ground_energy_is_3d_omega", es_laguerre(d, w, 0).energy == 3 * d * w}};
    c.status = pass_if(ok);
  }));

  out.push_back(checked("reduced.gauge", [&](Check& c) {
    const auto g = gauge_check(d);
    const Rational want = 3 * (d - 1) * (3 * d - 1) / 8;
    c.details = {{"first_order", pq(g.first_order)}, {"potential_coeff", pq(g.potential_coeff)}, {"expected", pq(want)}};
    c.status = pass_if(g.first_order == 1 && g.matches_u_eff && g.potential_coeff == want);
  }));
  return out;
}

// ---------------------------------------------------------------- Born-Oppenheimer

std::vector<Check> bo_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  auto expansion_json = [](const BOExpansion& e) {
    json m = json::array();
    for (const auto& v : e.m_values) m.push_back(pq(v));
    return json{{"m_values", m}, {"gaps", e.gaps}, {"leading", e.leading}, {"leading_expected", e.leading_expected},
                {"c2", e.c2}, {"c2_expected", e.c2_expected}, {"ratio", e.ratio}};
  };

  out.push_back(checked("bo.leading", [&](Check& c) {
    GaugeParams gp;  // b = c = e = f = 1, omega = 1
    const auto e = bo_gap_expansion_check(gp, 3, {Rational(1, 10000), Rational(1, 1000)});
    c.details = expansion_json(e);
    c.status = pass_if(e.leading_ok && e.ratio >= 9.5 && e.ratio <= 10.5);
  }));

  out.push_back(checked("bo.second_order", [&](Check& c) {
    bool ok = true;
    for (int a : {1, 2, 5}) {
      GaugeParams gp;
      gp.g[0] = a;
      const auto e = bo_gap_expansion_check(gp, 3);
      c.details["a" + std::to_string(a)] = expansion_json(e);
      ok = ok && e.leading_ok && e.c2_ok;
    }
    c.status = pass_if(ok);
  }));

  out.push_back(checked("bo.configured", [&](Check& c) {
    GaugeParams gp = mdl.gauge;
    if (gp.g[0] <= 0) gp.g[0] = 1;  // the nuclear pair needs a bound ground state
    const auto e = bo_gap_expansion_check(gp, mdl.d, o.electron_masses);
    c.details = expansion_json(e);
    c.details["gauge"] = pq_array(gp.g);
    c.status = pass_if(e.leading_ok);
  }));
  return out;
}

// ---------------------------------------------------------------- Jacobi

std::vector<Check> jacobi_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "jacobi");

  out.push_back(checked("jacobi.kinetic", [&](Check& c) {
    int bad = 0;
    double worst = 0;
    for (int i = 0; i < o.kinetic_draws; ++i) {
      const auto k = kinetic_diagonalization_check(rng.masses());
      worst = std::max(worst, k.max_off_diagonal);
      if (!k.diagonal_unit || !k.off_diagonal_exact_zero || !(k.max_off_diagonal < 1e-12)) ++bad;
    }
    c.details = {{"draws", o.kinetic_draws}, {"failures", bad}, {"max_off_diagonal", worst}};
    c.status = pass_if(bad == 0);
  }));

  out.push_back(checked("jacobi.quadratic_form", [&](Check& c) {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      ParticleSystem ps;
      ps.masses = rng.masses();
      for (auto& r : ps.positions) {
        r.resize(3);
        for (auto& x : r) x = Rational(rng.integer(-20, 20), rng.integer(1, 4));
      }
      worst = std::max(worst, quadratic_form_error(ps));
    }
    c.details = {{"systems", 10}, {"max_error", worst}};
    c.status = pass_if(worst < 1e-9);
  }));

  out.push_back(checked("jacobi.spectrum_oracle", [&](Check& c) {
    double worst = 0;
    for (int i = 0; i < o.oracle_draws; ++i) {
      std::array<Rational, 3> A{rng.positive(5, 3), rng.positive(5, 3), rng.positive(5, 3)};
      std::array<int, 3> n{rng.integer(0, 2), rng.integer(0, 2), rng.integer(0, 2)};
      const Rational w = rng.positive(3, 2), d = rng.dimension();
      const double closed = jacobi_spectrum(A, w, d, n);
      double oracle = 0;
      for (int j = 0; j < 3; ++j) oracle += radial_oracle(A[j], w, d, n[j]);
      worst = std::max(worst, std::abs(closed - oracle));
    }
    c.details = {{"draws", o.oracle_draws}, {"max_abs_error", worst}};
    c.status = pass_if(worst < 1e-6);
  }));

  out.push_back(checked("jacobi.moment_of_inertia", [&](Check& c) {
    std::vector<std::array<Rational, 4>> sets{{1, 1, 1, 1}, {1, 2, 3, 4}};
    if (all_finite(mdl.masses)) {
      std::array<Rational, 4> m;
      for (int i = 0; i < 4; ++i) m[i] = mdl.masses.mass(i);
      sets.push_back(m);
    }
    bool unit = true, mu_differs = false;
    for (const auto& m : sets) {
      const auto f = moment_of_inertia_form(m);
      c.details["forms"].push_back({{"masses", pq_array(m)},
                                    {"coefficients", f.coefficients},
                                    {"max_cross", f.max_cross},
                                    {"mu_claim", f.mu_claim}});
      for (double x : f.coefficients) unit = unit && std::abs(x - 1) < 1e-12;
      unit = unit && f.max_cross < 1e-12;
      for (double x : f.coefficients) mu_differs = mu_differs || std::abs(x - f.mu_claim) > 1e-9;
    }
    c.details["verdict"] =
        "with mass-weighted Jacobi vectors the moment of inertia is R0^2 + sum rJ^2, so each A_i is 1 rather than "
        "mu = (m1 m2 m3 m4 / M)^(1/3)";
    if (!unit) c.status = Status::fail;
    else c.status = mu_differs ? Status::reported_discrepancy : Status::pass;
  }));
  return out;
}

// ---------------------------------------------------------------- special limits

std::vector<Check> special_suite(const Model& mdl, const SuiteOptions& o) {
  std::vector<Check> out;
  Sampler rng(o.seed, "special");

  for (auto v : {Variant::atomic, Variant::molecular, Variant::three_center}) {
    out.push_back(checked("special.limit." + to_string(v), [&](Check& c) {
      const Rational m = rng.positive();
      const auto sm = make_model(v, MassConfig::equal(m), m);
      const GaugeParams gp = limit_gauge(sm, rng.gauge());
      const Rational d = rng.dimension();
      const auto coarse = limit_oracle(sm, gp, d, Rational(1, 100));
      const auto fine = limit_oracle(sm, gp, d, Rational(1, 10000));
      const bool ground = build_special(sm, gp, d)(Polynomial(1)).is_zero();
      c.details = {{"m", pq(m)},
                   {"d", pq(d)},
                   {"gauge", pq_array(gp.g)},
                   {"scaled_diff_t_1e-2", pq(coarse.max_scaled_diff)},
                   {"scaled_diff_t_1e-4", pq(fine.max_scaled_diff)},
                   {"structural_match", coarse.structural_match && fine.structural_match},
                   {"ground_state", ground}};
      // |c(t) - c(0)| / t stays bounded as t -> 0: the difference vanishes linearly.
      c.status = pass_if(coarse.structural_match && fine.structural_match && ground &&
                         fine.max_scaled_diff <= 2 * coarse.max_scaled_diff + 1);
    }));
  }

  out.push_back(checked("special.molecular_ground_energy", [&](Check& c) {
    const Rational m = mdl.variant == Variant::molecular ? mdl.m : Rational(1);
    const auto sm = make_model(Variant::molecular, MassConfig::equal(m), m);
    GaugeParams gp = mdl.variant == Variant::molecular ? mdl.gauge : rng.gauge();
    gp.g[0] = 0;
    const Rational d = mdl.d, w = gp.omega;
    const auto& g = gp.g;
    const Rational flat = w * d * (g[1] + g[2] + g[3] + g[4] + g[5]);
    const Rational slope = 2 * m * w * w * (g[1] * g[3] + g[2] * g[4]);
    bool ok = true;
    Rational prev = -1;
    json curve = json::array();
    for (const Rational r12 : {Rational(0), Rational(1, 2), Rational(1), Rational(3)}) {
      Point cl{};
      cl[0] = r12;
      const Rational e = special_ground_energy(sm, gp, d, cl);
      ok = ok && e == flat + slope * r12 && e >= prev;
      prev = e;
      curve.push_back({pq(r12), pq(e)});
    }
    const Rational exact = ground_state_data(sm.masses, gp, d).E0;
    c.details = {{"m", pq(m)}, {"curve", curve}, {"exact_E0_a0", pq(exact)}, {"slope", pq(slope)}};
    c.status = pass_if(ok && exact == flat && slope >= 0);
  }));
  return out;
}

// ---------------------------------------------------------------- driver

const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites{
      {"geometry", geometry_suite}, {"oscillator", oscillator_suite}, {"sl7", sl7_suite},
      {"spectrum", spectrum_suite}, {"symmetry", symmetry_suite},     {"reduction", reduction_suite},
      {"bo", bo_suite},             {"jacobi", jacobi_suite},         {"special", special_suite}};
  return suites;
}

Report run_suites(const Model& m, const SuiteOptions& o, const std::vector<std::string>& only) {
  std::vector<const SuiteEntry*> selected;
  for (const auto& name : only) {
    auto it = std::find_if(all_suites().begin(), all_suites().end(), [&](const SuiteEntry& s) { return s.name == name; });
    if (it == all_suites().end()) throw ConfigError("unknown suite '" + name + "'");
    selected.push_back(&*it);
  }
  if (only.empty())
    for (const auto& s : all_suites()) selected.push_back(&s);

  std::vector<std::future<std::vector<Check>>> jobs;
  for (const auto* s : selected) jobs.push_back(std::async(std::launch::async, s->fn, std::cref(m), std::cref(o)));
  std::vector<Check> all;
  for (auto& j : jobs) {
    auto cs = j.get();
    all.insert(all.end(), cs.begin(), cs.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
  Report r;
  r.append(all);
  return r;
}

}  // namespace rhoqes::app
