#include "app/commands.hpp"

#include "rhoqes/bo.hpp"
#include "rhoqes/errors.hpp"
#include "rhoqes/geometry.hpp"
#include "rhoqes/oscillator.hpp"
#include "rhoqes/reduced.hpp"
#include "rhoqes/spectra.hpp"

#include <cmath>
#include <map>
#include <ostream>

namespace rhoqes::app {

namespace {

using nlohmann::json;

template <std::size_t K>
json pq_array(const std::array<Rational, K>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(pq(x));
  return a;
}

json mass_json(const MassConfig& mc) {
  json a = json::array();
  for (int i = 0; i < 4; ++i) a.push_back(mc.infinite(i) ? std::string("inf") : pq(mc.mass(i)));
  return a;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// All tuples of k non-negative integers with sum <= N, by total degree.
std::vector<std::vector<int>> quantum_tuples(int k, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  for (int n = 0; n <= N; ++n) {
    // compositions of n into k parts, lexicographically descending
    std::vector<std::vector<int>> level;
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == k - 1) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (k == 0) {
      if (n == 0) out.emplace_back();
      continue;
    }
    rec(rec, 0, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string column_prefix(Variant v) {
  return (v == Variant::molecular || v == Variant::three_center) ? "k" : "n";
}

struct Row {
  std::vector<int> quantum;
  Energy energy;
  int multiplicity = 1;
};

int spectrum_p_representation(const RunConfig& c, const Model& m, std::ostream& out) {
  if (c.N < 0 || c.N > 10) throw ConfigError("P-representation rows need 0 <= N <= 10");
  const bool csv = c.format == "csv";
  json rows = json::array();
  bool ok = true;
  if (csv) out << "N,energy_numerator,energy_denominator,residual_zero\n";
  for (int N = 0; N <= c.N; ++N) {
    const auto l = es_laguerre(m.d, m.gauge.omega, N);
    ok = ok && l.residual_zero;
    if (csv)
      out << N << ',' << l.energy.get_num().get_str() << ',' << l.energy.get_den().get_str() << ','
          << (l.residual_zero ? "true" : "false") << '\n';
    else
      rows.push_back({{"N", N}, {"energy", pq(l.energy)}, {"residual_zero", l.residual_zero},
                      {"eigenpolynomial", l.poly.to_string({"P"})}});
  }
  if (!csv) write_json(out, {{"representation", "P"}, {"d", pq(m.d)}, {"omega", pq(m.gauge.omega)}, {"rows", rows}});
  return ok ? ExitCode::ok : ExitCode::failed;
}

}  // namespace

SuiteOptions suite_options(const RunConfig& c) {
  SuiteOptions o;
  o.seed = c.seed;
  o.N = c.N;
  o.electron_masses.clear();
  for (const auto& s : c.electron_masses) o.electron_masses.push_back(parse_rational(s));
  return o;
}

int cmd_verify(const RunConfig& c, std::ostream& out, const std::vector<std::string>& suites) {
  const Model m = resolve(c);
  const Report r = run_suites(m, suite_options(c), suites);
  write_json(out, r.to_json());
  return r.has_fail() ? ExitCode::failed : ExitCode::ok;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const Model m = resolve(c);
  if (c.p_representation) return spectrum_p_representation(c, m, out);
  if (c.N < 0 || c.N > 4) throw ConfigError("spectrum needs 0 <= N <= 4");

  DiffOperator h;
  VarMask mask = kAllVars;
  Rational base = 0;
  const bool special = m.variant != Variant::generic && m.variant != Variant::equal;
  if (special) {
    mask = dynamical_mask(m.special);
    h = freeze_classical(build_special(m.special, m.gauge, m.d), m.special, m.classical);
    base = special_ground_energy(m.special, m.gauge, m.d, m.classical);
  } else {
    h = build_h_es(m.masses, m.gauge, m.d);
  }
  const Spectrum s = spectrum(h, c.N, mask);
  // the frequencies come from the degree-1 block, which P_0 does not reach
  const FundamentalFrequencies freq = c.N > 0 ? s.frequencies : spectrum(h, 1, mask).frequencies;
  const auto& lambda = freq.lambda;
  const double residual = std::max(s.linearity_error, freq.residual);

  std::vector<Row> rows;
  for (const auto& q : quantum_tuples(static_cast<int>(lambda.size()), c.N)) {
    Row r{q, {}, 1};
    Rational exact = base;
    r.energy.value = to_double(base);
    for (std::size_t i = 0; i < q.size(); ++i) {
      r.energy.value += q[i] * lambda[i].value;
      if (freq.exact) exact += q[i] * *lambda[i].exact;
    }
    if (freq.exact) r.energy.exact = exact;
    rows.push_back(std::move(r));
  }
  // Multiplicity of each energy among the listed tuples.
  for (auto& r : rows) {
    r.multiplicity = 0;
    for (const auto& o : rows) {
      const bool same = r.energy.exact ? (o.energy.exact && *o.energy.exact == *r.energy.exact)
                                       : std::abs(o.energy.value - r.energy.value) <= 1e-9 * (1 + std::abs(r.energy.value));
      r.multiplicity += same;
    }
  }

  const std::string prefix = column_prefix(m.variant);
  const std::size_t k = lambda.size();
  if (c.format == "csv") {
    for (std::size_t i = 0; i < k; ++i) out << prefix << i + 1 << ',';
    out << (freq.exact ? "energy_numerator,energy_denominator" : "energy,residual") << ",multiplicity\n";
    for (const auto& r : rows) {
      for (int n : r.quantum) out << n << ',';
      if (r.energy.exact)
        out << r.energy.exact->get_num().get_str() << ',' << r.energy.exact->get_den().get_str();
      else
        out << r.energy.value << ',' << residual;
      out << ',' << r.multiplicity << '\n';
    }
  } else {
    json jr = json::array();
    for (const auto& r : rows) {
      json row = json::object();
      for (std::size_t i = 0; i < k; ++i) row[prefix + std::to_string(i + 1)] = r.quantum[i];
      if (r.energy.exact) row["energy"] = pq(*r.energy.exact);
      else {
        row["energy"] = r.energy.value;
        row["residual"] = residual;
      }
      row["multiplicity"] = r.multiplicity;
      jr.push_back(row);
    }
    json f = json::array();
    for (const auto& l : lambda) f.push_back(l.exact ? json(pq(*l.exact)) : json(l.value));
    write_json(out, {{"variant", to_string(m.variant)},
                     {"N", c.N},
                     {"dimension", s.dimension},
                     {"block_triangular", s.block_triangular},
                     {"linear", s.linear},
                     {"linearity_error", s.linearity_error},
                     {"frequencies", f},
                     {"ground_energy_included", special},
                     {"ground_energy", pq(special ? base : ground_state_data(m.masses, m.gauge, m.d).E0)},
                     {"rows", jr}});
  }
  return s.linear && s.block_triangular ? ExitCode::ok : ExitCode::failed;
}

int cmd_springs(const RunConfig& c, std::ostream& out) {
  const Model m = resolve(c);
  if (c.direction == "forward") {
    const auto sm = forward_spring_map(m.masses, m.gauge, m.d);
    json printed = json::object();
    if (m.masses.infinite_count() == 0) {
      const auto p = printed_spring_relations(m.masses, m.gauge);
      for (int k = 0; k < kVars; ++k)
        if (p[k]) printed[std::string(var_name(k))] = pq(*p[k]);
    }
    write_json(out, {{"direction", "forward"},
                     {"masses", mass_json(m.masses)},
                     {"gauge", pq_array(m.gauge.g)},
                     {"omega", pq(m.gauge.omega)},
                     {"nu", pq_array(sm.nu)},
                     {"E0", pq(sm.E0)},
                     {"printed_relations", printed}});
    return ExitCode::ok;
  }
  if (c.direction != "inverse") throw ConfigError("direction must be forward or inverse");
  if (!c.nu) throw ConfigError("inverse springs need 'nu' in the config");
  std::array<double, kVars> target{}, seed{};
  for (int k = 0; k < kVars; ++k) {
    target[k] = to_double(parse_rational(c.nu->at(k)));
    seed[k] = c.gauge ? to_double(m.gauge.g[k]) : 1.0;
  }
  try {
    const auto r = inverse_spring_map(m.masses, target, seed);
    write_json(out, {{"direction", "inverse"},
                     {"masses", mass_json(m.masses)},
                     {"nu", *c.nu},
                     {"gauge", r.gauge},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"verdict", r.verdict == InverseVerdict::ok ? "ok" : "NegativeRoot"}});
    return ExitCode::ok;
  } catch (const NoConvergence& e) {
    write_json(out, {{"direction", "inverse"},
                     {"verdict", "NoConvergence"},
                     {"message", e.what()},
                     {"last_iterate", e.last_iterate},
                     {"residual", e.residual}});
    return ExitCode::no_convergence;
  }
}

int cmd_geometry(const RunConfig& c, std::ostream& out) {
  const Model m = resolve(c);
  Point x;
  x.fill(Rational(1));
  if (c.point)
    for (int k = 0; k < kVars; ++k) x[k] = parse_rational(c.point->at(k));
  const Domain dom = domain_check(x);
  json j = {{"point", pq_array(x)},
            {"domain", to_string(dom)},
            {"v4_squared", pq(v4_squared(x))},
            {"cayley_menger_v4_squared", pq(cayley_menger_v4_squared(x))},
            {"cometric_det", pq(determinant(cometric(m.masses, x)))}};
  if (m.masses.infinite_count() == 0) {
    const auto di = det_identity_check(m.masses, x);
    j["det_identity"] = {{"lhs", pq(di.lhs)}, {"rhs", pq(di.rhs)}, {"equal", di.equal}};
  }
  if (dom == Domain::interior) {
    const auto rm = radial_measure(m.d, x);
    j["radial_measure"] = {{"base", pq(rm.base)}, {"exponent", pq(rm.exponent)}};
    if (rm.value) j["radial_measure"]["value"] = pq(*rm.value);
  }
  if (dom == Domain::interior && m.masses.infinite_count() == 0) {
    try {
      const auto v = gauge_factor_and_veff(m.masses, m.d, x);
      j["veff"] = {{"transcribed", pq(v.transcribed)},
                   {"oracle_measure_gauge", pq(v.oracle_measure)},
                   {"oracle_literal_gauge", pq(v.oracle_literal)},
                   {"alt_sum_of_squares", pq(v.alt_sum_of_squares)},
                   {"alt_unsquared", pq(v.alt_unsquared)},
                   {"second_term", pq(v.second_term)}};
    } catch (const SingularPoint& e) {
      j["veff"] = {{"error", e.what()}};
    }
  }
  write_json(out, j);
  return ExitCode::ok;
}

int cmd_prep(const RunConfig& c, std::ostream& out) {
  const Model m = resolve(c);
  json mu = json::object();
  for (int k = 0; k < kVars; ++k)
    mu[std::string(var_name(k))] = m.masses.mu_defined(k) ? pq(m.masses.mu(k)) : std::string("inf");
  const auto gs = ground_state_data(m.masses, m.gauge, m.d);
  const auto sm = forward_spring_map(m.masses, m.gauge, m.d);
  json dyn = json::array(), cl = json::array();
  for (int k : m.special.dynamical) dyn.push_back(std::string(var_name(k)));
  for (int k : m.special.classical) cl.push_back(std::string(var_name(k)));
  json j = {{"config", to_json(c)},
            {"variant", to_string(m.variant)},
            {"masses", mass_json(m.masses)},
            {"reduced_masses", mu},
            {"d", pq(m.d)},
            {"omega", pq(m.gauge.omega)},
            {"gauge", pq_array(m.gauge.g)},
            {"ground_state_exponents", pq_array(gs.s)},
            {"E0", pq(gs.E0)},
            {"nu", pq_array(sm.nu)},
            {"dynamical", dyn},
            {"classical", cl}};
  if (m.masses.infinite_count() == 0) j["total_mass"] = pq(m.masses.total());
  if (!m.special.classical.empty()) {
    j["classical_values"] = pq_array(m.classical);
    j["special_ground_energy"] = pq(special_ground_energy(m.special, m.gauge, m.d, m.classical));
  }
  write_json(out, j);
  return ExitCode::ok;
}

int cmd_bo(const RunConfig& c, std::ostream& out) {
  const Model m = resolve(c);
  const SuiteOptions o = suite_options(c);
  const auto e = bo_gap_expansion_check(m.gauge, m.d, o.electron_masses);
  json ms = json::array();
  for (const auto& v : e.m_values) ms.push_back(pq(v));
  write_json(out, {{"gauge", pq_array(m.gauge.g)},
                   {"omega", pq(m.gauge.omega)},
                   {"d", pq(m.d)},
                   {"m_values", ms},
                   {"gaps", e.gaps},
                   {"leading", e.leading},
                   {"leading_expected", e.leading_expected},
                   {"leading_ok", e.leading_ok},
                   {"c2", e.c2},
                   {"c2_expected", e.c2_expected},
                   {"c2_ok", e.c2_ok},
                   {"ratio", e.ratio},
                   {"ratio_ok", e.ratio_ok}});
  return e.leading_ok ? ExitCode::ok : ExitCode::failed;
}

int run_command(const std::string& name, const RunConfig& c, std::ostream& out, std::ostream& err,
                const std::vector<std::string>& suites) {
  auto report = [&](const char* kind, const std::exception& e) {
    err << json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
  };
  try {
    if (name == "verify") return cmd_verify(c, out, suites);
    if (name == "spectrum") return cmd_spectrum(c, out);
    if (name == "springs") return cmd_springs(c, out);
    if (name == "geometry") return cmd_geometry(c, out);
    if (name == "prep") return cmd_prep(c, out);
    if (name == "bo") return cmd_bo(c, out);
    throw ConfigError("unknown command '" + name + "'");
  } catch (const ConfigError& e) {
    report("ConfigError", e);
    return ExitCode::config_error;
  } catch (const BadLimit& e) {
    report("BadLimit", e);
    return ExitCode::config_error;
  } catch (const NonNormalizable& e) {
    report("NonNormalizable", e);
    return ExitCode::config_error;
  } catch (const FlagViolation& e) {
    report("FlagViolation", e);
    return ExitCode::flag_violation;
  } catch (const NoConvergence& e) {
    err << json{{"error", "NoConvergence"}, {"message", e.what()}, {"last_iterate", e.last_iterate},
                {"residual", e.residual}}.dump()
        << '\n';
    return ExitCode::no_convergence;
  } catch (const std::exception& e) {
    report("Error", e);
    return ExitCode::failed;
  }
}

}  // namespace rhoqes::app
