// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include "app/config.hpp"
#include "app/sampler.hpp"
#include "app/suites.hpp"

#include "rhoqes/bo.hpp"
#include "rhoqes/errors.hpp"
#include "rhoqes/geometry.hpp"
#include "rhoqes/jacobi.hpp"
#include "rhoqes/oscillator.hpp"
#include "rhoqes/reduced.hpp"
#include "rhoqes/sl7.hpp"
#include "rhoqes/spectra.hpp"
#include "rhoqes/symmetries.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace rhoqes;
using app::Sampler;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string note;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && dt > budget_s) {
    o.pass = false;
    o.note += " [over budget " + std::to_string(budget_s) + " s]";
  }
  failures += !o.pass;
  std::printf("[%s] AC%-2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.note.c_str(), dt);
  std::fflush(stdout);
}

std::string str(const std::ostringstream& s) { return s.str(); }

}  // namespace

int main() {
  criterion(1, "ground-state consistency", 10, [] {
    Sampler rng(kSeed, "ac1");
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
      const auto mc = rng.mass_config();
      const auto gp = rng.gauge();
      const auto d = rng.dimension();
      bad += !build_h_es(mc, gp, d)(Polynomial(1)).is_zero();
    }
    return Outcome{bad == 0, "h(1) = 0 for " + std::to_string(20 - bad) + "/20 draws"};
  });

  criterion(2, "cometric determinant identity", 30, [] {
    Sampler rng(kSeed, "ac2");
    int bad = 0, total = 0;
    for (int m = 0; m < 5; ++m) {
      const auto mc = rng.mass_config();
      for (int i = 0; i < 100; ++i, ++total) {
        const auto r = det_identity_check(mc, rng.interior_point());
        bad += !r.equal || r.lhs <= 0;
      }
    }
    return Outcome{bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " exact, positive"};
  });

  criterion(3, "Cayley-Menger oracle", 0, [] {
    Sampler rng(kSeed, "ac3");
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const Point x = rng.interior_point();
      bad += v4_squared(x) != cayley_menger_v4_squared(x);
    }
    Point one;
    one.fill(Rational(1));
    const Rational unit = v4_squared(one);
    return Outcome{bad == 0 && unit == Rational(1, 72),
                   std::to_string(100 - bad) + "/100 points, V4^2(1) = " + to_pq(unit)};
  });

  criterion(4, "sl(7) equivalence and flag preservation", 0, [] {
    Sampler rng(kSeed, "ac4");
    int mismatch = 0, violations = 0;
    for (int i = 0; i < 10; ++i) {
      const auto mc = rng.mass_config();
      const auto gp = rng.gauge();
      const auto d = rng.dimension();
      const auto a = h_es_from_generators(mc, gp, d), b = build_h_es(mc, gp, d);
      mismatch += a != b;
      for (int N = 0; N <= 4; ++N)
        for (const auto* op : {&a, &b}) {
          try {
            matrix_on_basis(*op, N);
          } catch (const FlagViolation&) {
            ++violations;
          }
        }
    }
    return Outcome{mismatch == 0 && violations == 0, std::to_string(10 - mismatch) + "/10 identical, " +
                                                         std::to_string(violations) + " flag violations (N <= 4)"};
  });

  criterion(5, "equal-mass spectrum on P_2", 5, [] {
    const auto s = spectrum(build_h_es(MassConfig::equal(1), GaugeParams{}, 3), 2);
    std::map<Rational, int> mult;
    bool exact = true;
    for (const auto& e : s.eigenvalues) {
      if (e.exact) ++mult[*e.exact];
      else exact = false;
    }
    std::ostringstream os;
    for (const auto& [e, k] : mult) os << to_pq(e) << "^" << k << " ";
    const std::map<Rational, int> want{{Rational(0), 1}, {Rational(8), 6}, {Rational(16), 21}};
    return Outcome{exact && mult == want, "{ " + str(os) + "}"};
  });

  criterion(6, "general-mass linearity", 0, [] {
    const auto s = spectrum(build_h_es(MassConfig::finite({1, 2, 3, 4}), GaugeParams{}, 3), 2);
    std::ostringstream os;
    os << "max deviation " << s.linearity_error << " over " << s.eigenvalues.size() << " eigenvalues";
    return Outcome{s.linear && s.linearity_error < 1e-9, str(os)};
  });

  criterion(7, "symmetry suite", 60, [] {
    Sampler rng(kSeed, "ac7");
    int bad = 0;
    std::string first;
    for (int i = 0; i < 10; ++i) {
      const auto s = verify_symmetry_suite(rng.mass_config(), rng.dimension());
      for (const auto& c : s.checks)
        if (!c.pass) {
          ++bad;
          if (first.empty()) first = c.id;
        }
    }
    return Outcome{bad == 0, bad == 0 ? "commutators, so(3), decomposition, [S_j,S_k] exact on 10 draws"
                                      : std::to_string(bad) + " failed checks, first " + first};
  });

  criterion(8, "special limits", 0, [] {
    bool ok = true;
    std::ostringstream os;
    for (auto v : {Variant::atomic, Variant::molecular, Variant::three_center}) {
      const auto sm = make_model(v, MassConfig::equal(1), 1);
      GaugeParams gp;
      for (int k : sm.classical) gp.g[k] = 0;
      const auto a = limit_oracle(sm, gp, 3, Rational(1, 100));
      const auto b = limit_oracle(sm, gp, 3, Rational(1, 10000));
      const bool lim = a.structural_match && b.structural_match && b.max_scaled_diff <= a.max_scaled_diff + 1;
      ok = ok && lim;
      os << to_string(v) << (lim ? " ok, " : " FAIL, ");
    }
    const auto mol = make_model(Variant::molecular, MassConfig::equal(1), 1);
    GaugeParams gp;
    gp.g = {0, Rational(1, 2), 2, Rational(3, 4), 1, Rational(5, 3)};
    Point cl{};
    const Rational e0 = special_ground_energy(mol, gp, 3, cl);
    bool minimal = true;
    for (const Rational r : {Rational(1, 10), Rational(1), Rational(4)}) {
      cl[0] = r;
      minimal = minimal && special_ground_energy(mol, gp, 3, cl) > e0;
    }
    const bool exact = e0 == ground_state_data(mol.masses, gp, 3).E0;
    ok = ok && minimal && exact;
    os << "E0(mol) minimal at rho12 = 0: " << (minimal ? "yes" : "no") << ", equals exact E0: " << (exact ? "yes" : "no");
    return Outcome{ok, str(os)};
  });

  criterion(9, "P-representation", 0, [] {
    bool ok = true;
    for (const Rational d : {Rational(3), Rational(7, 2)})
      for (int N = 0; N <= 10; ++N) {
        const auto l = es_laguerre(d, 1, N);
        ok = ok && l.residual_zero && l.energy == 3 * d + 4 * N;
      }
    const auto n1 = qes_exact_n1(Rational(1, 2), 1, 3);
    const bool ground = es_laguerre(3, 1, 0).energy == 9;
    return Outcome{ok && n1.eigen_equations_hold && ground,
                   std::string("eps_N = (3d+4N) omega, N <= 10: ") + (ok ? "exact" : "FAIL") +
                       "; N=1 QES in Q(sqrt " + to_pq(n1.discriminant) + "): " +
                       (n1.eigen_equations_hold ? "zero residual" : "FAIL") + "; E0 = 3d omega: " +
                       (ground ? "yes" : "no")};
  });

  criterion(10, "Born-Oppenheimer expansion", 1, [] {
    GaugeParams gp;
    const auto e = bo_gap_expansion_check(gp, 3, {Rational(1, 10000), Rational(1, 1000)});
    std::ostringstream os;
    os << "leading " << e.leading << " (expected 6), ratio " << e.ratio;
    return Outcome{std::abs(e.leading - 6) <= 0.06 && e.ratio >= 9.5 && e.ratio <= 10.5, str(os)};
  });

  criterion(11, "Jacobi coordinates", 0, [] {
    Sampler rng(kSeed, "ac11");
    int bad = 0;
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const auto k = kinetic_diagonalization_check(rng.masses());
      bad += !k.diagonal_unit || !(k.max_off_diagonal < 1e-12);
      worst = std::max(worst, k.max_off_diagonal);
    }
    double err = 0;
    for (int i = 0; i < 2; ++i) {
      const std::array<Rational, 3> A{rng.positive(5, 3), rng.positive(5, 3), rng.positive(5, 3)};
      const std::array<int, 3> n{rng.integer(0, 2), rng.integer(0, 2), rng.integer(0, 2)};
      const Rational w = rng.positive(3, 2), d = rng.dimension();
      double oracle = 0;
      for (int j = 0; j < 3; ++j) oracle += radial_oracle(A[j], w, d, n[j]);
      err = std::max(err, std::abs(jacobi_spectrum(A, w, d, n) - oracle));
    }
    std::ostringstream os;
    os << 20 - bad << "/20 unit diagonals, max off-diagonal " << worst << ", spectrum vs radial oracle " << err;
    return Outcome{bad == 0 && err < 1e-6, str(os)};
  });

  criterion(12, "discrepancy ledger", 0, [] {
    app::SuiteOptions o;
    o.seed = kSeed;
    const app::Model m = app::resolve(app::RunConfig{});
    const auto report = app::run_suites(m, o, {"geometry", "symmetry", "reduction", "jacobi"});
    bool ok = true;
    std::string note;
    for (const char* id : {"geometry.veff_reading", "symmetry.printed_s_decomposition",
                           "reduced.delta_ps_completeness", "jacobi.moment_of_inertia"}) {
      const auto* c = report.find(id);
      const bool hit = c && c->status == app::Status::reported_discrepancy && c->details.size() >= 2;
      ok = ok && hit;
      note += std::string(id) + (hit ? " reported, " : " MISSING, ");
    }
    ok = ok && !report.has_fail();
    note += report.has_fail() ? "report has failures" : "no failures";
    return Outcome{ok, note};
  });

  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures ? 1 : 0;
}
