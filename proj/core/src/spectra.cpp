#include "rhoqes/spectra.hpp"

#include "rhoqes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace rhoqes {

namespace {

bool nilpotent(const QMatrix& m) {
  QMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); k *= 2) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

BlockEigen block_eigen(const QMatrix& b, int degree) {
  BlockEigen out;
  out.degree = degree;
  out.size = b.rows();
  const std::size_t n = b.rows();
  if (b.is_upper_triangular() || b.is_lower_triangular()) {
    out.method = BlockEigen::Method::triangular;
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues.push_back(Energy::of(b(i, i)));
  } else if (Rational c = b.trace() / static_cast<long>(n);
             nilpotent(b - QMatrix::identity(n).scaled(c))) {
    out.method = BlockEigen::Method::scalar_plus_nilpotent;
    out.eigenvalues.assign(n, Energy::of(c));
  } else {
    out.method = BlockEigen::Method::numeric;
    const auto flat = b.to_doubles();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = flat[i * n + j];
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
    const Eigen::VectorXcd vals = es.eigenvalues();
    const Eigen::MatrixXcd vecs = es.eigenvectors();
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
      const std::complex<double> lam = vals(k);
      const Eigen::VectorXcd v = vecs.col(k);
      const double r = (mc * v - lam * v).norm() / v.norm();
      out.residual = std::max({out.residual, r, std::abs(lam.imag())});
      out.eigenvalues.push_back({std::nullopt, lam.real()});
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const Energy& x, const Energy& y) { return x.value < y.value; });
  return out;
}

std::vector<int> indices_of_degree(const OperatorMatrix& om, int n) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < om.degrees.size(); ++i)
    if (om.degrees[i] == n) idx.push_back(static_cast<int>(i));
  return idx;
}

bool is_block_triangular(const OperatorMatrix& om) {
  const auto& a = om.entries;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (om.degrees[i] > om.degrees[j] && a(i, j) != 0) return false;
  return true;
}

void for_each_tuple(int k, int total, auto&& f) {
  std::vector<int> t(k, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == k - 1) {
      t[i] = left;
      f(t);
      return;
    }
    for (int x = left; x >= 0; --x) {
      t[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (k == 0) {
    if (total == 0) f(t);
    return;
  }
  rec(rec, 0, total);
}

Energy combine(const std::vector<int>& n, const std::vector<Energy>& lambda, bool exact) {
  Energy e;
  Rational q = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    e.value += n[i] * lambda[i].value;
    if (exact) q += n[i] * *lambda[i].exact;
  }
  if (exact) e = Energy::of(q);
  return e;
}

}  // namespace

FundamentalFrequencies fundamental_frequencies(const DiffOperator& h, VarMask mask) {
  const OperatorMatrix om = matrix_on_basis(h, 1, mask);
  const auto idx = indices_of_degree(om, 1);
  const QMatrix b = om.entries.submatrix(idx, idx);
  const BlockEigen be = block_eigen(b, 1);
  FundamentalFrequencies ff;
  ff.lambda = be.eigenvalues;
  ff.exact = be.method != BlockEigen::Method::numeric;
  ff.residual = be.residual;
  ff.trace = b.trace();
  return ff;
}

Spectrum spectrum(const DiffOperator& h, int N, VarMask mask, double tol) {
  Spectrum s;
  s.N = N;
  const OperatorMatrix om = matrix_on_basis(h, N, mask);
  s.dimension = om.basis.size();
  s.block_triangular = is_block_triangular(om);

  std::vector<QMatrix> blocks;
  for (int n = 0; n <= N; ++n) {
    const auto idx = indices_of_degree(om, n);
    blocks.push_back(om.entries.submatrix(idx, idx));
    s.blocks.push_back(block_eigen(blocks.back(), n));
    for (const auto& e : s.blocks.back().eigenvalues) s.eigenvalues.push_back(e);
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const Energy& x, const Energy& y) { return x.value < y.value; });

  if (N >= 1) {
    const auto& b1 = s.blocks[1];
    s.frequencies.lambda = b1.eigenvalues;
    s.frequencies.exact = b1.method != BlockEigen::Method::numeric;
    s.frequencies.residual = b1.residual;
    s.frequencies.trace = blocks[1].trace();
  }
  const int k = std::popcount(static_cast<unsigned>(mask));
  const bool exact = s.frequencies.exact || N == 0;

  s.linear = true;
  std::map<Rational, SpectrumLevel> exact_levels;
  std::vector<SpectrumLevel> float_levels;
  for (int n = 0; n <= N; ++n) {
    std::vector<Energy> predicted;
    for_each_tuple(k, n, [&](const std::vector<int>& t) {
      Energy e = n == 0 ? Energy::of(0) : combine(t, s.frequencies.lambda, exact);
      predicted.push_back(e);
      if (e.exact) {
        auto [it, inserted] = exact_levels.try_emplace(*e.exact, SpectrumLevel{t, e, 0});
        ++it->second.multiplicity;
      } else {
        float_levels.push_back({t, e, 1});
      }
    });
    std::sort(predicted.begin(), predicted.end(),
              [](const Energy& x, const Energy& y) { return x.value < y.value; });
    const auto& got = s.blocks[n].eigenvalues;
    if (predicted.size() != got.size()) {
      s.linear = false;
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (got[i].exact && predicted[i].exact) {
        if (*got[i].exact != *predicted[i].exact) s.linear = false;
      } else {
        const double err = std::abs(got[i].value - predicted[i].value);
        s.linearity_error = std::max(s.linearity_error, err);
        if (err > tol * std::max(1.0, std::abs(predicted[i].value))) s.linear = false;
      }
    }
  }
  for (auto& [e, lvl] : exact_levels) s.levels.push_back(lvl);
  std::sort(float_levels.begin(), float_levels.end(),
            [](const SpectrumLevel& x, const SpectrumLevel& y) { return x.energy.value < y.energy.value; });
  for (const auto& lvl : float_levels) {
    if (!s.levels.empty() && !s.levels.back().energy.exact &&
        std::abs(s.levels.back().energy.value - lvl.energy.value) <=
            tol * std::max(1.0, std::abs(lvl.energy.value)))
      ++s.levels.back().multiplicity;
    else
      s.levels.push_back(lvl);
  }

  if (N <= 2) {
    UPoly prod{1};
    for (const auto& b : blocks) prod = upoly_mul(prod, charpoly(b));
    s.charpoly_match = charpoly(om.entries) == prod;
  }
  return s;
}

Rational equal_mass_energy(const Rational& a, const Rational& omega, const std::vector<int>& quantum) {
  long total = 0;
  for (int n : quantum) total += n;
  return 8 * a * omega * total;
}

Energy closed_form_special_energy(const SpecialModel& model, const GaugeParams& gp, const Rational& d,
                                  const std::vector<int>& quantum, const Point& classical) {
  if (model.variant == Variant::equal) {
    for (const auto& g : gp.g)
      if (g != gp.g[0]) throw ConfigError("equal-mass closed form needs equal gauge parameters");
    return Energy::of(equal_mass_energy(gp.g[0], gp.omega, quantum));
  }
  const DiffOperator op = freeze_classical(build_special(model, gp, d), model, classical);
  const auto ff = fundamental_frequencies(op, dynamical_mask(model));
  if (quantum.size() != ff.lambda.size())
    throw ConfigError("expected " + std::to_string(ff.lambda.size()) + " quantum numbers");
  Energy base = Energy::of(special_ground_energy(model, gp, d, classical));
  Energy eps = combine(quantum, ff.lambda, ff.exact);
  Energy out;
  out.value = base.value + eps.value;
  if (eps.exact) out.exact = *base.exact + *eps.exact;
  return out;
}

}  // namespace rhoqes
