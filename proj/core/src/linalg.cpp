#include "rhoqes/linalg.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace rhoqes {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
  QMatrix b(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(rs[i], cs[j]);
  return b;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational QMatrix::trace() const {
  Rational s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool QMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix c = *this;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::vector<double> QMatrix::to_doubles() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i].get_d();
  return out;
}

Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational t = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= t * a(k, j);
    }
  }
  return det;
}

std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational t = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= t * a(r, j);
    }
    ++r;
  }
  return r;
}

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  upoly_trim(c);
  return c;
}

UPoly charpoly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h(p, k) == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
    }
    const Rational piv = h(k + 1, k);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k) == 0) continue;
      Rational t = h(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= t * h(k + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += t * h(r, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<UPoly> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    UPoly cur = upoly_mul({-h(mm - 1, mm - 1), Rational(1)}, p[mm - 1]);
    cur.resize(mm + 1);
    Rational prod = 1;
    for (std::size_t i = mm - 1; i >= 1; --i) {
      prod *= h(i, i - 1);  // h_{i+1,i} in 1-based indexing
      if (prod == 0) break;
      Rational c = h(i - 1, mm - 1) * prod;
      if (c != 0)
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] -= c * p[i - 1][k];
    }
    upoly_trim(cur);
    p[mm] = std::move(cur);
  }
  return p[n];
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  if (n > 16) throw std::invalid_argument("polynomial determinant too large");
  std::unordered_map<unsigned, Polynomial> memo;
  // minor(mask): rows popcount(mask)..n-1, columns not in mask.
  auto rec = [&](auto&& self, unsigned mask) -> Polynomial {
    const std::size_t r = static_cast<std::size_t>(std::popcount(mask));
    if (r == n) return Polynomial(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial out;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (!m[r][c].is_zero()) {
        Polynomial t = m[r][c] * self(self, mask | (1u << c));
        if (pos & 1)
          out -= t;
        else
          out += t;
      }
      ++pos;
    }
    memo.emplace(mask, out);
    return out;
  };
  return rec(rec, 0u);
}

}  // namespace rhoqes
