#include "kdelta/linalg.hpp"

#include <algorithm>
#include <ostream>

namespace kdelta {

QVec QVec::unit(std::size_t dim, std::size_t i) {
  QVec v(dim);
  v[i] = Rat(1);
  return v;
}

QVec QVec::ints(std::initializer_list<long> xs) {
  std::vector<Rat> c;
  c.reserve(xs.size());
  for (long x : xs) c.emplace_back(x);
  return QVec(std::move(c));
}

QVec QVec::ints(const std::vector<long>& xs) {
  std::vector<Rat> c;
  c.reserve(xs.size());
  for (long x : xs) c.emplace_back(x);
  return QVec(std::move(c));
}

bool QVec::is_zero() const {
  for (const Rat& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const QVec& v) {
  os << "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ")";
}

int lex_compare(const QVec& a, const QVec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

bool lex_less(const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; }

QVec operator+(const QVec& a, const QVec& b) {
  if (a.dim() != b.dim()) fail("DimMismatch", "vector addition of unequal dimensions");
  QVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.dim() != b.dim()) fail("DimMismatch", "vector subtraction of unequal dimensions");
  QVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator-(const QVec& a) {
  QVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

QVec operator*(const Rat& s, const QVec& v) {
  QVec r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.dim() != b.dim()) fail("DimMismatch", "dot product of unequal dimensions");
  Rat s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

QVec primitive_vector(const QVec& v) {
  if (v.is_zero()) fail("ZeroVector", "primitive form of the zero vector");
  // Clear denominators, then divide by the gcd of the numerators.
  mpz_class den_lcm(1);
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[i].den().get_mpz_t());
  std::vector<mpz_class> ints(v.dim());
  mpz_class g(0);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    ints[i] = v[i].num() * (den_lcm / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  QVec r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows, QVec(cols)), cols_(cols) {}

QMat QMat::from_rows(std::vector<QVec> rows) {
  QMat m;
  if (!rows.empty()) {
    m.cols_ = rows.front().dim();
    for (const QVec& r : rows)
      if (r.dim() != m.cols_) fail("DimMismatch", "ragged matrix rows");
  }
  m.rows_ = std::move(rows);
  return m;
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVec QMat::apply(const QVec& x) const {
  if (x.dim() != cols_) fail("DimMismatch", "matrix-vector dimension mismatch");
  QVec y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

std::vector<std::size_t> rref_inplace(std::vector<QVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rat inv = rows[r][c].inverse();
    rows[r] = inv * rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      rows[i] = rows[i] - rows[i][c] * rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r, QVec(cols));
  return pivots;
}

std::size_t rank(const QMat& m) {
  std::vector<QVec> rows = m.row_list();
  return rref_inplace(rows, m.cols()).size();
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) fail("DimMismatch", "determinant of a non-square matrix");
  std::vector<QVec> rows = m.row_list();
  const std::size_t n = m.cols();
  Rat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && rows[p][c].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(rows[p], rows[c]);
      d = -d;
    }
    d *= rows[c][c];
    const Rat inv = rows[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      rows[i] = rows[i] - (rows[i][c] * inv) * rows[c];
    }
  }
  return d;
}

std::vector<QVec> subspace_rref_basis(std::size_t dim, const std::vector<QVec>& vecs) {
  std::vector<QVec> rows;
  for (const QVec& v : vecs) {
    if (v.dim() != dim) fail("DimMismatch", "basis vector of wrong dimension");
    if (!v.is_zero()) rows.push_back(v);
  }
  rref_inplace(rows, dim);
  for (QVec& r : rows) r = primitive_vector(r);
  return rows;
}

std::vector<QVec> kernel_basis(const QMat& a) {
  std::vector<QVec> rows = a.row_list();
  const std::size_t n = a.cols();
  const std::vector<std::size_t> pivots = rref_inplace(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n);
    v[f] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(primitive_vector(v));
  }
  return subspace_rref_basis(n, basis);
}

std::optional<QVec> solve_any(const QMat& a, const QVec& b) {
  if (b.dim() != a.rows()) fail("DimMismatch", "solve with mismatched right-hand side");
  const std::size_t n = a.cols();
  std::vector<QVec> aug;
  aug.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    QVec row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a.at(i, j);
    row[n] = b[i];
    aug.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = rref_inplace(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

QVec reduce_mod_basis(QVec x, const std::vector<QVec>& basis) {
  for (const QVec& row : basis) {
    std::size_t j = 0;
    while (j < row.dim() && row[j].is_zero()) ++j;
    if (j == row.dim()) continue;
    if (x[j].is_zero()) continue;
    x = x - (x[j] / row[j]) * row;
  }
  return x;
}

std::vector<QVec> sorted_unique(std::vector<QVec> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace kdelta
