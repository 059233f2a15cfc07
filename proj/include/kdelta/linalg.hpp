#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kdelta/rational.hpp"

namespace kdelta {

// Exact rational vector of fixed dimension.
class QVec {
public:
  QVec() = default;
  explicit QVec(std::size_t dim) : c_(dim) {}
  QVec(std::initializer_list<Rat> xs) : c_(xs) {}
  explicit QVec(std::vector<Rat> coords) : c_(std::move(coords)) {}

  static QVec zero(std::size_t dim) { return QVec(dim); }
  static QVec unit(std::size_t dim, std::size_t i);
  static QVec ints(std::initializer_list<long> xs);
  static QVec ints(const std::vector<long>& xs);

  std::size_t dim() const { return c_.size(); }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;

  friend bool operator==(const QVec& a, const QVec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const QVec& v);

private:
  std::vector<Rat> c_;
};

// Lexicographic order; the canonical order used for all sorted outputs.
bool lex_less(const QVec& a, const QVec& b);
int lex_compare(const QVec& a, const QVec& b);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rat& s, const QVec& v);
Rat dot(const QVec& a, const QVec& b);

// Unique integer vector with coprime coordinates, positively proportional to v.
QVec primitive_vector(const QVec& v);

// Exact rational matrix, stored by rows.
class QMat {
public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);
  static QMat from_rows(std::vector<QVec> rows);
  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const QVec& row(std::size_t i) const { return rows_[i]; }
  QVec& row(std::size_t i) { return rows_[i]; }
  const Rat& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rat& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<QVec>& row_list() const { return rows_; }

  QMat transpose() const;
  QVec apply(const QVec& x) const;  // matrix * column vector

  friend bool operator==(const QMat& a, const QMat& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

private:
  std::vector<QVec> rows_;
  std::size_t cols_ = 0;
};

// Gauss-Jordan toolkit. All routines are deterministic (first-nonzero pivoting).
std::vector<std::size_t> rref_inplace(std::vector<QVec>& rows, std::size_t cols);
std::size_t rank(const QMat& m);
Rat det(const QMat& m);

// Unique reduced basis of span(vecs): RREF rows scaled to primitive integer
// vectors (leading coordinate positive).
std::vector<QVec> subspace_rref_basis(std::size_t dim, const std::vector<QVec>& vecs);

// Canonical basis of {x : Ax = 0}, one vector per free column of rref(A),
// each primitive. Returned in subspace_rref_basis form.
std::vector<QVec> kernel_basis(const QMat& a);

// Any particular solution of Ax = b, or nullopt when inconsistent.
std::optional<QVec> solve_any(const QMat& a, const QVec& b);

// Subtracts the projection onto span(basis) along pivot coordinates; basis
// must be in subspace_rref_basis form. The result has zeros at pivot columns.
QVec reduce_mod_basis(QVec x, const std::vector<QVec>& basis);

std::vector<QVec> sorted_unique(std::vector<QVec> vs);

}  // namespace kdelta
