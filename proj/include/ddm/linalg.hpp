#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ddm/cyclofield.hpp"

namespace ddm {

using CycVector = std::vector<CycNum>;

/// Dense row-major matrix over Q(w).
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CycMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static CycMatrix from_columns(std::size_t rows, const std::vector<CycVector>& cols);
  static CycMatrix from_rows(std::size_t cols, const std::vector<CycVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  CycVector column(std::size_t j) const;
  CycVector row(std::size_t i) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  CycMatrix transpose() const;
  /// Rows `rs` and columns `cs` of this matrix, in the given order.
  CycMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;

  CycMatrix& operator+=(const CycMatrix& o);
  CycMatrix& operator-=(const CycMatrix& o);
  CycMatrix& operator*=(const CycNum& s);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const CycNum& s) { return a *= s; }
  friend CycMatrix operator*(const CycNum& s, CycMatrix a) { return a *= s; }
  CycMatrix operator-() const;
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);

  /// Matrix-vector product, skipping zero entries.
  CycVector apply(const CycVector& v) const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

/// Integer power of a square matrix (non-negative exponent).
CycMatrix matrix_power(const CycMatrix& a, unsigned e);

/// Block-diagonal Kronecker product a (x) b, with index (i, j) -> i * b.rows() + j.
CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

/// Reduced row echelon form with the column index of each pivot row.
struct Rref {
  CycMatrix r;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; pivots are the first nonzero entry found in each column.
Rref rref(CycMatrix a);

std::size_t mat_rank(const CycMatrix& a);
/// Basis of {v : a v = 0}, one vector per free column.
std::vector<CycVector> mat_kernel(const CycMatrix& a);
/// One solution of a v = b, or nullopt when the system is inconsistent.
std::optional<CycVector> mat_solve(const CycMatrix& a, const CycVector& b);
/// Basis of the column space, taken from the pivot columns of a.
std::vector<CycVector> mat_image(const CycMatrix& a);

bool is_zero_vector(const CycVector& v);

/// Incremental row-reduced basis of a subspace of K^n.
///
/// Rows are kept in reduced echelon form with pivot entry 1, so membership
/// tests and coordinates are read directly at pivot columns.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}

  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<CycVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the current rows (zero at every pivot).
  CycVector reduce(CycVector v) const;
  /// Adds v if it is independent; returns whether the span grew.
  bool insert(const CycVector& v);
  bool contains(const CycVector& v) const { return is_zero_vector(reduce(v)); }
  /// Coordinates of a vector known to lie in the span, w.r.t. rows().
  CycVector coordinates(const CycVector& v) const;

 private:
  std::size_t n_;
  std::vector<CycVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ddm
