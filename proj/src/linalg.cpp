#include "ddm/linalg.hpp"

#include <algorithm>
#include <string>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
  return m;
}

CycMatrix CycMatrix::from_columns(std::size_t rows, const std::vector<CycVector>& cols) {
  CycMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

CycMatrix CycMatrix::from_rows(std::size_t cols, const std::vector<CycVector>& rows) {
  CycMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CycVector CycMatrix::column(std::size_t j) const {
  CycVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CycVector CycMatrix::row(std::size_t i) const {
  return CycVector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool CycMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const CycNum& c) { return c.is_zero(); });
}

bool CycMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycNum& c = (*this)(i, j);
      if (i == j ? !c.is_one() : !c.is_zero()) return false;
    }
  }
  return true;
}

std::size_t CycMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(a_.begin(), a_.end(), [](const CycNum& c) { return !c.is_zero(); }));
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

CycMatrix CycMatrix::submatrix(const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) const {
  CycMatrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  }
  return s;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  for (std::size_t t = 0; t < a_.size(); ++t) {
    if (!o.a_[t].is_zero()) a_[t] += o.a_[t];
  }
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
  for (std::size_t t = 0; t < a_.size(); ++t) {
    if (!o.a_[t].is_zero()) a_[t] -= o.a_[t];
  }
  return *this;
}

CycMatrix& CycMatrix::operator*=(const CycNum& s) {
  for (auto& c : a_) {
    if (!c.is_zero()) c = c * s;
  }
  return *this;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix r = *this;
  for (auto& c : r.a_) {
    if (!c.is_zero()) c = -c;
  }
  return r;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  CycMatrix c(a.rows_, b.cols_);
  // column support of each row of b, so sparse rows cost nothing
  std::vector<std::vector<std::size_t>> support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!b(k, j).is_zero()) support[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : support[k]) c(i, j).add_product(aik, b(k, j));
    }
  }
  return c;
}

CycVector CycMatrix::apply(const CycVector& v) const {
  require(v.size() == cols_, "matrix-vector shape mismatch");
  CycVector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const CycNum& aij = (*this)(i, j);
      if (!aij.is_zero()) r[i].add_product(aij, v[j]);
    }
  }
  return r;
}

CycMatrix matrix_power(const CycMatrix& a, unsigned e) {
  require(a.rows() == a.cols(), "power of a non-square matrix");
  CycMatrix result = CycMatrix::identity(a.rows());
  CycMatrix base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNum& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const CycNum& bpq = b(p, q);
          if (!bpq.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = aij * bpq;
        }
      }
    }
  }
  return k;
}

Rref rref(CycMatrix a) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const CycNum inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) {
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const CycNum f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(a);
  return out;
}

std::size_t mat_rank(const CycMatrix& a) { return rref(a).pivots.size(); }

std::vector<CycVector> mat_kernel(const CycMatrix& a) {
  const Rref e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v(a.cols());
    v[free] = CycNum(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (!e.r(r, free).is_zero()) v[e.pivots[r]] = -e.r(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVector> mat_solve(const CycMatrix& a, const CycVector& b) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  CycMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Rref e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  CycVector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.r(r, a.cols());
  return x;
}

std::vector<CycVector> mat_image(const CycMatrix& a) {
  const Rref e = rref(a);
  std::vector<CycVector> basis;
  basis.reserve(e.pivots.size());
  for (std::size_t p : e.pivots) basis.push_back(a.column(p));
  return basis;
}

bool is_zero_vector(const CycVector& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

CycVector SpanBuilder::reduce(CycVector v) const {
  require(v.size() == n_, "vector length does not match the ambient space");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const CycNum f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const CycVector& row = rows_[r];
    for (std::size_t j = 0; j < n_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
  return v;
}

bool SpanBuilder::insert(const CycVector& v) {
  CycVector w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && w[p].is_zero()) ++p;
  if (p == n_) return false;
  const CycNum inv = w[p].inverse();
  for (auto& c : w) {
    if (!c.is_zero()) c = c * inv;
  }
  // keep earlier rows reduced at the new pivot
  for (auto& row : rows_) {
    const CycNum f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!w[j].is_zero()) row[j] -= f * w[j];
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

CycVector SpanBuilder::coordinates(const CycVector& v) const {
  CycVector c(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

}  // namespace ddm
