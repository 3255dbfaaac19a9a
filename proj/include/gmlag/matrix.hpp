#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/rational.hpp"

namespace gmlag {

// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // `cols` is needed so that an empty list of rows still has a width.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("row length mismatch");
      m.set_row(i, rows[i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  RatVector col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_row(std::size_t i, const RatVector& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  std::vector<RatVector> row_vectors() const {
    std::vector<RatVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix select_rows(const std::vector<std::size_t>& idx) const {
    RatMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) m.set_row(i, row(idx[i]));
    return m;
  }

  RatMatrix select_cols(const std::vector<std::size_t>& idx) const {
    RatMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_zero() const {
    for (const Rat& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

inline RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

inline RatMatrix operator*(const Rat& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

// Column convention: returns a·v.
inline RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  RatVector out(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

// Row convention: returns v·a.
inline RatVector row_times(const RatVector& v, const RatMatrix& a) {
  if (a.rows() != v.size()) throw InputError("vector-matrix product: dimension mismatch");
  RatVector out(a.cols(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
  }
  return out;
}

// x^T · g · y
inline Rat bilinear(const RatMatrix& g, const RatVector& x, const RatVector& y) { return dot(row_times(x, g), y); }

inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vstack: column mismatch");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) m.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) m.set_row(a.rows() + i, b.row(i));
  return m;
}

inline RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hstack: row mismatch");
  RatMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

struct Rref {
  RatMatrix reduced;  // rank × cols, no zero rows
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

using IntRow = std::vector<mpz_class>;

// Divides out the content and makes the leading non-zero entry positive.
inline void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
  if (g == 0) return;
  for (const auto& x : row)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  if (g == 1) return;
  for (auto& x : row)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// The row scaled to integers with the same span.
inline IntRow integer_row(const RatMatrix& m, std::size_t i) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(i, j) != 0) row[j] = m(i, j).get_num() * (l / m(i, j).get_den());
  make_primitive(row);
  return row;
}

}  // namespace detail

// Fraction-free Gauss–Jordan on primitive integer rows; rationals appear only in the output.
inline Rref rref(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<detail::IntRow> a;
  a.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) a.push_back(detail::integer_row(m, i));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpz_class g;
  mpz_class x;
  mpz_class y;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const detail::IntRow& pr = a[r];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      // row_i ← x·row_i − y·row_r with x = pivot/g, y = entry/g.
      mpz_gcd(g.get_mpz_t(), pr[c].get_mpz_t(), a[i][c].get_mpz_t());
      mpz_divexact(x.get_mpz_t(), pr[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(y.get_mpz_t(), a[i][c].get_mpz_t(), g.get_mpz_t());
      detail::IntRow& row = a[i];
      for (std::size_t j = 0; j < cols; ++j) {
        if (x != 1 && row[j] != 0) row[j] *= x;
        if (pr[j] != 0) mpz_submul(row[j].get_mpz_t(), y.get_mpz_t(), pr[j].get_mpz_t());
      }
      detail::make_primitive(row);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) {
        reduced(i, j) = Rat(a[i][j], piv);
        reduced(i, j).canonicalize();
      }
  }
  return {std::move(reduced), r, std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

inline Rat determinant(RatMatrix m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rat inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Rref r = rref(hstack(m, RatMatrix::identity(n)));
  if (n == 0) return RatMatrix(0, 0);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return r.reduced.select_cols(right);
}

inline std::string shape(const RatMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace gmlag
