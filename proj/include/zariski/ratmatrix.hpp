#pragma once

#include <utility>
#include <vector>

#include "zariski/intmatrix.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/// Dense matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static RatMatrix identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged rows");
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix from_int(const IntMatrix& a) {
    RatMatrix m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = Rational(a.at(i, j));
    return m;
  }

  static RatMatrix diagonal(const std::vector<Rational>& d) {
    RatMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  Rational trace() const {
    Rational t(0);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum");
    RatMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix diff");
    RatMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix r = a;
    for (auto& x : r.e_) x *= s;
    return r;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product");
    RatMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Reduced row echelon form; returns pivot columns.
inline std::pair<RatMatrix, std::vector<size_t>> rref(RatMatrix a) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = a.rows();
    for (size_t i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = Rational(1) / a.at(r, c);
    for (size_t j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline size_t rank(const RatMatrix& a) { return rref(a).second.size(); }

/// Basis of the right nullspace {v : a v = 0}.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NotSquare, "inverse of non-square matrix");
  size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() != n || pivots.back() != n - 1)
    fail(ErrorKind::SingularInverse, "matrix is singular");
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

inline Rational det(const RatMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NotSquare, "det of non-square matrix");
  RatMatrix m = a;
  size_t n = m.rows();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = n;
    for (size_t i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p == n) return Rational(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rational f = m.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

/// a^e for integer e; negative exponents use the exact inverse.
inline RatMatrix power(const RatMatrix& a, long e) {
  if (!a.is_square()) fail(ErrorKind::NotSquare, "power of non-square matrix");
  RatMatrix base = e < 0 ? inverse(a) : a;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  RatMatrix r = RatMatrix::identity(a.rows());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

}  // namespace zariski
