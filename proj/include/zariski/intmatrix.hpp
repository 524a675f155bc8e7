#pragma once

#include <utility>
#include <vector>

#include "zariski/integer.hpp"

namespace zariski {

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, size_t cols_hint = 0) {
    size_t cols = rows.empty() ? cols_hint : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged rows");
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Int> row(size_t i) const {
    return std::vector<Int>(e_.begin() + static_cast<long>(i * cols_),
                            e_.begin() + static_cast<long>((i + 1) * cols_));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "IntMatrix product");
    IntMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, h = u * m
};

/// Row Hermite normal form: H = U*M with U unimodular. Convention: row echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
inline HnfResult hnf(const IntMatrix& m) {
  size_t R = m.rows(), C = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(R);

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < C; ++j) std::swap(h.at(a, j), h.at(b, j));
    for (size_t j = 0; j < R; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto negate_row = [&](size_t a) {
    for (size_t j = 0; j < C; ++j) h.at(a, j) = -h.at(a, j);
    for (size_t j = 0; j < R; ++j) u.at(a, j) = -u.at(a, j);
  };
  auto add_multiple = [&](size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < C; ++j) h.at(dst, j) += q * h.at(src, j);
    for (size_t j = 0; j < R; ++j) u.at(dst, j) += q * u.at(src, j);
  };
  // rows (a,b) <- (x*a + y*b, -(bv/g)*a + (av/g)*b), det = +1
  auto gcd_transform = [&](size_t a, size_t b, size_t col) {
    Int av = h.at(a, col), bv = h.at(b, col);
    ExtGcd eg = ext_gcd(av, bv);
    Int p = div_exact(av, eg.g), q = div_exact(bv, eg.g);
    for (size_t j = 0; j < C; ++j) {
      Int na = eg.x * h.at(a, j) + eg.y * h.at(b, j);
      Int nb = -q * h.at(a, j) + p * h.at(b, j);
      h.at(a, j) = na;
      h.at(b, j) = nb;
    }
    for (size_t j = 0; j < R; ++j) {
      Int na = eg.x * u.at(a, j) + eg.y * u.at(b, j);
      Int nb = -q * u.at(a, j) + p * u.at(b, j);
      u.at(a, j) = na;
      u.at(b, j) = nb;
    }
  };

  size_t pivot_row = 0;
  for (size_t col = 0; col < C && pivot_row < R; ++col) {
    // collapse all entries in this column below pivot_row onto one gcd
    size_t first = R;
    for (size_t i = pivot_row; i < R; ++i)
      if (h.at(i, col) != 0) {
        first = i;
        break;
      }
    if (first == R) continue;
    swap_rows(pivot_row, first);
    for (size_t i = pivot_row + 1; i < R; ++i)
      if (h.at(i, col) != 0) gcd_transform(pivot_row, i, col);
    if (h.at(pivot_row, col) < 0) negate_row(pivot_row);
    const Int& piv = h.at(pivot_row, col);
    for (size_t i = 0; i < pivot_row; ++i) {
      Int q = div_floor(h.at(i, col), piv);
      add_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

/// True when m satisfies the row-HNF shape of hnf().
inline bool is_hnf(const IntMatrix& m) {
  long last_pivot = -1;
  bool seen_zero_row = false;
  for (size_t i = 0; i < m.rows(); ++i) {
    long p = -1;
    for (size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        p = static_cast<long>(j);
        break;
      }
    if (p < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;        // nonzero row after a zero row
    if (p <= last_pivot) return false;      // pivots strictly to the right
    if (m.at(i, static_cast<size_t>(p)) <= 0) return false;
    for (size_t k = 0; k < i; ++k) {
      const Int& above = m.at(k, static_cast<size_t>(p));
      if (above < 0 || above >= m.at(i, static_cast<size_t>(p))) return false;
    }
    last_pivot = p;
  }
  return true;
}

/// Diagonal of the Smith normal form: positive invariant factors d1 | d2 | ...,
/// zeros dropped. Computed by alternating row HNFs of the matrix and its transpose.
inline std::vector<Int> snf_diagonal(const IntMatrix& m) {
  IntMatrix s = m;
  for (int iter = 0; iter < 512; ++iter) {
    s = hnf(s).h;
    bool diag = true;
    for (size_t i = 0; i < s.rows() && diag; ++i)
      for (size_t j = 0; j < s.cols(); ++j)
        if (i != j && s.at(i, j) != 0) {
          diag = false;
          break;
        }
    if (diag) {
      std::vector<Int> d;
      for (size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        if (s.at(i, i) != 0) d.push_back(int_abs(s.at(i, i)));
      // enforce the divisibility chain: diag SNF via pairwise gcd/lcm
      for (size_t a = 0; a < d.size(); ++a)
        for (size_t b = a + 1; b < d.size(); ++b)
          if (!divides(d[a], d[b])) {
            Int g = int_gcd(d[a], d[b]);
            Int l = div_exact(d[a] * d[b], g);
            d[a] = g;
            d[b] = l;
          }
      std::sort(d.begin(), d.end());
      return d;
    }
    s = s.transpose();
  }
  fail(ErrorKind::BudgetExceeded, "snf did not converge");
}

/// Rank over the rationals, via the Smith normal form.
inline size_t rank(const IntMatrix& m) { return snf_diagonal(m).size(); }

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
inline Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "det of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = n;
      for (size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p == n) return Int(0);
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a.at(i, j) = div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

}  // namespace zariski
