#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "zariski/ratmatrix.hpp"
#include "zariski/unipoly.hpp"

namespace zariski {

struct JordanBlockSpec {
  Rational eigenvalue;
  size_t size = 1;

  friend bool operator==(const JordanBlockSpec& a, const JordanBlockSpec& b) {
    return a.eigenvalue == b.eigenvalue && a.size == b.size;
  }
};

/// Jordan data of a rational matrix with rational eigenvalues: canonical block
/// list, explicit basis P with P * J * P^-1 = M, and nu = largest size of a
/// block for eigenvalue 0.
struct JordanData {
  std::vector<JordanBlockSpec> blocks;  // eigenvalue ascending, size descending
  RatMatrix p;
  RatMatrix p_inv;
  size_t nu = 0;

  size_t dim() const {
    size_t n = 0;
    for (const auto& b : blocks) n += b.size;
    return n;
  }
};

/// Standard Jordan matrix of the blocks: eigenvalue on the diagonal, 1 on the
/// superdiagonal within each block.
inline RatMatrix assemble_jordan(const std::vector<JordanBlockSpec>& blocks) {
  size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  RatMatrix j(n, n);
  size_t off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size; ++i) {
      j.at(off + i, off + i) = b.eigenvalue;
      if (i + 1 < b.size) j.at(off + i, off + i + 1) = 1;
    }
    off += b.size;
  }
  return j;
}

/// det(tI - M), fraction-free via Faddeev-LeVerrier.
inline UniPoly char_poly(const RatMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "char_poly of non-square matrix");
  size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix mk = m;
  for (size_t k = 1; k <= n; ++k) {
    Rational ck = -mk.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    if (k < n) {
      RatMatrix nk = mk;
      for (size_t i = 0; i < n; ++i) nk.at(i, i) += ck;
      mk = m * nk;
    }
  }
  return UniPoly::from_coeffs(std::move(c));
}

namespace detail {

// Incremental row span over Q with reduced echelon rows; insert returns false
// when the vector is dependent on the current span.
class RowSpan {
 public:
  explicit RowSpan(size_t dim) : dim_(dim) {}

  bool insert(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      Rational f = v[pivot];
      for (size_t j = 0; j < dim_; ++j) v[j] -= f * row[j];
    }
    size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = Rational(1) / v[p];
    for (size_t j = 0; j < dim_; ++j) v[j] *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

 private:
  size_t dim_;
  std::vector<std::pair<size_t, std::vector<Rational>>> rows_;
};

inline std::vector<Rational> apply(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> r(m.rows(), Rational(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace detail

/// Rational Jordan decomposition. Requires the characteristic polynomial to
/// split over Q; otherwise fails with EigenvaluesNotRational, reporting the
/// non-splitting cofactor.
inline JordanData jordan(const RatMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "jordan of non-square matrix");
  size_t n = m.rows();
  RationalRoots rr = rational_roots(char_poly(m));
  if (rr.cofactor.degree() > 0)
    fail(ErrorKind::EigenvaluesNotRational,
         "characteristic polynomial does not split over Q; cofactor " + rr.cofactor.str() +
             " (symbolic-diagonal mode handles torsion eigenvalues)");

  struct Chain {
    Rational eigenvalue;
    std::vector<std::vector<Rational>> vectors;  // N^{k-1} v, ..., N v, v
  };
  std::vector<Chain> chains;

  for (const auto& [lambda, alg_mult] : rr.roots) {
    RatMatrix nmat = m;
    for (size_t i = 0; i < n; ++i) nmat.at(i, i) -= lambda;

    // rank sequence and kernel flag of N^k
    std::vector<size_t> ranks{n};
    std::vector<std::vector<std::vector<Rational>>> kernels{{}};
    RatMatrix pw = RatMatrix::identity(n);
    size_t target = n - static_cast<size_t>(alg_mult);
    while (ranks.back() > target) {
      pw = pw * nmat;
      ranks.push_back(rank(pw));
      kernels.push_back(nullspace(pw));
    }
    size_t s = ranks.size() - 1;  // largest block size for lambda

    std::vector<std::vector<Rational>> images;  // N * (tops at level k+1)
    for (size_t k = s; k >= 1; --k) {
      detail::RowSpan span(n);
      for (const auto& v : kernels[k - 1]) span.insert(v);
      std::vector<std::vector<Rational>> tops = images;
      for (const auto& w : images) span.insert(w);
      for (const auto& v : kernels[k]) {
        if (span.insert(v)) {
          tops.push_back(v);
          // new chain of height k
          Chain c{lambda, {}};
          std::vector<Rational> cur = v;
          c.vectors.push_back(cur);
          for (size_t t = 1; t < k; ++t) {
            cur = detail::apply(nmat, cur);
            c.vectors.push_back(cur);
          }
          std::reverse(c.vectors.begin(), c.vectors.end());
          chains.push_back(std::move(c));
        }
      }
      images.clear();
      for (const auto& w : tops) images.push_back(detail::apply(nmat, w));
    }
  }

  // canonical order: eigenvalue ascending, size descending
  std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.vectors.size() > b.vectors.size();
  });

  JordanData jd;
  RatMatrix p(n, n);
  size_t col = 0;
  for (const auto& c : chains) {
    jd.blocks.push_back({c.eigenvalue, c.vectors.size()});
    for (const auto& v : c.vectors) {
      for (size_t i = 0; i < n; ++i) p.at(i, col) = v[i];
      ++col;
    }
    if (c.eigenvalue == 0) jd.nu = std::max(jd.nu, c.vectors.size());
  }
  if (col != n) fail(ErrorKind::EigenvaluesNotRational, "jordan chain count mismatch");
  jd.p = p;
  jd.p_inv = inverse(p);
  if (jd.p * assemble_jordan(jd.blocks) * jd.p_inv != m)
    fail(ErrorKind::EigenvaluesNotRational, "jordan reconstruction check failed");
  return jd;
}

/// Multiplicative decomposition of the (invertible) Jordan matrix:
/// M_s diagonal, M_u = M_s^-1 J unipotent with eigenvalue^-1 on the
/// superdiagonal within each block; M_s M_u = M_u M_s = J.
inline std::pair<RatMatrix, RatMatrix> su_decompose(const JordanData& jd) {
  size_t n = jd.dim();
  for (const auto& b : jd.blocks)
    if (b.eigenvalue == 0) fail(ErrorKind::SingularInput, "su_decompose needs invertible input");
  RatMatrix ms(n, n), mu = RatMatrix::identity(n);
  size_t off = 0;
  for (const auto& b : jd.blocks) {
    Rational inv_l = Rational(1) / b.eigenvalue;
    for (size_t i = 0; i < b.size; ++i) {
      ms.at(off + i, off + i) = b.eigenvalue;
      if (i + 1 < b.size) mu.at(off + i, off + i + 1) = inv_l;
    }
    off += b.size;
  }
  return {std::move(ms), std::move(mu)};
}

/// Partition of the Jordan blocks into the nilpotent part N and the invertible
/// part M1, plus the coordinate permutation realizing diag(N, M1):
/// perm[new_index] = old_index in the canonical Jordan coordinates.
struct NilpotentSplit {
  std::vector<JordanBlockSpec> nilpotent_blocks;
  std::vector<JordanBlockSpec> invertible_blocks;
  std::vector<size_t> permutation;
  std::vector<size_t> nilpotent_coords;   // old coordinate indices, ascending
  std::vector<size_t> invertible_coords;  // old coordinate indices, ascending
};

inline NilpotentSplit split_nilpotent(const JordanData& jd) {
  NilpotentSplit out;
  size_t off = 0;
  for (const auto& b : jd.blocks) {
    if (b.eigenvalue == 0) {
      out.nilpotent_blocks.push_back(b);
      for (size_t i = 0; i < b.size; ++i) out.nilpotent_coords.push_back(off + i);
    } else {
      out.invertible_blocks.push_back(b);
      for (size_t i = 0; i < b.size; ++i) out.invertible_coords.push_back(off + i);
    }
    off += b.size;
  }
  out.permutation = out.nilpotent_coords;
  out.permutation.insert(out.permutation.end(), out.invertible_coords.begin(),
                         out.invertible_coords.end());
  return out;
}

}  // namespace zariski
