#pragma once

#include <optional>
#include <vector>

#include "zariski/intmatrix.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/// Sublattice of Z^ambient given by a basis (possibly empty = zero lattice).
struct Lattice {
  size_t ambient = 0;
  std::vector<std::vector<Int>> basis;

  size_t rank() const { return basis.size(); }
  bool is_zero() const { return basis.empty(); }
};

inline IntMatrix basis_matrix(const Lattice& l) {
  return IntMatrix::from_rows(l.basis, l.ambient);
}

/// Builds a lattice, checking basis independence (SNF rank = basis size).
inline Lattice make_lattice(size_t ambient, std::vector<std::vector<Int>> basis) {
  for (const auto& v : basis)
    if (v.size() != ambient) fail(ErrorKind::DimensionMismatch, "basis vector length");
  Lattice l{ambient, std::move(basis)};
  if (!l.basis.empty() && rank(basis_matrix(l)) != l.basis.size())
    fail(ErrorKind::DimensionMismatch, "lattice basis is linearly dependent");
  return l;
}

/// Canonical form: row HNF of the basis matrix with zero rows dropped.
inline Lattice canonical(const Lattice& l) {
  if (l.basis.empty()) return l;
  IntMatrix h = hnf(basis_matrix(l)).h;
  std::vector<std::vector<Int>> rows;
  for (size_t i = 0; i < h.rows(); ++i) {
    auto r = h.row(i);
    bool zero = true;
    for (const auto& x : r)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) rows.push_back(std::move(r));
  }
  return Lattice{l.ambient, std::move(rows)};
}

inline bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient) fail(ErrorKind::DimensionMismatch, "lattice_equal ambient dims");
  Lattice ca = canonical(a), cb = canonical(b);
  return ca.basis == cb.basis;
}

/// Basis of {v in Z^cols : M v = 0}, saturated (full kernel lattice).
inline Lattice kernel(const IntMatrix& m) {
  // rows of U corresponding to zero rows of hnf(M^T) are a kernel basis of M
  HnfResult e = hnf(m.transpose());
  std::vector<std::vector<Int>> basis;
  for (size_t i = 0; i < e.h.rows(); ++i) {
    bool zero = true;
    for (size_t j = 0; j < e.h.cols(); ++j)
      if (e.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(e.u.row(i));
  }
  return Lattice{m.cols(), std::move(basis)};
}

/// Coordinates of v in the canonical HNF basis of L, if v is a member.
inline std::optional<std::vector<Int>> lattice_coords(const Lattice& l, std::vector<Int> v) {
  if (v.size() != l.ambient) fail(ErrorKind::DimensionMismatch, "lattice_coords vector length");
  Lattice c = canonical(l);
  std::vector<Int> coords(c.basis.size(), Int(0));
  for (size_t i = 0; i < c.basis.size(); ++i) {
    size_t p = 0;
    while (p < l.ambient && c.basis[i][p] == 0) ++p;
    if (!divides(c.basis[i][p], v[p])) return std::nullopt;
    Int q = div_exact(v[p], c.basis[i][p]);
    coords[i] = q;
    if (q != 0)
      for (size_t j = 0; j < l.ambient; ++j) v[j] -= q * c.basis[i][j];
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return coords;
}

inline bool lattice_member(const Lattice& l, const std::vector<Int>& v) {
  return lattice_coords(l, v).has_value();
}

/// Index [super : sub] for sub a finite-index sublattice of super; 0 when the
/// ranks differ (infinite index).
inline Int lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient != super.ambient) fail(ErrorKind::DimensionMismatch, "lattice_index");
  if (sub.rank() != super.rank()) return Int(0);
  if (sub.rank() == 0) return Int(1);
  IntMatrix c(sub.rank(), sub.rank());
  for (size_t i = 0; i < sub.basis.size(); ++i) {
    auto coords = lattice_coords(super, sub.basis[i]);
    if (!coords) fail(ErrorKind::DimensionMismatch, "sub is not a sublattice of super");
    for (size_t j = 0; j < coords->size(); ++j) c.at(i, j) = (*coords)[j];
  }
  return int_abs(det(c));
}

/// Sublattice {v in L : sum_i v_i * phases_i = 0 mod 1}. Solved by clearing
/// denominators and taking the kernel of a one-row congruence system.
inline Lattice congruence_sublattice(const Lattice& l, const std::vector<Rational>& phases) {
  if (phases.size() != l.ambient)
    fail(ErrorKind::DimensionMismatch, "one phase per ambient coordinate expected");
  size_t k = l.basis.size();
  if (k == 0) return l;

  std::vector<Rational> dots(k, Rational(0));
  Int den_lcm = 1;
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 0; i < l.ambient; ++i) dots[j] += Rational(l.basis[j][i]) * phases[i];
    den_lcm = int_lcm(den_lcm, denom(dots[j]));
  }
  if (den_lcm == 1) return l;  // congruence trivially satisfied

  IntMatrix row(1, k + 1);
  for (size_t j = 0; j < k; ++j) row.at(0, j) = numer(dots[j]) * div_exact(den_lcm, denom(dots[j]));
  row.at(0, k) = den_lcm;

  Lattice ker = kernel(row);
  std::vector<std::vector<Int>> proj;
  for (const auto& v : ker.basis) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(k));
  Lattice coeffs = canonical(Lattice{k, std::move(proj)});

  std::vector<std::vector<Int>> out;
  for (const auto& c : coeffs.basis) {
    std::vector<Int> v(l.ambient, Int(0));
    for (size_t j = 0; j < k; ++j)
      if (c[j] != 0)
        for (size_t i = 0; i < l.ambient; ++i) v[i] += c[j] * l.basis[j][i];
    out.push_back(std::move(v));
  }
  return canonical(Lattice{l.ambient, std::move(out)});
}

}  // namespace zariski
