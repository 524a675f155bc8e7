#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "zariski/ideal.hpp"
#include "zariski/intmatrix.hpp"
#include "zariski/lattice.hpp"
#include "zariski/mgroup.hpp"

namespace zariski {

/// Lattice ideal of L over the selected variables of `ring`: binomials
/// x^{v+} - x^{v-} for a basis of L, saturated variable-by-variable so the
/// result is the ideal of the full lattice.
inline Ideal lattice_ideal_in(const RingPtr& ring, const std::vector<size_t>& vars,
                              const Lattice& l, const GroebnerLimits& limits = {}) {
  if (l.ambient != vars.size())
    fail(ErrorKind::DimensionMismatch, "lattice ambient must match variable count");
  if (l.basis.empty()) return Ideal::zero(ring);
  std::vector<MultiPoly> gens;
  for (const auto& v : l.basis) {
    Monomial plus(ring->size(), 0), minus(ring->size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
      long e = v[i].get_si();
      if (e > 0) plus[vars[i]] = static_cast<int32_t>(e);
      if (e < 0) minus[vars[i]] = static_cast<int32_t>(-e);
    }
    gens.push_back(MultiPoly::term(ring, plus, Rational(1)) -
                   MultiPoly::term(ring, minus, Rational(1)));
  }
  Ideal ideal(ring, std::move(gens));
  for (size_t i : vars) ideal = saturate(ideal, MultiPoly::var(ring, i), limits);
  return ideal;
}

inline Ideal lattice_ideal(const Lattice& l, size_t n_vars, Order order = Order::GrevLex,
                           const GroebnerLimits& limits = {}) {
  if (l.ambient != n_vars) fail(ErrorKind::DimensionMismatch, "lattice_ideal ambient dimension");
  RingPtr ring = coordinate_ring(n_vars, order);
  std::vector<size_t> vars(n_vars);
  for (size_t i = 0; i < n_vars; ++i) vars[i] = i;
  return lattice_ideal_in(ring, vars, l, limits);
}

/// Toric variety data of a point set A: exponent matrix (columns = points),
/// kernel lattice, dimension = rank, and the saturated lattice ideal.
struct ToricData {
  std::vector<std::vector<Int>> points;
  IntMatrix a_matrix;      // r x n, columns are the points
  Lattice kernel_lattice;  // ker_Z(A) in Z^n
  size_t dimension = 0;
  Ideal ideal;             // in n variables x_1..x_n
};

inline ToricData toric_from_points(const std::vector<std::vector<Int>>& points,
                                   const GroebnerLimits& limits = {}) {
  if (points.empty()) fail(ErrorKind::DimensionMismatch, "toric_from_points with no points");
  size_t r = points.front().size();
  for (const auto& p : points)
    if (p.size() != r) fail(ErrorKind::DimensionMismatch, "points of unequal dimension");
  ToricData t;
  t.points = points;
  t.a_matrix = IntMatrix(r, points.size());
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < r; ++j) t.a_matrix.at(j, i) = points[i][j];
  t.kernel_lattice = kernel(t.a_matrix);
  t.dimension = rank(t.a_matrix);
  t.ideal = lattice_ideal(t.kernel_lattice, points.size(), Order::GrevLex, limits);
  return t;
}

/// Inverse toric construction: diagonal matrix whose cyclic closure is the
/// toric variety of the points. Uses the first r primes as the free basis.
inline std::vector<Rational> realize_as_matrix(const std::vector<std::vector<Int>>& points) {
  if (points.empty()) fail(ErrorKind::DimensionMismatch, "realize_as_matrix with no points");
  size_t r = points.front().size();
  std::vector<Int> primes = first_primes(r);
  std::vector<Rational> diag;
  diag.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != r) fail(ErrorKind::DimensionMismatch, "points of unequal dimension");
    Rational a(1);
    for (size_t j = 0; j < r; ++j)
      a *= pow_rational(Rational(primes[j]), static_cast<long>(p[j].get_si()));
    diag.push_back(a);
  }
  return diag;
}

namespace detail {

// 2D convex hull (monotone chain) of integer points; returns the hull in CCW
// order without repetition. Collinear interior points are dropped.
inline std::vector<std::vector<Int>> hull_2d(std::vector<std::vector<Int>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const std::vector<Int>& o, const std::vector<Int>& a,
                  const std::vector<Int>& b) {
    return Int((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  std::vector<std::vector<Int>> h;
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) <= 0) h.pop_back();
    h.push_back(p);
  }
  size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= lower && cross(h[h.size() - 2], h[h.size() - 1], *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  return h;
}

// normalized area (2 * Lebesgue) of the convex hull of 2D integer points
inline Int normalized_area_2d(const std::vector<std::vector<Int>>& pts) {
  auto h = hull_2d(pts);
  if (h.size() < 3) return Int(0);
  Int twice_area = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    twice_area += a[0] * b[1] - a[1] * b[0];
  }
  return int_abs(twice_area);
}

inline std::vector<Int> cross3(const std::vector<Int>& a, const std::vector<Int>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int dot3(const std::vector<Int>& a, const std::vector<Int>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// normalized volume (6 * Lebesgue) of the convex hull of 3D integer points;
// apex decomposition over brute-forced supporting faces
inline Int normalized_volume_3d(std::vector<std::vector<Int>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::vector<Int> apex = pts.front();  // lexicographic minimum is a vertex

  // supporting planes keyed by primitive outward normal + offset
  std::set<std::pair<std::vector<Int>, Int>> planes;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::vector<Int> u(3), v(3);
        for (int c = 0; c < 3; ++c) {
          u[c] = pts[j][c] - pts[i][c];
          v[c] = pts[k][c] - pts[i][c];
        }
        std::vector<Int> nv = cross3(u, v);
        if (nv[0] == 0 && nv[1] == 0 && nv[2] == 0) continue;
        Int g = int_gcd(int_gcd(int_abs(nv[0]), int_abs(nv[1])), int_abs(nv[2]));
        for (auto& c : nv) c = div_exact(c, g);
        Int off = dot3(nv, pts[i]);
        bool below = true, above = true;
        for (const auto& p : pts) {
          Int d = dot3(nv, p) - off;
          if (d > 0) below = false;
          if (d < 0) above = false;
        }
        if (below)
          planes.insert({nv, off});
        else if (above) {
          for (auto& c : nv) c = -c;
          planes.insert({nv, Int(-off)});
        }
      }

  Int vol6 = 0;
  for (const auto& [nv, off] : planes) {
    if (dot3(nv, apex) == off) continue;  // faces through the apex contribute nothing
    std::vector<std::vector<Int>> face;
    for (const auto& p : pts)
      if (dot3(nv, p) == off) face.push_back(p);
    // order the face polygon via its 2D hull in a projection along the largest
    // normal coordinate (injective on the face plane)
    int drop = 0;
    if (int_abs(nv[1]) > int_abs(nv[drop])) drop = 1;
    if (int_abs(nv[2]) > int_abs(nv[drop])) drop = 2;
    std::map<std::vector<Int>, std::vector<Int>> lift;
    std::vector<std::vector<Int>> proj;
    for (const auto& p : face) {
      std::vector<Int> pp;
      for (int c = 0; c < 3; ++c)
        if (c != drop) pp.push_back(p[c]);
      lift[pp] = p;
      proj.push_back(pp);
    }
    auto cyc = hull_2d(proj);
    if (cyc.size() < 3) continue;
    for (size_t t = 1; t + 1 < cyc.size(); ++t) {
      std::vector<Int> e0(3), e1(3), e2(3);
      for (int c = 0; c < 3; ++c) {
        e0[c] = lift[cyc[0]][c] - apex[c];
        e1[c] = lift[cyc[t]][c] - apex[c];
        e2[c] = lift[cyc[t + 1]][c] - apex[c];
      }
      vol6 += int_abs(dot3(e0, cross3(e1, e2)));
    }
  }
  return vol6;
}

}  // namespace detail

/// Normalized volume of conv(points) with respect to the lattice of its affine
/// hull (d! times the Lebesgue measure, d = dim of the hull). Capped at
/// affine dimension 3.
inline Int degree_by_volume(const std::vector<std::vector<Int>>& points) {
  if (points.empty()) fail(ErrorKind::DimensionMismatch, "degree_by_volume with no points");
  size_t r = points.front().size();
  for (const auto& p : points)
    if (p.size() != r) fail(ErrorKind::DimensionMismatch, "points of unequal dimension");

  // differences from the first point
  std::vector<std::vector<Int>> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Int> d(r);
    for (size_t j = 0; j < r; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  bool all_zero = true;
  for (const auto& d : diffs)
    for (const auto& x : d)
      if (x != 0) all_zero = false;
  if (diffs.empty() || all_zero) return Int(1);  // a single point has degree 1

  // saturated lattice of the linear span: S = ker(ker(D)^T rows as matrix)
  IntMatrix dmat = IntMatrix::from_rows(diffs, r);
  Lattice perp = kernel(dmat);
  Lattice span = kernel(basis_matrix(perp));
  size_t d = span.rank();
  if (d > 3) fail(ErrorKind::DimensionTooLarge, "affine hull dimension exceeds 3");

  // coordinates of every point difference in the saturated span lattice
  std::vector<std::vector<Int>> coords;
  coords.push_back(std::vector<Int>(d, Int(0)));
  for (const auto& v : diffs) {
    auto c = lattice_coords(span, v);
    if (!c) fail(ErrorKind::DimensionMismatch, "point outside its own affine hull lattice");
    coords.push_back(*c);
  }

  if (d == 1) {
    Int lo = coords.front()[0], hi = lo;
    for (const auto& c : coords) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    return hi - lo;
  }
  if (d == 2) return detail::normalized_area_2d(coords);
  return detail::normalized_volume_3d(coords);
}

}  // namespace zariski
