#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zariski/ideal.hpp"
#include "zariski/mgroup.hpp"
#include "zariski/multipoly.hpp"
#include "zariski/spectral.hpp"
#include "zariski/toric.hpp"

namespace zariski {

enum class Mode { Group, Semigroup };

inline const char* mode_name(Mode m) { return m == Mode::Group ? "group" : "semigroup"; }

/// Closure of a nontrivial unipotent cyclic group: a rational normal curve of
/// degree max_size - 1 inside a linear space cut by entry identifications.
struct CurveData {
  std::vector<size_t> block_sizes;
  size_t max_size = 0;
  std::vector<MultiPoly> linear_space_equations;  // degree <= 1 part of the ideal
  Ideal curve_ideal;                              // full ideal in the matrix ring
  std::vector<UniPoly> parametrization;           // p*p entries of M_u^t, row-major
};

/// Semisimple (diagonal) closure: full lattice ideal plus per-coset component
/// ideals, embedded in the n*n matrix coordinates with off-diagonal pins.
struct SemisimpleClosure {
  MultGroupData group;
  MultGroupData powered;  // torsion-free group of q-th powers, q = torsion order
  std::vector<Rational> diag_values;
  Ideal ideal;
  std::vector<Ideal> component_ideals;
};

struct ProductClosure {
  Ideal ideal;
  std::vector<Ideal> component_ideals;
};

/// Full description of the Zariski closure of the cyclic group/semigroup of a
/// matrix: isolated points X0, the ideal of X0 ∪ X1 in the input coordinates,
/// and the rank/torsion accounting behind dimension and component counts.
struct ClosureReport {
  Mode mode = Mode::Semigroup;
  size_t n = 0;
  size_t nu = 0;
  bool has_zero_eigenvalue = false;
  size_t rank_g = 0;
  Int torsion_order = 1;
  bool diagonalizable_part = true;
  size_t dimension = 0;
  size_t num_components = 0;  // toric components of X1 (0 when X1 is empty)
  std::vector<RatMatrix> isolated_points;
  Ideal ideal;
  std::optional<std::vector<Ideal>> component_ideals;
  std::optional<ToricData> toric;
};

namespace detail {

inline std::vector<Rational> flatten(const RatMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

inline Ideal canonical_ideal(const Ideal& i, const GroebnerLimits& limits = {}) {
  return Ideal(i.ring(), i.groebner(limits));
}

}  // namespace detail

/// Maximal ideal of a single matrix point.
inline Ideal point_ideal(const RingPtr& ring, const RatMatrix& m) {
  std::vector<MultiPoly> gens;
  gens.reserve(ring->size());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      gens.push_back(MultiPoly::var(ring, i * m.cols() + j) -
                     MultiPoly::constant(ring, m.at(i, j)));
  return Ideal(ring, std::move(gens));
}

/// Substitution matrix of the conjugation map X -> P^-1 X P on the n*n matrix
/// coordinates; transporting an ideal through it moves the closure of the
/// Jordan form to the closure of the original matrix.
inline RatMatrix conjugation_substitution(const RatMatrix& p, const RatMatrix& p_inv) {
  size_t n = p.rows();
  RatMatrix s(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          s.at(i * n + j, k * n + l) = p_inv.at(i, k) * p.at(l, j);
  return s;
}

/// Closure of the cyclic group of a unipotent Jordan-coordinates matrix given
/// by its blocks. The parametrization entry (i,j) is C(t, j-i) * lambda^{i-j}
/// within a block; eliminating t yields the curve ideal.
inline CurveData unipotent_closure(const RatMatrix& m_u,
                                   const std::vector<JordanBlockSpec>& blocks,
                                   const GroebnerLimits& limits = {}) {
  size_t p = 0;
  for (const auto& b : blocks) p += b.size;
  if (m_u.rows() != p || m_u.cols() != p)
    fail(ErrorKind::DimensionMismatch, "unipotent matrix does not match block data");
  for (const auto& b : blocks)
    if (b.eigenvalue == 0) fail(ErrorKind::NotUnipotent, "zero eigenvalue block");

  CurveData out;
  out.max_size = 0;
  for (const auto& b : blocks) {
    out.block_sizes.push_back(b.size);
    out.max_size = std::max(out.max_size, b.size);
  }

  // entries of M_u^t as polynomials in t
  out.parametrization.assign(p * p, UniPoly());
  size_t off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size; ++i)
      for (size_t j = i; j < b.size; ++j) {
        size_t s = j - i;
        out.parametrization[(off + i) * p + off + j] =
            pow_rational(b.eigenvalue, -static_cast<long>(s)) * binomial_poly(s);
      }
    off += b.size;
  }

  // the input must be exactly M_u^1
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      if (m_u.at(i, j) != out.parametrization[i * p + j].eval(Rational(1)))
        fail(ErrorKind::NotUnipotent, "matrix is not the unipotent part of the block data");
  if (out.max_size <= 1)
    fail(ErrorKind::NotUnipotent, "unipotent part is the identity; the closure is a point");

  RingPtr ring = matrix_ring(p);

  // classes of equal parametrization entries; representative = first row-major
  std::map<std::vector<Rational>, size_t> rep_of;  // poly coeffs -> var index
  std::vector<std::pair<size_t, UniPoly>> reps;    // (var index, poly), nonconstant
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) {
      const UniPoly& u = out.parametrization[i * p + j];
      size_t var = i * p + j;
      if (u.degree() <= 0) {
        out.linear_space_equations.push_back(MultiPoly::var(ring, var) -
                                             MultiPoly::constant(ring, u.eval(Rational(0))));
        continue;
      }
      auto it = rep_of.find(u.coeffs());
      if (it == rep_of.end()) {
        rep_of.emplace(u.coeffs(), var);
        reps.emplace_back(var, u);
      } else {
        out.linear_space_equations.push_back(MultiPoly::var(ring, var) -
                                             MultiPoly::var(ring, it->second));
      }
    }

  // proportional classes of equal degree: x_a = c * x_b linear identifications
  std::map<int, size_t> canon_by_degree;  // degree -> index into reps
  std::vector<size_t> elim_reps;          // reps that enter the elimination
  for (size_t k = 0; k < reps.size(); ++k) {
    int d = reps[k].second.degree();
    auto it = canon_by_degree.find(d);
    if (it == canon_by_degree.end()) {
      canon_by_degree.emplace(d, k);
      elim_reps.push_back(k);
      continue;
    }
    const UniPoly& q0 = reps[it->second].second;
    const UniPoly& qk = reps[k].second;
    Rational c = qk.leading() / q0.leading();
    if (qk == c * q0) {
      out.linear_space_equations.push_back(MultiPoly::var(ring, reps[k].first) -
                                           c * MultiPoly::var(ring, reps[it->second].first));
    } else {
      elim_reps.push_back(k);  // same degree but not proportional
    }
  }

  // eliminate t from { x_rep - q_rep(t) }
  std::vector<std::string> elim_vars{"t"};
  for (size_t k : elim_reps) elim_vars.push_back(ring->vars[reps[k].first]);
  RingPtr elim_ring = make_ring(elim_vars, Order::GrevLex, 1);
  std::vector<MultiPoly> graph;
  for (size_t idx = 0; idx < elim_reps.size(); ++idx) {
    size_t k = elim_reps[idx];
    graph.push_back(MultiPoly::var(elim_ring, idx + 1) -
                    lift_unipoly(reps[k].second, elim_ring, 0));
  }
  std::vector<MultiPoly> gb = buchberger(elim_ring, std::move(graph), limits);
  std::vector<MultiPoly> gens = out.linear_space_equations;
  for (const auto& g : gb)
    if (g.degree_in({0}) == 0) gens.push_back(map_to_ring(g, ring));

  out.curve_ideal = detail::canonical_ideal(Ideal(ring, std::move(gens)), limits);
  return out;
}

/// Closure of the cyclic group of diag(eigenvalues): the lattice ideal of the
/// full relation lattice on the diagonal coordinates with off-diagonal pins,
/// plus the |torsion| coset component ideals (scalings of the torsion-free
/// power closure).
inline SemisimpleClosure semisimple_closure(const MultGroupData& g, size_t n, Mode /*mode*/,
                                            const GroebnerLimits& limits = {}) {
  if (g.generators.size() != n)
    fail(ErrorKind::DimensionMismatch, "group must have one generator per diagonal entry");
  SemisimpleClosure out;
  out.group = g;
  out.powered = power_group(g, g.torsion_order);

  RingPtr ring = matrix_ring(n);
  std::vector<size_t> diag_idx(n);
  for (size_t i = 0; i < n; ++i) diag_idx[i] = i * n + i;
  std::vector<MultiPoly> pins;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) pins.push_back(MultiPoly::var(ring, i * n + j));

  Ideal full = lattice_ideal_in(ring, diag_idx, g.relation_lattice, limits);
  std::vector<MultiPoly> full_gens = full.generators();
  full_gens.insert(full_gens.end(), pins.begin(), pins.end());
  out.ideal = detail::canonical_ideal(Ideal(ring, std::move(full_gens)), limits);

  bool rational_values = true;
  for (const auto& s : g.generators) rational_values &= scalar_is_rational(s);
  if (!rational_values) return out;  // cosets are not rational scalings

  for (const auto& s : g.generators) out.diag_values.push_back(scalar_value(g.base, s));

  Ideal y0 = lattice_ideal_in(ring, diag_idx, out.powered.relation_lattice, limits);
  long q = g.torsion_order.get_si();
  for (long coset = 0; coset < q; ++coset) {
    // ideal of M_s^coset * Y0: substitute x_kl -> a_k^-coset x_kl
    RatMatrix scale = RatMatrix::identity(n * n);
    for (size_t k = 0; k < n; ++k)
      for (size_t l = 0; l < n; ++l)
        scale.at(k * n + l, k * n + l) = pow_rational(out.diag_values[k], -coset);
    std::vector<MultiPoly> gens;
    for (const auto& f : y0.generators()) gens.push_back(substitute_linear(f, scale));
    gens.insert(gens.end(), pins.begin(), pins.end());
    out.component_ideals.push_back(detail::canonical_ideal(Ideal(ring, std::move(gens)), limits));
  }
  return out;
}

/// Closure of {S*U : S in the semisimple closure, U on the unipotent curve},
/// component by component: implicitization of the monomial-times-curve
/// parametrization, inverse witnesses for the torus coordinates, union of the
/// torsion cosets via intersection. With no curve the semisimple closure is
/// returned unchanged.
inline ProductClosure product_closure(const SemisimpleClosure& ss, const CurveData* curve,
                                      const GroebnerLimits& limits = {}) {
  if (curve == nullptr) return {ss.ideal, ss.component_ideals};

  size_t p = ss.group.generators.size();
  RingPtr ring = matrix_ring(p);
  size_t r = ss.powered.base.size();
  long q = ss.group.torsion_order.get_si();
  if (ss.diag_values.size() != p)
    fail(ErrorKind::ZeroInput, "product closure needs rational diagonal values");

  std::vector<Ideal> components;
  for (long coset = 0; coset < q; ++coset) {
    std::vector<MultiPoly> extra;  // pins and duplicate identifications
    struct Class {
      size_t var;
      Rational scalar;
      std::vector<Int> beta;
      UniPoly u;
    };
    std::vector<Class> classes;
    std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, size_t> class_of;
    for (size_t k = 0; k < p; ++k) {
      Rational scalar = pow_rational(ss.diag_values[k], coset);
      std::vector<Int> beta(r);
      for (size_t j = 0; j < r; ++j) beta[j] = ss.powered.exponent_matrix.at(j, k);
      std::vector<Rational> beta_key;
      for (const auto& b : beta) beta_key.push_back(Rational(b));
      beta_key.push_back(scalar);
      for (size_t l = 0; l < p; ++l) {
        const UniPoly& u = curve->parametrization[k * p + l];
        size_t var = k * p + l;
        if (u.is_zero()) {
          extra.push_back(MultiPoly::var(ring, var));
          continue;
        }
        auto key = std::make_pair(beta_key, u.coeffs());
        auto it = class_of.find(key);
        if (it == class_of.end()) {
          class_of.emplace(std::move(key), var);
          classes.push_back({var, scalar, beta, u});
        } else {
          extra.push_back(MultiPoly::var(ring, var) - MultiPoly::var(ring, it->second));
        }
      }
    }

    // elimination ring: t, z_1..z_r, w_1..w_r | class representatives
    std::vector<std::string> vars{"t"};
    for (size_t j = 1; j <= r; ++j) vars.push_back("z_" + std::to_string(j));
    for (size_t j = 1; j <= r; ++j) vars.push_back("w_" + std::to_string(j));
    size_t head = vars.size();
    for (const auto& c : classes) vars.push_back(ring->vars[c.var]);
    RingPtr elim_ring = make_ring(vars, Order::GrevLex, head);

    std::vector<MultiPoly> gens;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      const Class& c = classes[ci];
      Monomial zplus(elim_ring->size(), 0), zminus(elim_ring->size(), 0);
      for (size_t j = 0; j < r; ++j) {
        long e = c.beta[j].get_si();
        if (e > 0) zplus[1 + j] = static_cast<int32_t>(e);
        if (e < 0) zminus[1 + j] = static_cast<int32_t>(-e);
      }
      MultiPoly lhs = MultiPoly::var(elim_ring, head + ci) *
                      MultiPoly::term(elim_ring, zminus, Rational(1));
      MultiPoly rhs = c.scalar * MultiPoly::term(elim_ring, zplus, Rational(1)) *
                      lift_unipoly(c.u, elim_ring, 0);
      gens.push_back(lhs - rhs);
    }
    for (size_t j = 0; j < r; ++j)
      gens.push_back(MultiPoly::var(elim_ring, 1 + j) * MultiPoly::var(elim_ring, 1 + r + j) -
                     MultiPoly::constant(elim_ring, Rational(1)));

    std::vector<size_t> head_idx(head);
    for (size_t j = 0; j < head; ++j) head_idx[j] = j;
    std::vector<MultiPoly> gb = buchberger(elim_ring, std::move(gens), limits);
    std::vector<MultiPoly> comp_gens = extra;
    for (const auto& g : gb)
      if (g.degree_in(head_idx) == 0) comp_gens.push_back(map_to_ring(g, ring));
    components.push_back(detail::canonical_ideal(Ideal(ring, std::move(comp_gens)), limits));
  }

  Ideal full = components.front();
  for (size_t i = 1; i < components.size(); ++i) full = intersect(full, components[i], limits);
  return {detail::canonical_ideal(full, limits), std::move(components)};
}

namespace detail {

// Embeds an ideal over the p*p coordinates of the invertible block into the
// n*n Jordan-coordinate ring, pinning every coordinate that touches the
// nilpotent block to zero.
inline std::vector<MultiPoly> embed_block_ideal(const Ideal& block_ideal, size_t p,
                                                const std::vector<size_t>& inv_coords,
                                                const RingPtr& big_ring, size_t n) {
  std::vector<long> var_map(p * p);
  for (size_t a = 0; a < p; ++a)
    for (size_t b = 0; b < p; ++b)
      var_map[a * p + b] = static_cast<long>(inv_coords[a] * n + inv_coords[b]);
  std::vector<MultiPoly> gens;
  for (const auto& f : block_ideal.generators())
    gens.push_back(map_to_ring(f, big_ring, var_map));
  std::vector<bool> invertible(n, false);
  for (size_t c : inv_coords) invertible[c] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l)
      if (!invertible[k] || !invertible[l])
        gens.push_back(MultiPoly::var(big_ring, k * n + l));
  return gens;
}

}  // namespace detail

/// The main pipeline: full closure description of <M> (group) or {M^k, k>=1}
/// (semigroup) in the original coordinates.
inline ClosureReport closure_pipeline(const RatMatrix& m, Mode mode,
                                      const GroebnerLimits& limits = {}) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "closure_pipeline input");
  if (m.is_zero()) fail(ErrorKind::ZeroMatrix, "closure of the zero matrix is undefined");
  size_t n = m.rows();

  JordanData jd = jordan(m);
  if (mode == Mode::Group && jd.nu > 0)
    fail(ErrorKind::GroupModeOnSingular, "group mode needs an invertible matrix");

  NilpotentSplit split = split_nilpotent(jd);
  size_t p = split.invertible_coords.size();

  ClosureReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.nu = jd.nu;
  rep.has_zero_eigenvalue = jd.nu > 0;
  RingPtr ring = matrix_ring(n);

  if (p == 0) {
    // nilpotent: nu isolated points M, M^2, ..., M^{nu-1}, 0 and nothing else
    rep.rank_g = 0;
    rep.torsion_order = 1;
    rep.diagonalizable_part = true;
    rep.dimension = 0;
    rep.num_components = 0;
    RatMatrix pw = m;
    for (size_t k = 1; k < jd.nu; ++k) {
      rep.isolated_points.push_back(pw);
      pw = pw * m;
    }
    rep.isolated_points.push_back(RatMatrix(n, n));  // the zero matrix
    Ideal acc = point_ideal(ring, rep.isolated_points.front());
    for (size_t i = 1; i < rep.isolated_points.size(); ++i)
      acc = intersect(acc, point_ideal(ring, rep.isolated_points[i]), limits);
    rep.ideal = detail::canonical_ideal(acc, limits);
    return rep;
  }

  // invertible part
  std::vector<Rational> diag_values;
  bool diagonalizable = true;
  for (const auto& b : split.invertible_blocks) {
    if (b.size > 1) diagonalizable = false;
    for (size_t i = 0; i < b.size; ++i) diag_values.push_back(b.eigenvalue);
  }
  MultGroupData group = build_group(diag_values);
  SemisimpleClosure ss = semisimple_closure(group, p, mode, limits);

  std::optional<CurveData> curve;
  if (!diagonalizable) {
    JordanData jd_inv;
    jd_inv.blocks = split.invertible_blocks;
    auto [msd, mud] = su_decompose(jd_inv);
    curve = unipotent_closure(mud, split.invertible_blocks, limits);
  }
  ProductClosure prod = product_closure(ss, curve ? &*curve : nullptr, limits);

  rep.rank_g = group.rank;
  rep.torsion_order = group.torsion_order;
  rep.diagonalizable_part = diagonalizable;
  rep.dimension = group.rank + (diagonalizable ? 0 : 1);
  rep.num_components = static_cast<size_t>(group.torsion_order.get_si());

  // embed into the full Jordan coordinates, then transport by X -> P^-1 X P
  RatMatrix conj = conjugation_substitution(jd.p, jd.p_inv);
  auto transport = [&](const Ideal& block_ideal) {
    std::vector<MultiPoly> jgens =
        detail::embed_block_ideal(block_ideal, p, split.invertible_coords, ring, n);
    std::vector<MultiPoly> ogens;
    ogens.reserve(jgens.size());
    for (const auto& f : jgens) ogens.push_back(substitute_linear(f, conj));
    return Ideal(ring, std::move(ogens));
  };

  Ideal x1 = transport(prod.ideal);
  std::vector<Ideal> comps;
  for (const auto& c : prod.component_ideals) comps.push_back(detail::canonical_ideal(transport(c), limits));

  // isolated points M^k, 1 <= k <= nu-1, in the original coordinates
  RatMatrix pw = m;
  for (size_t k = 1; k < std::max<size_t>(jd.nu, 1); ++k) {
    rep.isolated_points.push_back(pw);
    pw = pw * m;
  }
  Ideal full = x1;
  for (const auto& pt : rep.isolated_points) full = intersect(full, point_ideal(ring, pt), limits);
  rep.ideal = detail::canonical_ideal(full, limits);
  if (!comps.empty()) rep.component_ideals = std::move(comps);

  if (diagonalizable) {
    // identity-component toric data in the Jordan diagonal coordinates
    std::vector<std::vector<Int>> pts;
    for (size_t i = 0; i < p; ++i) {
      std::vector<Int> col(ss.powered.base.size());
      for (size_t j = 0; j < col.size(); ++j) col[j] = ss.powered.exponent_matrix.at(j, i);
      pts.push_back(std::move(col));
    }
    rep.toric = toric_from_points(pts, limits);
  }
  return rep;
}

/// Closure report of diag(eigenvalues) given symbolically (value and root of
/// unity phase). The ideal is the lattice ideal of the full relation lattice;
/// component ideals are emitted when the coset scalings are rational.
inline ClosureReport symbolic_diagonal_pipeline(
    const std::vector<std::pair<Rational, Rational>>& eigs, Mode mode,
    const GroebnerLimits& limits = {}) {
  MultGroupData group = build_group(eigs);
  size_t n = eigs.size();
  SemisimpleClosure ss = semisimple_closure(group, n, mode, limits);

  ClosureReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.nu = 0;
  rep.has_zero_eigenvalue = false;
  rep.rank_g = group.rank;
  rep.torsion_order = group.torsion_order;
  rep.diagonalizable_part = true;
  rep.dimension = group.rank;
  rep.num_components = static_cast<size_t>(group.torsion_order.get_si());
  rep.ideal = ss.ideal;
  if (!ss.component_ideals.empty()) rep.component_ideals = ss.component_ideals;

  std::vector<std::vector<Int>> pts;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Int> col(ss.powered.base.size());
    for (size_t j = 0; j < col.size(); ++j) col[j] = ss.powered.exponent_matrix.at(j, i);
    pts.push_back(std::move(col));
  }
  rep.toric = toric_from_points(pts, limits);
  return rep;
}

struct OracleVerdict {
  bool pass = true;
  long power = 0;        // failing power (0 for an isolated-point failure)
  size_t gen_index = 0;  // failing generator
  std::string message;
};

/// Exact power-evaluation check: every generator of the report ideal must
/// vanish on M^k for k = 1..K (and on M^-k in group mode) and on every
/// isolated point.
inline OracleVerdict verify_oracle(const RatMatrix& m, const ClosureReport& rep, size_t k_max,
                                   Mode mode) {
  if (k_max < 1) fail(ErrorKind::ZeroInput, "verify_oracle needs K >= 1");
  const auto& gens = rep.ideal.generators();
  auto check_point = [&](const RatMatrix& pt, long label) -> OracleVerdict {
    std::vector<Rational> coords = detail::flatten(pt);
    for (size_t gi = 0; gi < gens.size(); ++gi)
      if (gens[gi].evaluate(coords) != 0)
        return {false, label, gi,
                "generator " + std::to_string(gi) + " nonzero at power " + std::to_string(label)};
    return {};
  };

  RatMatrix pw = RatMatrix::identity(m.rows());
  for (size_t k = 1; k <= k_max; ++k) {
    pw = pw * m;
    OracleVerdict v = check_point(pw, static_cast<long>(k));
    if (!v.pass) return v;
  }
  if (mode == Mode::Group) {
    RatMatrix minv;
    try {
      minv = inverse(m);
    } catch (const MathError&) {
      fail(ErrorKind::SingularInverse, "group-mode oracle on a singular matrix");
    }
    RatMatrix ipw = RatMatrix::identity(m.rows());
    for (size_t k = 1; k <= k_max; ++k) {
      ipw = ipw * minv;
      OracleVerdict v = check_point(ipw, -static_cast<long>(k));
      if (!v.pass) return v;
    }
  }
  for (const auto& pt : rep.isolated_points) {
    OracleVerdict v = check_point(pt, 0);
    if (!v.pass) {
      v.message = "isolated point violates the ideal";
      return v;
    }
  }
  return {};
}

/// ideal_equal between the closures of <M> and <M^q>; true whenever G(M) is
/// torsion-free.
inline bool power_closure_check(const RatMatrix& m, long q, const GroebnerLimits& limits = {}) {
  if (q == 0) fail(ErrorKind::ZeroInput, "power_closure_check with q = 0");
  ClosureReport a = closure_pipeline(m, Mode::Group, limits);
  ClosureReport b = closure_pipeline(power(m, q), Mode::Group, limits);
  return ideal_equal(a.ideal, b.ideal, limits);
}

}  // namespace zariski
