#pragma once

#include <utility>
#include <vector>

#include "zariski/coprime.hpp"
#include "zariski/lattice.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/// Element of C^*: (exponent vector over a shared coprime base) times the root
/// of unity e^{2 pi i phase}, phase reduced into [0,1). A sign -1 is phase 1/2.
struct SymbolicScalar {
  std::vector<Int> exps;
  Rational phase;  // in [0, 1)

  friend bool operator==(const SymbolicScalar& a, const SymbolicScalar& b) {
    return a.exps == b.exps && a.phase == b.phase;
  }
};

inline bool scalar_is_one(const SymbolicScalar& s) {
  if (s.phase != 0) return false;
  for (const auto& e : s.exps)
    if (e != 0) return false;
  return true;
}

inline bool scalar_is_rational(const SymbolicScalar& s) {
  return s.phase == 0 || s.phase == make_rational(1, 2);
}

/// Exact value when the phase is 0 or 1/2.
inline Rational scalar_value(const CoprimeBase& base, const SymbolicScalar& s) {
  if (!scalar_is_rational(s)) fail(ErrorKind::ZeroInput, "scalar has a non-real phase");
  Rational v(s.phase == 0 ? 1 : -1);
  for (size_t j = 0; j < base.size(); ++j)
    v *= pow_rational(Rational(base.elements[j]), static_cast<long>(s.exps[j].get_si()));
  return v;
}

inline SymbolicScalar scalar_mul(const SymbolicScalar& a, const SymbolicScalar& b) {
  SymbolicScalar r = a;
  for (size_t j = 0; j < r.exps.size(); ++j) r.exps[j] += b.exps[j];
  r.phase = frac_mod1(r.phase + b.phase);
  return r;
}

inline SymbolicScalar scalar_pow(const SymbolicScalar& a, const Int& k) {
  SymbolicScalar r = a;
  for (auto& e : r.exps) e *= k;
  r.phase = frac_mod1(Rational(k) * a.phase);
  return r;
}

/// The multiplicative group generated by nonzero scalars: rank, torsion order,
/// the full relation lattice {k : prod a_i^{k_i} = 1}, and the coprime-base
/// exponent matrix (one row per base element, one column per generator).
struct MultGroupData {
  CoprimeBase base;
  std::vector<SymbolicScalar> generators;
  IntMatrix exponent_matrix;  // r x n
  size_t rank = 0;
  Int torsion_order = 1;
  Lattice relation_lattice;   // subset of Z^n
  Lattice magnitude_kernel;   // kernel of the exponent matrix
};

namespace detail {

inline MultGroupData group_from_scalars(CoprimeBase base,
                                        std::vector<SymbolicScalar> gens) {
  MultGroupData g;
  g.base = std::move(base);
  g.generators = std::move(gens);
  size_t n = g.generators.size();
  size_t r = g.base.size();
  g.exponent_matrix = IntMatrix(r, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < r; ++j) g.exponent_matrix.at(j, i) = g.generators[i].exps[j];
  g.rank = rank(g.exponent_matrix);
  g.magnitude_kernel = kernel(g.exponent_matrix);

  std::vector<Rational> phases;
  phases.reserve(n);
  for (const auto& s : g.generators) phases.push_back(s.phase);
  g.relation_lattice = congruence_sublattice(g.magnitude_kernel, phases);

  // torsion = order of the subgroup of Q/Z generated by the phase sums over a
  // kernel basis = lcm of the reduced denominators (1 when empty)
  g.torsion_order = 1;
  for (const auto& v : g.magnitude_kernel.basis) {
    Rational dot(0);
    for (size_t i = 0; i < n; ++i) dot += Rational(v[i]) * phases[i];
    g.torsion_order = int_lcm(g.torsion_order, denom(frac_mod1(dot)));
  }
  return g;
}

}  // namespace detail

/// Group of the given (value, extra phase) pairs. A negative rational value
/// contributes phase 1/2; the magnitudes are factored over one shared
/// coprime base.
inline MultGroupData build_group(const std::vector<std::pair<Rational, Rational>>& eigs) {
  if (eigs.empty()) fail(ErrorKind::ZeroEigenvalue, "build_group with no generators");
  std::vector<Rational> magnitudes;
  std::vector<Rational> phases;
  for (const auto& [value, extra] : eigs) {
    if (value == 0) fail(ErrorKind::ZeroEigenvalue, "zero eigenvalue in build_group");
    magnitudes.push_back(value < 0 ? Rational(-value) : value);
    phases.push_back(frac_mod1(extra + (value < 0 ? make_rational(1, 2) : Rational(0))));
  }
  CoprimeFactorization f = coprime_base(magnitudes);
  std::vector<SymbolicScalar> gens;
  gens.reserve(eigs.size());
  for (size_t i = 0; i < eigs.size(); ++i) {
    SymbolicScalar s;
    s.exps.reserve(f.base.size());
    for (size_t j = 0; j < f.base.size(); ++j) s.exps.push_back(f.exps.at(i, j));
    s.phase = phases[i];
    gens.push_back(std::move(s));
  }
  return detail::group_from_scalars(std::move(f.base), std::move(gens));
}

inline MultGroupData build_group(const std::vector<Rational>& values) {
  std::vector<std::pair<Rational, Rational>> eigs;
  eigs.reserve(values.size());
  for (const auto& v : values) eigs.emplace_back(v, Rational(0));
  return build_group(eigs);
}

/// Group generated by the q-th powers of the generators. For q = torsion_order
/// the result is torsion-free of the same rank.
inline MultGroupData power_group(const MultGroupData& g, const Int& q) {
  if (q < 1) fail(ErrorKind::ZeroInput, "power_group needs q >= 1");
  std::vector<SymbolicScalar> gens;
  gens.reserve(g.generators.size());
  for (const auto& s : g.generators) gens.push_back(scalar_pow(s, q));
  return detail::group_from_scalars(g.base, std::move(gens));
}

/// Exact evaluation of prod generators_i ^ {v_i}.
inline SymbolicScalar evaluate_word(const MultGroupData& g, const std::vector<Int>& v) {
  SymbolicScalar acc{std::vector<Int>(g.base.size(), Int(0)), Rational(0)};
  for (size_t i = 0; i < v.size(); ++i)
    acc = scalar_mul(acc, scalar_pow(g.generators[i], v[i]));
  return acc;
}

}  // namespace zariski
