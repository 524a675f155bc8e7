#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zariski/multipoly.hpp"

namespace zariski {

struct GroebnerLimits {
  size_t max_basis = 5000;  // abort (BudgetExceeded) past this many basis elements
};

namespace detail {

inline MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.times_term(monomial_div(l, f.leading_monomial()),
                             Rational(1) / f.leading_coeff());
  MultiPoly b = g.times_term(monomial_div(l, g.leading_monomial()),
                             Rational(1) / g.leading_coeff());
  return a - b;
}

}  // namespace detail

/// Full remainder of f on division by the polynomial list G (every term of the
/// result is reducible by no leading term of G). Deterministic: among the
/// eligible divisors the sparsest wins, ties by list position.
inline MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& g) {
  MultiPoly h = f;
  MultiPoly rem = MultiPoly::zero(f.ring());
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const MultiPoly* divisor = nullptr;
    for (const auto& gi : g)
      if (!gi.is_zero() && monomial_divides(gi.leading_monomial(), lm)) {
        if (!divisor || gi.term_count() < divisor->term_count()) divisor = &gi;
      }
    if (divisor) {
      h = h - divisor->times_term(monomial_div(lm, divisor->leading_monomial()),
                                  h.leading_coeff() / divisor->leading_coeff());
    } else {
      MultiPoly lt = MultiPoly::term(h.ring(), lm, h.leading_coeff());
      rem = rem + lt;
      h = h - lt;
    }
  }
  return rem;
}

/// Buchberger's algorithm with the coprime-leading-term and chain criteria.
/// Returns the reduced Groebner basis, monic, sorted by ascending leading
/// monomial; canonical for a given ideal and ring order.
inline std::vector<MultiPoly> buchberger(const RingPtr& ring, std::vector<MultiPoly> gens,
                                         const GroebnerLimits& limits = {}) {
  std::vector<MultiPoly> g;
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    g.push_back(map_to_ring(f, ring).primitive());
  }
  if (g.empty()) return {};
  if (g.size() > limits.max_basis)
    fail(ErrorKind::BudgetExceeded, "generator count exceeds budget");

  struct PairKey {
    Monomial lcm;
    size_t i, j;
  };
  auto key_less = [&](const PairKey& a, const PairKey& b) {
    int c = monomial_cmp(*ring, a.lcm, b.lcm);
    if (c != 0) return c < 0;  // smaller lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<size_t, size_t>> treated;

  auto push_pairs_with = [&](size_t t) {
    for (size_t i = 0; i < t; ++i)
      queue.insert({monomial_lcm(g[i].leading_monomial(), g[t].leading_monomial()), i, t});
  };
  for (size_t t = 1; t < g.size(); ++t) push_pairs_with(t);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    treated.emplace(pk.i, pk.j);

    const Monomial& li = g[pk.i].leading_monomial();
    const Monomial& lj = g[pk.j].leading_monomial();
    if (monomial_coprime(li, lj)) continue;  // product criterion
    bool chained = false;                    // chain criterion
    for (size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!monomial_divides(g[k].leading_monomial(), pk.lcm)) continue;
      auto pr = [&](size_t a, size_t b) {
        return treated.count({std::min(a, b), std::max(a, b)}) > 0;
      };
      if (pr(pk.i, k) && pr(pk.j, k)) chained = true;
    }
    if (chained) continue;

    MultiPoly r = reduce_full(detail::spoly(g[pk.i], g[pk.j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.primitive());
    if (g.size() > limits.max_basis)
      fail(ErrorKind::BudgetExceeded, "Groebner basis exceeded budget of " +
                                          std::to_string(limits.max_basis) + " polynomials");
    push_pairs_with(g.size() - 1);
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return monomial_cmp(*ring, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<MultiPoly> minimal;
  for (const auto& f : g) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (monomial_divides(h.leading_monomial(), f.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(f);
  }

  // tail-interreduce: one pass suffices since the minimal leading terms are
  // stable under tail reduction
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full(minimal[i], others);
  }
  for (auto& f : minimal) f = f.monic();
  std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return monomial_cmp(*ring, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return minimal;
}

/// Ideal in a fixed ring; the reduced Groebner basis (in the ring's own order)
/// is computed on demand and cached, write-once.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  const std::vector<MultiPoly>& groebner(const GroebnerLimits& limits = {}) const {
    if (!gb_) gb_ = std::make_shared<std::vector<MultiPoly>>(buchberger(ring_, gens_, limits));
    return *gb_;
  }

  bool is_zero_ideal() const { return groebner().empty(); }
  bool is_unit_ideal() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().is_constant();
  }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  mutable std::shared_ptr<std::vector<MultiPoly>> gb_;
};

/// Remainder of f modulo I; zero iff f lies in I.
inline MultiPoly normal_form(const MultiPoly& f, const Ideal& i) {
  if (!ring_equal(f.ring(), i.ring())) fail(ErrorKind::RingMismatch, "normal_form ring mismatch");
  return reduce_full(map_to_ring(f, i.ring()), i.groebner());
}

inline bool ideal_contains(const Ideal& i, const MultiPoly& f) {
  return normal_form(f, i).is_zero();
}

namespace detail {

inline std::string fresh_var(const Ring& ring, const std::string& stem) {
  if (ring.index_of(stem) < 0) return stem;
  for (int k = 1;; ++k) {
    std::string name = stem + "_" + std::to_string(k);
    if (ring.index_of(name) < 0) return name;
  }
}

}  // namespace detail

/// I ∩ Q[vars not in drop]: block-order Groebner basis, keeping the basis
/// elements free of the dropped variables. Returns an ideal over the ring of
/// the remaining variables (same base order).
inline Ideal eliminate(const Ideal& i, const std::vector<size_t>& drop,
                       const GroebnerLimits& limits = {}) {
  if (drop.empty()) return i;
  const Ring& ring = *i.ring();
  std::vector<bool> dropped(ring.size(), false);
  for (size_t d : drop) {
    if (d >= ring.size()) fail(ErrorKind::DimensionMismatch, "eliminate: bad variable index");
    dropped[d] = true;
  }
  std::vector<std::string> elim_vars, kept_vars;
  std::vector<size_t> drop_sorted, kept_idx;
  for (size_t v = 0; v < ring.size(); ++v)
    if (dropped[v]) {
      elim_vars.push_back(ring.vars[v]);
      drop_sorted.push_back(v);
    } else {
      kept_vars.push_back(ring.vars[v]);
      kept_idx.push_back(v);
    }

  std::vector<std::string> all_vars = elim_vars;
  all_vars.insert(all_vars.end(), kept_vars.begin(), kept_vars.end());
  RingPtr elim_ring = make_ring(std::move(all_vars), Order::GrevLex, elim_vars.size());

  std::vector<MultiPoly> mapped;
  mapped.reserve(i.generators().size());
  for (const auto& f : i.generators()) mapped.push_back(map_to_ring(f, elim_ring));
  std::vector<MultiPoly> gb = buchberger(elim_ring, std::move(mapped), limits);

  RingPtr out_ring = make_ring(kept_vars, ring.order);
  std::vector<size_t> elim_idx(elim_vars.size());
  for (size_t k = 0; k < elim_vars.size(); ++k) elim_idx[k] = k;
  std::vector<MultiPoly> kept;
  for (const auto& f : gb)
    if (f.degree_in(elim_idx) == 0) kept.push_back(map_to_ring(f, out_ring));
  return Ideal(out_ring, std::move(kept));
}

/// Saturation (I : f^inf) via the auxiliary-variable trick.
inline Ideal saturate(const Ideal& i, const MultiPoly& f, const GroebnerLimits& limits = {}) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "saturate by the zero polynomial");
  if (!ring_equal(f.ring(), i.ring())) fail(ErrorKind::RingMismatch, "saturate ring mismatch");
  if (f.is_constant()) return i;

  const Ring& ring = *i.ring();
  std::string aux = detail::fresh_var(ring, "t");
  std::vector<std::string> vars{aux};
  vars.insert(vars.end(), ring.vars.begin(), ring.vars.end());
  RingPtr ext = make_ring(std::move(vars), Order::GrevLex, 1);

  std::vector<MultiPoly> gens;
  gens.reserve(i.generators().size() + 1);
  for (const auto& gpoly : i.generators()) gens.push_back(map_to_ring(gpoly, ext));
  gens.push_back(MultiPoly::var(ext, 0) * map_to_ring(f, ext) -
                 MultiPoly::constant(ext, Rational(1)));

  std::vector<MultiPoly> gb = buchberger(ext, std::move(gens), limits);
  std::vector<MultiPoly> kept;
  for (const auto& gpoly : gb)
    if (gpoly.degree_in({0}) == 0) kept.push_back(map_to_ring(gpoly, i.ring()));
  return Ideal(i.ring(), std::move(kept));
}

/// I ∩ J via t·I + (1-t)·J and elimination of t.
inline Ideal intersect(const Ideal& i, const Ideal& j, const GroebnerLimits& limits = {}) {
  if (!ring_equal(i.ring(), j.ring())) fail(ErrorKind::RingMismatch, "intersect ring mismatch");
  if (i.generators().empty()) return i;  // zero ideal
  if (j.generators().empty()) return j;

  const Ring& ring = *i.ring();
  std::string aux = detail::fresh_var(ring, "t");
  std::vector<std::string> vars{aux};
  vars.insert(vars.end(), ring.vars.begin(), ring.vars.end());
  RingPtr ext = make_ring(std::move(vars), Order::GrevLex, 1);

  MultiPoly t = MultiPoly::var(ext, 0);
  MultiPoly one_minus_t = MultiPoly::constant(ext, Rational(1)) - t;
  std::vector<MultiPoly> gens;
  for (const auto& f : i.generators()) gens.push_back(t * map_to_ring(f, ext));
  for (const auto& f : j.generators()) gens.push_back(one_minus_t * map_to_ring(f, ext));

  std::vector<MultiPoly> gb = buchberger(ext, std::move(gens), limits);
  std::vector<MultiPoly> kept;
  for (const auto& gpoly : gb)
    if (gpoly.degree_in({0}) == 0) kept.push_back(map_to_ring(gpoly, i.ring()));
  return Ideal(i.ring(), std::move(kept));
}

/// Equality of ideals: reduced Groebner bases over the fixed canonical order
/// (lex on the shared variable list) must coincide.
inline bool ideal_equal(const Ideal& i, const Ideal& j, const GroebnerLimits& limits = {}) {
  if (!i.ring() || !j.ring()) fail(ErrorKind::RingMismatch, "ideal_equal on empty ideal");
  if (i.ring()->vars != j.ring()->vars) fail(ErrorKind::RingMismatch, "ideal_equal ring mismatch");
  RingPtr lex_ring = make_ring(i.ring()->vars, Order::Lex);
  std::vector<MultiPoly> gi = buchberger(lex_ring, i.generators(), limits);
  std::vector<MultiPoly> gj = buchberger(lex_ring, j.generators(), limits);
  return gi == gj;
}

/// Reduced Groebner basis of I re-expressed in the requested order.
inline std::vector<MultiPoly> reduced_basis(const Ideal& i, Order order,
                                            const GroebnerLimits& limits = {}) {
  if (i.ring()->order == order && i.ring()->elim_block == 0) return i.groebner(limits);
  RingPtr ring = make_ring(i.ring()->vars, order);
  return buchberger(ring, i.generators(), limits);
}

}  // namespace zariski
