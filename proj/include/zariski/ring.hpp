#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "zariski/errors.hpp"

namespace zariski {

enum class Order { Lex, GrevLex };

inline const char* order_name(Order o) { return o == Order::Lex ? "lex" : "grevlex"; }

/// Exponent vector over a ring's variable list.
using Monomial = std::vector<int32_t>;

/// Polynomial ring descriptor: named variables plus a monomial order. When
/// elim_block > 0 the order is the block (elimination) order: grevlex on the
/// first elim_block variables, ties broken by `order` on the rest.
struct Ring {
  std::vector<std::string> vars;
  Order order = Order::GrevLex;
  size_t elim_block = 0;

  size_t size() const { return vars.size(); }

  long index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<long>(i);
    return -1;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars == b.vars && a.order == b.order && a.elim_block == b.elim_block;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Order order = Order::GrevLex,
                         size_t elim_block = 0) {
  return std::make_shared<Ring>(Ring{std::move(vars), order, elim_block});
}

/// Ring of the n*n matrix entry coordinates x_<row>_<col>, row-major, 1-indexed.
inline RingPtr matrix_ring(size_t n, Order order = Order::GrevLex) {
  std::vector<std::string> vars;
  vars.reserve(n * n);
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= n; ++j)
      vars.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
  return make_ring(std::move(vars), order);
}

/// Ring of n coordinates x_1 .. x_n.
inline RingPtr coordinate_ring(size_t n, Order order = Order::GrevLex) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (size_t i = 1; i <= n; ++i) vars.push_back("x_" + std::to_string(i));
  return make_ring(std::move(vars), order);
}

inline bool ring_equal(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace detail {

inline int cmp_lex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

inline int cmp_grevlex(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Three-way comparison of monomials in the ring's order (>0 means a > b).
inline int monomial_cmp(const Ring& ring, const Monomial& a, const Monomial& b) {
  size_t n = ring.size();
  if (ring.elim_block > 0) {
    int c = detail::cmp_grevlex(a, b, 0, ring.elim_block);
    if (c != 0) return c;
    return ring.order == Order::Lex ? detail::cmp_lex(a, b, ring.elim_block, n)
                                    : detail::cmp_grevlex(a, b, ring.elim_block, n);
  }
  return ring.order == Order::Lex ? detail::cmp_lex(a, b, 0, n)
                                  : detail::cmp_grevlex(a, b, 0, n);
}

inline long total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0L);
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace zariski
