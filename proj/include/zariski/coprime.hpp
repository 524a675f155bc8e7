#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "zariski/intmatrix.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/// Pairwise-coprime positive integers > 1, sorted ascending.
struct CoprimeBase {
  std::vector<Int> elements;

  size_t size() const { return elements.size(); }
  friend bool operator==(const CoprimeBase& a, const CoprimeBase& b) {
    return a.elements == b.elements;
  }
};

struct CoprimeFactorization {
  CoprimeBase base;
  IntMatrix exps;          // one row per input, one column per base element
  std::vector<int> signs;  // +1 / -1 per input
};

namespace detail {

// gcd-refinement: splits a multiset of integers > 1 into a pairwise-coprime set
// over which every input factors. No integer factorization involved.
inline std::vector<Int> refine_coprime(std::deque<Int> work) {
  std::vector<Int> base;
  while (!work.empty()) {
    Int x = work.front();
    work.pop_front();
    if (x == 1) continue;
    bool split = false;
    for (size_t i = 0; i < base.size(); ++i) {
      Int g = int_gcd(x, base[i]);
      if (g == 1) continue;
      Int b = base[i];
      base.erase(base.begin() + static_cast<long>(i));
      work.push_back(div_exact(b, g));
      work.push_back(g);
      work.push_back(div_exact(x, g));
      split = true;
      break;
    }
    if (!split) base.push_back(x);
  }
  std::sort(base.begin(), base.end());
  return base;
}

// exponent of b in v (how many times b divides v)
inline int val_at(Int v, const Int& b, Int& rest) {
  int e = 0;
  while (divides(b, v)) {
    v = div_exact(v, b);
    ++e;
  }
  rest = v;
  return e;
}

}  // namespace detail

/// Exact multiplicative decomposition x_i = sign_i * prod_j base_j ^ exps[i][j]
/// over a pairwise-coprime base obtained by iterated gcd splitting.
inline CoprimeFactorization coprime_base(const std::vector<Rational>& xs) {
  std::deque<Int> work;
  for (const Rational& x : xs) {
    if (x == 0) fail(ErrorKind::ZeroInput, "coprime_base with a zero input");
    work.push_back(int_abs(numer(x)));
    work.push_back(denom(x));
  }
  CoprimeFactorization out;
  out.base.elements = detail::refine_coprime(std::move(work));
  size_t r = out.base.elements.size();
  out.exps = IntMatrix(xs.size(), r);
  out.signs.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    out.signs.push_back(xs[i] < 0 ? -1 : +1);
    Int num = int_abs(numer(xs[i]));
    Int den = denom(xs[i]);
    for (size_t j = 0; j < r; ++j) {
      Int rest;
      int en = detail::val_at(num, out.base.elements[j], rest);
      num = rest;
      int ed = detail::val_at(den, out.base.elements[j], rest);
      den = rest;
      out.exps.at(i, j) = en - ed;
    }
    // refinement guarantees every input factors over the base
    if (num != 1 || den != 1) fail(ErrorKind::ZeroInput, "coprime base does not cover input");
  }
  return out;
}

/// Reconstructs x_i from base powers and sign (round-trip identity).
inline Rational reconstruct(const CoprimeFactorization& f, size_t i) {
  Rational v(f.signs[i]);
  for (size_t j = 0; j < f.base.size(); ++j) {
    long e = static_cast<long>(f.exps.at(i, j).get_si());
    v *= pow_rational(Rational(f.base.elements[j]), e);
  }
  return v;
}

}  // namespace zariski
