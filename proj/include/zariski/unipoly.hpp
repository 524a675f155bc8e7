#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zariski/rational.hpp"

namespace zariski {

/// Dense univariate polynomial over the rationals, coefficients lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
  }

  static UniPoly from_coeffs(std::vector<Rational> coeffs) {
    UniPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  /// The monomial c * t^d.
  static UniPoly monomial(const Rational& c, size_t d) {
    UniPoly p;
    if (c != 0) {
      p.c_.assign(d + 1, Rational(0));
      p.c_[d] = c;
    }
    return p;
  }

  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return UniPoly();
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Quotient by (t - r); remainder must be zero (checked by caller via eval).
  UniPoly deflate(const Rational& root) const {
    if (is_zero()) return UniPoly();
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c_[i] + carry * root;
    }
    // carry is the remainder p(root)
    return from_coeffs(std::move(q));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational c = c_[i];
      bool first = out.empty();
      if (!first) out += (c > 0 ? " + " : " - ");
      else if (c < 0) out += "-";
      Rational a = c > 0 ? c : Rational(-c);
      if (i == 0 || a != 1) out += to_string(a);
      if (i > 0) {
        if (a != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Binomial coefficient polynomial C(t, s) = t(t-1)...(t-s+1)/s!.
inline UniPoly binomial_poly(size_t s) {
  UniPoly p(Rational(1));
  Int fact = 1;
  for (size_t j = 0; j < s; ++j) {
    p = p * UniPoly::from_coeffs({Rational(-static_cast<long>(j)), Rational(1)});
    fact *= Int(j + 1);
  }
  return make_rational(1, fact) * p;
}

struct RationalRoots {
  std::map<Rational, int> roots;  // root -> multiplicity
  UniPoly cofactor;               // p / prod (t - r)^mult, no rational roots left
};

/// All rational roots of p with multiplicities, plus the rational-root-free cofactor.
inline RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroInput, "rational_roots of the zero polynomial");
  RationalRoots out;
  UniPoly cur = p;

  // split off t^k
  size_t k = 0;
  while (k < cur.coeffs().size() && cur.coeff(k) == 0) ++k;
  if (k > 0) {
    out.roots[Rational(0)] = static_cast<int>(k);
    std::vector<Rational> shifted(cur.coeffs().begin() + static_cast<long>(k), cur.coeffs().end());
    cur = UniPoly::from_coeffs(std::move(shifted));
  }
  if (cur.degree() == 0) {
    out.cofactor = UniPoly(Rational(1));
    return out;
  }

  // clear denominators to a primitive integer polynomial
  Int den_lcm = 1;
  for (const auto& c : cur.coeffs()) den_lcm = int_lcm(den_lcm, denom(c));
  std::vector<Int> ic;
  ic.reserve(cur.coeffs().size());
  Int content = 0;
  for (const auto& c : cur.coeffs()) {
    Int v = numer(c) * div_exact(den_lcm, denom(c));
    ic.push_back(v);
    content = int_gcd(content, v);
  }
  for (auto& v : ic) v = div_exact(v, content);

  // rational root theorem candidates from the primitive polynomial
  std::set<Rational> candidates;
  for (const Int& dp : divisors(ic.front()))
    for (const Int& dq : divisors(ic.back())) {
      if (int_gcd(dp, dq) != 1) continue;
      candidates.insert(make_rational(dp, dq));
      candidates.insert(make_rational(-dp, dq));
    }

  for (const Rational& r : candidates) {
    int mult = 0;
    while (cur.degree() > 0 && cur.eval(r) == 0) {
      cur = cur.deflate(r);
      ++mult;
    }
    if (mult > 0) out.roots[r] = mult;
    if (cur.degree() == 0) break;
  }
  out.cofactor = cur;
  return out;
}

}  // namespace zariski
