#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zariski/rational.hpp"
#include "zariski/ratmatrix.hpp"
#include "zariski/ring.hpp"
#include "zariski/unipoly.hpp"

namespace zariski {

/// Multivariate polynomial over the rationals. Terms are kept sorted in
/// descending ring order; no zero coefficients are stored.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }

  static MultiPoly constant(RingPtr ring, const Rational& c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.emplace_back(Monomial(p.ring_->size(), 0), c);
    return p;
  }

  static MultiPoly var(RingPtr ring, size_t i, int32_t power = 1) {
    MultiPoly p(ring);
    Monomial m(ring->size(), 0);
    m[i] = power;
    p.terms_.emplace_back(std::move(m), Rational(1));
    return p;
  }

  static MultiPoly term(RingPtr ring, Monomial m, const Rational& c) {
    MultiPoly p(ring);
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
  }

  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms) {
    MultiPoly p(ring);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return monomial_cmp(*ring, a.first, b.first) > 0;
    });
    for (auto& t : terms) {
      if (t.second == 0) continue;
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
    }
    p.prune();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
  }

  Rational constant_value() const {
    return is_zero() ? Rational(0) : terms_[0].second;
  }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }

  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.first));
    return d;
  }

  /// Max exponent sum over the variable index set.
  long degree_in(const std::vector<size_t>& vars) const {
    long d = 0;
    for (const auto& t : terms_) {
      long s = 0;
      for (size_t v : vars) s += t.first[v];
      d = std::max(d, s);
    }
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    MultiPoly r(a.ring_ ? a.ring_ : b.ring_);
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = monomial_cmp(*r.ring_, a.terms_[i].first, b.terms_[j].first);
      if (c > 0)
        r.terms_.push_back(a.terms_[i++]);
      else if (c < 0)
        r.terms_.push_back(b.terms_[j++]);
      else {
        Rational s = a.terms_[i].second + b.terms_[j].second;
        if (s != 0) r.terms_.emplace_back(a.terms_[i].first, s);
        ++i;
        ++j;
      }
    }
    while (i < a.terms_.size()) r.terms_.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) r.terms_.push_back(b.terms_[j++]);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    if (s == 0) return MultiPoly(a.ring_);
    MultiPoly r = a;
    for (auto& t : r.terms_) t.second *= s;
    return r;
  }

  /// Multiply by a single term.
  MultiPoly times_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return MultiPoly(ring_);
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(monomial_mul(t.first, m), t.second * c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
    auto cmp = [&ring](const Monomial& x, const Monomial& y) {
      return monomial_cmp(*ring, x, y) > 0;
    };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = monomial_mul(ta.first, tb.first);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), ta.second * tb.second);
        else
          it->second += ta.second * tb.second;
      }
    MultiPoly r(ring);
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }

  MultiPoly pow(size_t e) const {
    MultiPoly r = constant(ring_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Exact evaluation at a rational point.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->size()) fail(ErrorKind::DimensionMismatch, "evaluate point size");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) v *= pow_rational(point[i], m[i]);
      acc += v;
    }
    return acc;
  }

  /// Substitute each variable by the given polynomial (in any common ring).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != ring_->size()) fail(ErrorKind::DimensionMismatch, "substitute images");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    MultiPoly acc = MultiPoly::zero(target);
    // cache powers per variable
    std::vector<std::vector<MultiPoly>> pows(images.size());
    auto power_of = [&](size_t i, int32_t e) -> const MultiPoly& {
      auto& cache = pows[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
      while (cache.size() <= static_cast<size_t>(e)) cache.push_back(cache.back() * images[i]);
      return cache[static_cast<size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
      MultiPoly t = MultiPoly::constant(target, c);
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) t = t * power_of(i, m[i]);
      acc = acc + t;
    }
    return acc;
  }

  /// Scale so coefficients are coprime integers with positive leading sign.
  MultiPoly primitive() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& t : terms_) den_lcm = int_lcm(den_lcm, denom(t.second));
    Int content = 0;
    for (const auto& t : terms_) content = int_gcd(content, numer(t.second) * div_exact(den_lcm, denom(t.second)));
    Rational scale = make_rational(den_lcm, content);
    if (leading_coeff() < 0) scale = -scale;
    return scale * *this;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading_coeff()) * *this;
  }

 private:
  void check_ring(const MultiPoly& other) const {
    if (ring_ && other.ring_ && !ring_equal(ring_, other.ring_))
      fail(ErrorKind::RingMismatch, "polynomials from different rings");
  }
  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Re-keys a polynomial into `target`, mapping source variable i to target
/// variable var_map[i]. Fails if an exponent lands on a missing variable.
inline MultiPoly map_to_ring(const MultiPoly& p, const RingPtr& target,
                             const std::vector<long>& var_map) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(target->size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (var_map[i] < 0) fail(ErrorKind::RingMismatch, "variable not present in target ring");
      nm[static_cast<size_t>(var_map[i])] += m[i];
    }
    terms.emplace_back(std::move(nm), c);
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

/// Variable map by matching names.
inline std::vector<long> name_map(const Ring& from, const Ring& to) {
  std::vector<long> map(from.size());
  for (size_t i = 0; i < from.size(); ++i) map[i] = to.index_of(from.vars[i]);
  return map;
}

inline MultiPoly map_to_ring(const MultiPoly& p, const RingPtr& target) {
  return map_to_ring(p, target, name_map(*p.ring(), *target));
}

/// f with variable i replaced by the linear form sum_j S(i,j) x_j.
inline MultiPoly substitute_linear(const MultiPoly& f, const RatMatrix& s) {
  const RingPtr& ring = f.ring();
  size_t n = ring->size();
  if (s.rows() != n || s.cols() != n)
    fail(ErrorKind::DimensionMismatch, "substitution matrix must be nvars x nvars");
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<MultiPoly::Term> terms;
    for (size_t j = 0; j < n; ++j) {
      if (s.at(i, j) == 0) continue;
      Monomial m(n, 0);
      m[j] = 1;
      terms.emplace_back(std::move(m), s.at(i, j));
    }
    images.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  return f.substitute(images);
}

/// Lift a univariate polynomial to var t_index of a multivariate ring.
inline MultiPoly lift_unipoly(const UniPoly& p, const RingPtr& ring, size_t t_index) {
  std::vector<MultiPoly::Term> terms;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeff(i) == 0) continue;
    Monomial m(ring->size(), 0);
    m[t_index] = static_cast<int32_t>(i);
    terms.emplace_back(std::move(m), p.coeff(i));
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// ASCII grammar:  poly := ['-'] term (('+'|'-') term)*
//                 term := coef ['*' factors] | factors
//                 factors := var['^'nat] ('*' var['^'nat])*
//                 coef := nat ['/' nat]
// e.g. "3/2*x_1_2^2*x_2_2 - 1"
// ---------------------------------------------------------------------------

inline std::string poly_to_string(const MultiPoly& p,
                                  const std::vector<std::string>* name_override = nullptr) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    bool first = out.empty();
    bool neg = c < 0;
    if (!first)
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    Rational a = neg ? Rational(-c) : c;
    bool has_vars = total_degree(m) > 0;
    if (!has_vars || a != 1) out += to_string(a);
    bool printed = !has_vars || a != 1;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) out += "*";
      out += name_override ? (*name_override)[i] : ring.vars[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      printed = true;
    }
  }
  return out;
}

namespace detail {

struct PolyLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(ErrorKind::ParseError, "expected number in polynomial");
    return std::string(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail(ErrorKind::ParseError, "expected identifier in polynomial");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace detail

/// Parses the documented ASCII polynomial grammar in the given ring.
inline MultiPoly parse_poly(const RingPtr& ring, std::string_view text) {
  detail::PolyLexer lx{text};
  std::vector<MultiPoly::Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (lx.accept('+'))
      sign = 1;
    else if (!first)
      fail(ErrorKind::ParseError, "expected '+' or '-' between terms");
    first = false;

    Rational coef(sign);
    Monomial mono(ring->size(), 0);
    bool any_factor = false;

    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lx.number();
      std::string den = "1";
      if (lx.accept('/')) den = lx.number();
      coef *= parse_rational(num + (den == "1" ? "" : "/" + den));
      any_factor = true;
      if (!lx.accept('*')) {
        terms.emplace_back(std::move(mono), coef);
        continue;
      }
    }
    // variable factors
    while (true) {
      std::string name = lx.ident();
      long idx = ring->index_of(name);
      if (idx < 0) fail(ErrorKind::ParseError, "unknown variable '" + name + "'");
      int32_t e = 1;
      if (lx.accept('^')) e = static_cast<int32_t>(std::stol(lx.number()));
      mono[static_cast<size_t>(idx)] += e;
      any_factor = true;
      if (!lx.accept('*')) break;
    }
    if (!any_factor) fail(ErrorKind::ParseError, "empty term");
    terms.emplace_back(std::move(mono), coef);
  }
  if (terms.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  return MultiPoly::from_terms(ring, std::move(terms));
}

}  // namespace zariski
