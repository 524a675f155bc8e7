#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zariski/coprime.hpp"
#include "zariski/rational.hpp"
#include "zariski/unipoly.hpp"

using namespace zariski;

namespace {

Rational q(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

UniPoly poly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return UniPoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("rational parse/print round trip") {
  CHECK(to_string(parse_rational("3/4")) == "3/4");
  CHECK(to_string(parse_rational("-3/4")) == "-3/4");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(to_string(parse_rational("-12")) == "-12");
  CHECK(parse_rational("2/4") == q(1, 2));
  CHECK_THROWS_AS((void)parse_rational("1/0"), MathError);
  CHECK_THROWS_AS((void)parse_rational("a"), MathError);
  CHECK_THROWS_AS((void)parse_rational("1/"), MathError);
  CHECK_THROWS_AS((void)parse_rational("1.5"), MathError);
}

TEST_CASE("rational arithmetic is exact on random samples") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> d(-50, 50), dp(1, 50);
  for (int it = 0; it < 200; ++it) {
    Rational a = q(d(rng), dp(rng)), c = q(d(rng), dp(rng));
    // (a/b + c/d) * (b*d) == a*d + c*b as integers
    Rational lhs = (a + c) * Rational(denom(a) * denom(c));
    Int rhs = numer(a) * denom(c) + numer(c) * denom(a);
    CHECK(lhs == Rational(rhs));
    CHECK(denom(a * c) > 0);
    CHECK(int_gcd(numer(a * c), denom(a * c)) == 1);
  }
}

TEST_CASE("pow_rational handles negative exponents") {
  CHECK(pow_rational(q(2, 3), -2) == q(9, 4));
  CHECK(pow_rational(q(-2), 3) == q(-8));
  CHECK(pow_rational(q(5), 0) == q(1));
}

TEST_CASE("frac_mod1") {
  CHECK(frac_mod1(q(7, 4)) == q(3, 4));
  CHECK(frac_mod1(q(-1, 4)) == q(3, 4));
  CHECK(frac_mod1(q(3)) == q(0));
}

TEST_CASE("unipoly basics") {
  UniPoly p = poly({8, -6, 1});  // t^2 - 6t + 8
  CHECK(p.degree() == 2);
  CHECK(p.eval(q(2)) == q(0));
  CHECK(p.eval(q(4)) == q(0));
  CHECK(p.eval(q(1)) == q(3));
  CHECK((p * poly({0, 1})).degree() == 3);
  CHECK(p.deflate(q(2)) == poly({-4, 1}));
  CHECK(binomial_poly(2) == UniPoly::from_coeffs({q(0), q(-1, 2), q(1, 2)}));
  CHECK(binomial_poly(0) == UniPoly(q(1)));
}

TEST_CASE("rational_roots: quadratic with two roots") {
  // char. polynomial of [[10,-8],[6,-4]]: factor by hand (t-2)(t-4)
  auto rr = rational_roots(poly({8, -6, 1}));
  CHECK(rr.roots.size() == 2);
  CHECK(rr.roots.at(q(2)) == 1);
  CHECK(rr.roots.at(q(4)) == 1);
  CHECK(rr.cofactor.degree() == 0);
}

TEST_CASE("rational_roots: pure power") {
  auto rr = rational_roots(poly({0, 0, 0, 1}));  // t^3
  CHECK(rr.roots.size() == 1);
  CHECK(rr.roots.at(q(0)) == 3);
  CHECK(rr.cofactor.degree() == 0);
}

TEST_CASE("rational_roots: irreducible quadratic") {
  auto rr = rational_roots(poly({1, 0, 1}));  // t^2 + 1
  CHECK(rr.roots.empty());
  CHECK(rr.cofactor == poly({1, 0, 1}));
}

TEST_CASE("rational_roots: non-monic and fractional roots") {
  // (2t - 1)(3t + 2)(t - 5) = 6t^3 - 29t^2 - 11t + 10... build by multiplication
  UniPoly p = poly({-1, 2}) * poly({2, 3}) * poly({-5, 1});
  auto rr = rational_roots(p);
  CHECK(rr.roots.size() == 3);
  CHECK(rr.roots.at(q(1, 2)) == 1);
  CHECK(rr.roots.at(q(-2, 3)) == 1);
  CHECK(rr.roots.at(q(5)) == 1);
  CHECK(rr.cofactor.degree() == 0);
}

TEST_CASE("rational_roots: properties on random products") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-6, 6), dp(1, 4);
  for (int it = 0; it < 60; ++it) {
    UniPoly p(q(1 + dp(rng)));
    int planted = 0;
    for (int f = 0; f < 4; ++f) {
      if (d(rng) % 2 == 0) {
        p = p * UniPoly::from_coeffs({q(-d(rng), dp(rng)), q(1)});
        ++planted;
      } else {
        p = p * poly({1, 0, 1});  // irreducible factor
      }
    }
    auto rr = rational_roots(p);
    int mult_sum = 0;
    for (const auto& [r, m] : rr.roots) {
      mult_sum += m;
      CHECK(p.eval(r) == q(0));
    }
    CHECK(mult_sum >= planted);  // every planted linear factor is found
    CHECK(rr.cofactor.degree() + mult_sum == p.degree());
    // cofactor has none of the found roots
    for (const auto& [r, m] : rr.roots) CHECK(rr.cofactor.eval(r) != q(0));
  }
}

TEST_CASE("rational_roots rejects zero polynomial") {
  CHECK_THROWS_AS((void)rational_roots(UniPoly()), MathError);
}

TEST_CASE("coprime_base: powers of two") {
  // 4 = 2^2, matches G(M) = <2> for eigenvalues {2,4}
  auto f = coprime_base({q(2), q(4)});
  REQUIRE(f.base.size() == 1);
  CHECK(f.base.elements[0] == 2);
  CHECK(f.exps.at(0, 0) == 1);
  CHECK(f.exps.at(1, 0) == 2);
  CHECK(f.signs == std::vector<int>{1, 1});
}

TEST_CASE("coprime_base: unit input") {
  auto f = coprime_base({q(1)});
  CHECK(f.base.size() == 0);
  CHECK(f.exps.rows() == 1);
  CHECK(f.exps.cols() == 0);
  CHECK(f.signs == std::vector<int>{1});
  CHECK(reconstruct(f, 0) == q(1));
}

TEST_CASE("coprime_base: gcd refinement with overlap") {
  auto f = coprime_base({q(6), q(10)});
  // pairwise coprime base, exact reconstruction
  for (size_t a = 0; a < f.base.size(); ++a)
    for (size_t b = a + 1; b < f.base.size(); ++b)
      CHECK(int_gcd(f.base.elements[a], f.base.elements[b]) == 1);
  for (const auto& e : f.base.elements) CHECK(e > 1);
  CHECK(reconstruct(f, 0) == q(6));
  CHECK(reconstruct(f, 1) == q(10));
}

TEST_CASE("coprime_base: 1,2,3,4 over the base {2,3}") {
  auto f = coprime_base({q(1), q(2), q(3), q(4)});
  REQUIRE(f.base.size() == 2);
  CHECK(f.base.elements[0] == 2);
  CHECK(f.base.elements[1] == 3);
  // A = [[0,1,0,2],[0,0,1,0]] as columns of exps
  CHECK(f.exps.at(0, 0) == 0);
  CHECK(f.exps.at(1, 0) == 1);
  CHECK(f.exps.at(2, 0) == 0);
  CHECK(f.exps.at(3, 0) == 2);
  CHECK(f.exps.at(0, 1) == 0);
  CHECK(f.exps.at(1, 1) == 0);
  CHECK(f.exps.at(2, 1) == 1);
  CHECK(f.exps.at(3, 1) == 0);
}

TEST_CASE("coprime_base: zero input rejected") {
  CHECK_THROWS_AS((void)coprime_base({q(2), q(0)}), MathError);
}

TEST_CASE("coprime_base: round-trip identity on random rationals") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> d(-400, 400), dp(1, 400);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> xs;
    for (int i = 0; i < 5; ++i) {
      long n = d(rng);
      if (n == 0) n = 7;
      xs.push_back(q(n, dp(rng)));
    }
    auto f = coprime_base(xs);
    for (size_t a = 0; a < f.base.size(); ++a)
      for (size_t b = a + 1; b < f.base.size(); ++b)
        CHECK(int_gcd(f.base.elements[a], f.base.elements[b]) == 1);
    for (size_t i = 0; i < xs.size(); ++i) CHECK(reconstruct(f, i) == xs[i]);
  }
}

TEST_CASE("integer helpers") {
  CHECK(divisors(Int(12)).size() == 6);
  CHECK(first_primes(4) == std::vector<Int>{2, 3, 5, 7});
  auto f = factorize(Int(720));
  CHECK(f.at(Int(2)) == 4);
  CHECK(f.at(Int(3)) == 2);
  CHECK(f.at(Int(5)) == 1);
  // a modestly large semiprime exercises the rho path
  Int big = Int("10000019") * Int("10000079");
  auto fb = factorize(big);
  CHECK(fb.size() == 2);
  CHECK(fb.begin()->second == 1);
}
