#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zariski/mgroup.hpp"

using namespace zariski;

namespace {

Rational q(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

std::vector<Int> vec(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<std::pair<Rational, Rational>> syms(
    std::initializer_list<std::pair<Rational, Rational>> xs) {
  return xs;
}

// brute-force relation search: all |k_i| <= bound with prod v_i^{k_i} = 1
std::vector<std::vector<long>> brute_relations(const std::vector<Rational>& vals, long bound) {
  std::vector<std::vector<long>> found;
  size_t n = vals.size();
  std::vector<long> k(n, -bound);
  while (true) {
    Rational prod(1);
    for (size_t i = 0; i < n; ++i) prod *= pow_rational(vals[i], k[i]);
    if (prod == 1) found.push_back(k);
    size_t i = 0;
    while (i < n && k[i] == bound) k[i++] = -bound;
    if (i == n) break;
    ++k[i];
  }
  return found;
}

}  // namespace

TEST_CASE("build_group: eigenvalues 2 and 4") {
  MultGroupData g = build_group({q(2), q(4)});
  CHECK(g.rank == 1);
  CHECK(g.torsion_order == 1);
  CHECK(lattice_equal(g.relation_lattice, make_lattice(2, {vec({2, -1})})));
}

TEST_CASE("build_group: eigenvalues 1,2,3,4 (polytope example)") {
  MultGroupData g = build_group({q(1), q(2), q(3), q(4)});
  CHECK(g.rank == 2);
  CHECK(g.torsion_order == 1);
  CHECK(lattice_equal(g.relation_lattice,
                      make_lattice(4, {vec({1, 0, 0, 0}), vec({0, 2, 0, -1})})));
}

TEST_CASE("build_group: sign torsion (-1, 2)") {
  MultGroupData g = build_group({q(-1), q(2)});
  CHECK(g.rank == 1);
  CHECK(g.torsion_order == 2);
  CHECK(lattice_equal(g.relation_lattice, make_lattice(2, {vec({2, 0})})));
  // brute force oracle: (-1)^a 2^b = 1 over |a|,|b| <= 6
  auto rels = brute_relations({q(-1), q(2)}, 6);
  for (const auto& r : rels)
    CHECK(lattice_member(g.relation_lattice, vec({r[0], r[1]})));
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      bool is_rel = pow_rational(q(-1), a) * pow_rational(q(2), b) == 1;
      CHECK(lattice_member(g.relation_lattice, vec({a, b})) == is_rel);
    }
}

TEST_CASE("build_group: pure fourth root of unity") {
  MultGroupData g = build_group(syms({{q(1), q(1, 4)}}));
  CHECK(g.rank == 0);
  CHECK(g.torsion_order == 4);
  CHECK(lattice_equal(g.relation_lattice, make_lattice(1, {vec({4})})));
  // brute force i^k over k = 0..8
  for (long k = 0; k <= 8; ++k) {
    SymbolicScalar s = scalar_pow(g.generators[0], Int(k));
    CHECK(scalar_is_one(s) == (k % 4 == 0));
  }
}

TEST_CASE("build_group normalizes negative rational with phase") {
  MultGroupData g = build_group(syms({{q(-2), q(0)}}));
  CHECK(g.generators[0].phase == q(1, 2));
  CHECK(g.rank == 1);
  CHECK(g.torsion_order == 1);  // <-2> is torsion-free
  CHECK(g.relation_lattice.is_zero());
}

TEST_CASE("build_group rejects zero eigenvalues") {
  CHECK_THROWS_AS((void)build_group({q(2), q(0)}), MathError);
  CHECK_THROWS_AS((void)build_group(std::vector<Rational>{}), MathError);
}

TEST_CASE("relation lattice members evaluate to one") {
  std::mt19937_64 rng(314);
  std::vector<std::vector<std::pair<Rational, Rational>>> cases{
      {{q(2), q(0)}, {q(4), q(0)}},
      {{q(-1), q(0)}, {q(2), q(0)}},
      {{q(6), q(0)}, {q(10), q(0)}, {q(15), q(0)}},
      {{q(1), q(1, 4)}, {q(2), q(0)}},
      {{q(1), q(1, 3)}, {q(1), q(1, 6)}},
      {{q(-2, 3), q(0)}, {q(4, 9), q(0)}, {q(-3), q(0)}},
  };
  std::uniform_int_distribution<long> cd(-3, 3);
  for (const auto& c : cases) {
    MultGroupData g = build_group(c);
    for (const auto& v : g.relation_lattice.basis) CHECK(scalar_is_one(evaluate_word(g, v)));
    // random lattice combinations also evaluate to one
    for (int it = 0; it < 10; ++it) {
      std::vector<Int> w(g.generators.size(), Int(0));
      for (const auto& v : g.relation_lattice.basis) {
        long coef = cd(rng);
        for (size_t i = 0; i < w.size(); ++i) w[i] += coef * v[i];
      }
      CHECK(scalar_is_one(evaluate_word(g, w)));
    }
    // index of the relation lattice inside the magnitude kernel = torsion order
    CHECK(lattice_index(g.relation_lattice, g.magnitude_kernel) == g.torsion_order);
  }
}

TEST_CASE("power_group: squares kill the sign") {
  MultGroupData g = build_group({q(-1), q(2)});
  MultGroupData g2 = power_group(g, Int(2));
  CHECK(g2.rank == 1);
  CHECK(g2.torsion_order == 1);
  CHECK(scalar_value(g2.base, g2.generators[0]) == q(1));
  CHECK(scalar_value(g2.base, g2.generators[1]) == q(4));
}

TEST_CASE("power_group: q = 1 is the identity") {
  MultGroupData g = build_group({q(6), q(10)});
  MultGroupData g1 = power_group(g, Int(1));
  CHECK(g1.rank == g.rank);
  CHECK(g1.torsion_order == g.torsion_order);
  CHECK(lattice_equal(g1.relation_lattice, g.relation_lattice));
}

TEST_CASE("power_group: i^4 is trivial") {
  MultGroupData g = build_group(syms({{q(1), q(1, 4)}}));
  MultGroupData g4 = power_group(g, Int(4));
  CHECK(g4.rank == 0);
  CHECK(g4.torsion_order == 1);
  CHECK(scalar_is_one(g4.generators[0]));
}

TEST_CASE("power_group at torsion order is torsion-free of equal rank") {
  std::vector<std::vector<std::pair<Rational, Rational>>> cases{
      {{q(-1), q(0)}, {q(2), q(0)}},
      {{q(1), q(1, 4)}},
      {{q(1), q(1, 6)}, {q(5), q(0)}},
      {{q(-2), q(0)}, {q(-3), q(0)}},
  };
  for (const auto& c : cases) {
    MultGroupData g = build_group(c);
    MultGroupData gq = power_group(g, g.torsion_order);
    CHECK(gq.torsion_order == 1);
    CHECK(gq.rank == g.rank);
  }
}
