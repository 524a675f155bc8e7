#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "zariski/errors.hpp"

namespace zariski {

/// Arbitrary-precision integer.
using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

struct ExtGcd {
  Int g, x, y;  // g = gcd(a,b) = a*x + b*y, g >= 0
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int div_exact(const Int& a, const Int& d) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

/// Floor quotient.
inline Int div_floor(const Int& a, const Int& d) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

// Pollard-Brent rho; n odd composite, not a prime power of a tiny prime.
inline Int pollard_brent(const Int& n) {
  if (divides(Int(2), n)) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xB5297A4Dul);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 1;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, q = 1, g = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Int d = x - y;
          q = (q * int_abs(d)) % n;
        }
        g = int_gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int d = x - ys;
        g = int_gcd(int_abs(d), n);
      }
    }
    if (g != n) return g;
  }
}

inline void factor_into(Int n, std::map<Int, int>& out) {
  if (n <= 1) return;
  // trial division by small primes
  static const unsigned long small_bound = 100000;
  for (unsigned long p = 2; p <= small_bound && Int(p) * Int(p) <= n; p = (p == 2 ? 3 : p + 2)) {
    while (divides(Int(p), n)) {
      out[Int(p)] += 1;
      n = div_exact(n, Int(p));
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(div_exact(n, d), out);
}

}  // namespace detail

/// Factorization of |n| into prime powers; n must be nonzero.
inline std::map<Int, int> factorize(const Int& n) {
  if (n == 0) fail(ErrorKind::ZeroInput, "factorize(0)");
  std::map<Int, int> out;
  detail::factor_into(int_abs(n), out);
  return out;
}

/// All positive divisors of |n|, unsorted; n nonzero.
inline std::vector<Int> divisors(const Int& n) {
  std::map<Int, int> f = factorize(n);
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : f) {
    size_t old = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < old; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

/// First k primes, ascending.
inline std::vector<Int> first_primes(size_t k) {
  std::vector<Int> out;
  Int p = 2;
  while (out.size() < k) {
    out.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

}  // namespace zariski
