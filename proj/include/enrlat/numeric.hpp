#pragma once

// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// rationals from GMP. No floating point anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace enrlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Floor of a/b for b > 0.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Ceiling of a/b for b > 0.
inline Int cdiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Representative of a mod m in [0, m), m > 0.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// floor(sqrt(a)) for a >= 0.
inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

/// Nearest integer to q; ties round toward +infinity (round(1/2) = 1).
inline Int round_nearest(const Rat& q) {
  return fdiv(2 * q.get_num() + q.get_den(), 2 * q.get_den());
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }
inline Int ceil_rat(const Rat& q) { return cdiv(q.get_num(), q.get_den()); }

/// Representative of q modulo 2Z in [0, 2).  Used for discriminant-form
/// values on even lattices.
inline Rat mod_two(const Rat& q) {
  Rat r = q - 2 * Rat(floor_rat(q / 2));
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

/// All divisors of |a| (positive only), a != 0.  Intended for the small
/// constant terms met in polynomial root extraction.
inline std::vector<Int> positive_divisors(const Int& a) {
  Int n = abs(a);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

/// Prime factors of |a| without multiplicity, a != 0.  Trial division; the
/// arguments here are lattice discriminant exponents, which stay tiny.
inline std::vector<Int> prime_factors(const Int& a) {
  Int n = abs(a);
  std::vector<Int> ps;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace enrlat
