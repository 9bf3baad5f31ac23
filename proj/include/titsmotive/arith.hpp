#ifndef TITSMOTIVE_ARITH_HPP
#define TITSMOTIVE_ARITH_HPP

// Exact integer/rational arithmetic helpers: valuations, square tests,
// Legendre symbols, factorization. Everything is deterministic; inputs are
// desk-scale (factorization is trial division + Pollard rho).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace titsmotive {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised on malformed user-level input (bad descriptors, bad JSON values,
// out-of-domain arguments). Internal inconsistencies use std::logic_error.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& r) { return numerator(r).sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline long valuation(Int x, const Int& p) {
  if (x == 0) throw std::logic_error("valuation of zero");
  long v = 0;
  while (x % p == 0) { x /= p; ++v; }
  return v;
}

inline long valuation(const Rat& r, const Int& p) {
  if (r == 0) throw std::logic_error("valuation of zero");
  return valuation(num(r), p) - valuation(den(r), p);
}

// r with all powers of p removed: r / p^valuation(r, p).
inline Rat unit_part(const Rat& r, const Int& p) {
  long v = valuation(r, p);
  Rat q = r;
  for (; v > 0; --v) q /= p;
  for (; v < 0; ++v) q *= p;
  return q;
}

inline Int mod_inverse(Int a, const Int& m) {
  Int r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::logic_error("mod_inverse: not coprime");
  if (s0 < 0) s0 += m;
  return s0;
}

// Value of the reduced fraction mod m, for m coprime to the denominator.
inline Int mod_of_rat(const Rat& r, const Int& m) {
  Int n = num(r) % m;
  if (n < 0) n += m;
  return (n * mod_inverse(den(r), m)) % m;
}

// Legendre symbol (a|p) for odd prime p; 0 when p divides a.
inline int legendre(const Int& a, const Int& p) {
  Int b = a % p;
  if (b < 0) b += p;
  if (b == 0) return 0;
  Int t = boost::multiprecision::powm(b, (p - 1) / 2, p);
  return t == 1 ? 1 : -1;
}

inline int legendre(const Rat& a, const Int& p) {
  return legendre(mod_of_rat(a, p), p);
}

inline bool is_perfect_square(const Int& x) {
  if (x < 0) return false;
  Int r = sqrt(x);
  return r * r == x;
}

// n/d in lowest terms is a square in Q iff n and d are both squares.
inline bool is_rational_square(const Rat& r) {
  return r > 0 && is_perfect_square(num(r)) && is_perfect_square(den(r));
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

namespace detail {

inline Int pollard_rho(const Int& n) {
  // Brent's variant; n is odd, composite, not a prime power obstacle here.
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs_int(x - y), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  if (is_prime(n)) { ++out[n]; return; }
  for (Int p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) { ++out[p]; n /= p; }
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
  }
  if (n == 1) return;
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

inline std::map<Int, unsigned> factor(const Int& n) {
  std::map<Int, unsigned> out;
  detail::factor_into(abs_int(n), out);
  return out;
}

// Odd primes dividing numerator or denominator.
inline std::set<Int> odd_prime_support(const Rat& r) {
  std::set<Int> s;
  for (auto& [p, e] : factor(num(r)))
    if (p != 2) s.insert(p);
  for (auto& [p, e] : factor(den(r)))
    if (p != 2) s.insert(p);
  return s;
}

inline std::set<Int> prime_support(const Int& n) {
  std::set<Int> s;
  for (auto& [p, e] : factor(n)) s.insert(p);
  return s;
}

// Representative of r mod 1 in [0, 1).
inline Rat reduce_mod1(const Rat& r) {
  Int n = num(r), d = den(r);
  Int m = n % d;
  if (m < 0) m += d;
  return Rat(m, d);
}

}  // namespace titsmotive

#endif
