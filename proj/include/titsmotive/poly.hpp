#ifndef TITSMOTIVE_POLY_HPP
#define TITSMOTIVE_POLY_HPP

// Dense univariate polynomials over Z, just enough for Poincare series:
// coefficients are exact big integers, division is exact or it throws.

#include <titsmotive/arith.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace titsmotive {

class Poly {
 public:
  Poly() = default;  // zero polynomial
  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly one() { return Poly({Int(1)}); }

  // [n]_q = 1 + q + ... + q^(n-1).
  static Poly q_integer(unsigned n) {
    return Poly(std::vector<Int>(n, Int(1)));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const std::vector<Int>& coefficients() const { return c_; }

  Int coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Int(0);
  }

  Int value_at_one() const {
    Int s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }

  bool palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i)
      if (c_[i] != c_[--j]) return false;
    return true;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Exact quotient a / b. b must be monic here (every divisor we form is a
  // product of q-integers); a nonzero remainder is an internal error.
  friend Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::logic_error("divide_exact: zero divisor");
    if (b.c_.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree())
      throw std::logic_error("divide_exact: inexact division");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quo(a.c_.size() - b.c_.size() + 1, Int(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
      Int t = rem[k + b.c_.size() - 1];
      quo[k] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[k + j] -= t * b.c_[j];
    }
    for (const auto& x : rem)
      if (x != 0) throw std::logic_error("divide_exact: inexact division");
    return Poly(std::move(quo));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;  // c_[k] is the coefficient of q^k
};

}  // namespace titsmotive

#endif
