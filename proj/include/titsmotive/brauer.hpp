#ifndef TITSMOTIVE_BRAUER_HPP
#define TITSMOTIVE_BRAUER_HPP

// Central simple algebras over a number-field-like base, presented purely by
// their local invariants: a labeled set of places, each finite, real or
// complex, and an invariant in Q/Z at each place. The index is the lcm of
// the invariant denominators, scalar extension multiplies invariants by
// local degrees, and the p-primary part projects each invariant to its
// p-power-denominator component.
//
// Scalar extension here is a simulation: a plan lists, per place, the local
// degrees of the slots above it. Plans need not be globally consistent
// (totals may differ across places), and extended descriptors need not have
// invariants summing to zero; they are working data for index computations,
// not certified Brauer classes.

#include <titsmotive/arith.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace titsmotive {

enum class PlaceKind { Finite, Real, Complex };

inline std::string place_kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::Finite: return "finite";
    case PlaceKind::Real: return "real";
    case PlaceKind::Complex: return "complex";
  }
  return "?";
}

inline PlaceKind parse_place_kind(const std::string& s) {
  if (s == "finite") return PlaceKind::Finite;
  if (s == "real") return PlaceKind::Real;
  if (s == "complex") return PlaceKind::Complex;
  throw validation_error("unknown place kind '" + s + "'");
}

struct CsaDescriptor {
  Int degree = 1;
  std::map<std::string, PlaceKind> places;
  std::map<std::string, Rat> inv;  // entries in [0,1); missing means 0

  Rat inv_at(const std::string& label) const {
    auto it = inv.find(label);
    return it == inv.end() ? Rat(0) : it->second;
  }

  // lcm of the denominators: the index of the algebra.
  Int index() const {
    Int ix = 1;
    for (const auto& [label, r] : inv) ix = lcm(ix, den(r));
    return ix;
  }

  long p_valuation_index(const Int& p) const {
    Int ix = index();
    return ix == 1 ? 0 : valuation(ix, p);
  }

  friend bool operator==(const CsaDescriptor&, const CsaDescriptor&) = default;
};

// Full well-formedness: invariant range and support, archimedean
// constraints, reciprocity (invariants sum to zero in Q/Z), and index
// dividing the degree. Descriptors built by extend() are exempt from the
// last two by construction of the caller, not of this check.
inline void validate_csa(const CsaDescriptor& a) {
  if (a.degree < 1) throw validation_error("algebra degree must be >= 1");
  Rat sum = 0;
  for (const auto& [label, r] : a.inv) {
    auto it = a.places.find(label);
    if (it == a.places.end())
      throw validation_error("invariant at undeclared place '" + label + "'");
    if (r < 0 || r >= 1 || r != reduce_mod1(r))
      throw validation_error("invariant at '" + label + "' not reduced into [0,1)");
    switch (it->second) {
      case PlaceKind::Real:
        if (r != 0 && r != Rat(1, 2))
          throw validation_error("real place '" + label + "' needs invariant 0 or 1/2");
        break;
      case PlaceKind::Complex:
        if (r != 0)
          throw validation_error("complex place '" + label + "' needs invariant 0");
        break;
      case PlaceKind::Finite:
        break;
    }
    sum += r;
  }
  if (reduce_mod1(sum) != 0)
    throw validation_error("invariants do not sum to zero in Q/Z");
  if (a.degree % a.index() != 0)
    throw validation_error("index " + a.index().str() + " does not divide degree " +
                           a.degree.str());
}

// Per-place local degrees of the simulated extension; places not listed
// keep a single slot of degree 1.
using ExtensionPlan = std::map<std::string, std::vector<Int>>;

inline void validate_plan(const CsaDescriptor& a, const ExtensionPlan& plan) {
  for (const auto& [label, degrees] : plan) {
    if (!a.places.count(label))
      throw validation_error("extension plan mentions unknown place '" + label + "'");
    if (degrees.empty())
      throw validation_error("extension plan at '" + label + "' lists no slots");
    for (const auto& m : degrees)
      if (m < 1) throw validation_error("extension slot degree must be >= 1");
  }
}

// Scalar extension along the plan. Slots above v are labeled "v.1", "v.2",
// ... in ascending degree order; inv_w = m * inv_v mod 1; a real place stays
// real under odd local degree and becomes complex under even local degree.
inline CsaDescriptor extend(const CsaDescriptor& a, const ExtensionPlan& plan) {
  validate_plan(a, plan);
  static const std::vector<Int> unit{Int(1)};
  CsaDescriptor out;
  out.degree = a.degree;
  for (const auto& [label, kind] : a.places) {
    auto it = plan.find(label);
    std::vector<Int> degrees = it == plan.end() ? unit : it->second;
    std::sort(degrees.begin(), degrees.end());
    Rat r = a.inv_at(label);
    for (std::size_t slot = 0; slot < degrees.size(); ++slot) {
      std::string w = label + "." + std::to_string(slot + 1);
      PlaceKind k = kind;
      if (kind == PlaceKind::Real && degrees[slot] % 2 == 0) k = PlaceKind::Complex;
      out.places[w] = k;
      Rat rw = reduce_mod1(degrees[slot] * r);
      if (k == PlaceKind::Complex) rw = 0;
      if (rw != 0) out.inv[w] = rw;
    }
  }
  return out;
}

// The p-power component of every invariant: n/m with m = p^k m' maps to
// (n * inverse(m') mod p^k) / p^k. The result's degree is the p-part of the
// input's index, making it a valid descriptor whenever the input was one.
inline CsaDescriptor p_primary_part(const CsaDescriptor& a, const Int& p) {
  if (!is_prime(p)) throw validation_error("p-primary part needs a prime");
  CsaDescriptor out;
  out.places = a.places;
  Int pk_max = 1;
  for (const auto& [label, r] : a.inv) {
    Int m = den(r);
    long k = valuation(m, p);
    if (k == 0) continue;
    Int pk = 1;
    for (long i = 0; i < k; ++i) pk *= p;
    Int mprime = m / pk;
    Int x = (num(r) % pk) * mod_inverse(mprime, pk) % pk;
    if (x < 0) x += pk;
    if (x != 0) out.inv[label] = Rat(x, pk);
    if (pk > pk_max) pk_max = pk;
  }
  out.degree = pk_max;
  return out;
}

}  // namespace titsmotive

#endif
