#pragma once

// Motivic equivalence mod p: three-valued verdicts with checkable witnesses,
// Levi factor descriptors, and upper motive class assignment.

#include <titsmotive/motive.hpp>
#include <titsmotive/titsindex.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace titsmotive {

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { Equivalent, NotEquivalent, Unknown };

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Equivalent:
      return "equivalent";
    case VerdictKind::NotEquivalent:
      return "not_equivalent";
    default:
      return "unknown";
  }
}

// A place where a local quantity differs: p-adic valuations of invariant
// orders for special linear pairs ("vp_orders"), Witt indices for orthogonal
// ones ("witt"). The place is a declared label, a completion rendered as
// text, or "ground".
struct PlaceWitness {
  std::string place;
  std::string quantity;
  long left = 0;
  long right = 0;

  friend bool operator==(const PlaceWitness&, const PlaceWitness&) = default;
};

// The descriptors already differ as types: diagram or star action class.
struct TypeWitness {
  std::string left;
  std::string right;

  friend bool operator==(const TypeWitness&, const TypeWitness&) = default;
};

// A registry label whose table entries differ.
struct EntryWitness {
  std::string label;

  friend bool operator==(const EntryWitness&, const EntryWitness&) = default;
};

using Witness = std::variant<std::monostate, PlaceWitness, TypeWitness, EntryWitness>;

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Int> prime;
  bool registry_relative = false;  // equality was checked entrywise on a registry only
  std::string reason;              // set on Unknown
  Witness witness;                 // set on NotEquivalent

  static Verdict equivalent(std::optional<Int> p = std::nullopt, bool relative = false) {
    Verdict v;
    v.kind = VerdictKind::Equivalent;
    v.prime = std::move(p);
    v.registry_relative = relative;
    return v;
  }

  static Verdict not_equivalent(Witness w, std::optional<Int> p = std::nullopt) {
    Verdict v;
    v.kind = VerdictKind::NotEquivalent;
    v.prime = std::move(p);
    v.witness = std::move(w);
    return v;
  }

  static Verdict unknown(std::string why, std::optional<Int> p = std::nullopt) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.prime = std::move(p);
    v.reason = std::move(why);
    return v;
  }
};

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline Rat square_class(const Rat& a);

// Display name of the type: diagram plus a star when the action is outer.
// For even dimensional forms the acting character matters, so the square
// class of the signed discriminant is part of the name: two outer forms
// with different discriminant extensions have different star actions.
inline std::string type_name(const GroupDescriptor& g) {
  if (const auto* sl = std::get_if<SpecialLinear>(&g))
    return "A" + Int(sl->algebra.degree - 1).str();
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    std::size_t n = so->form.dim();
    if (n % 2) return "B" + std::to_string((n - 1) / 2);
    std::string s = "D" + std::to_string(n / 2);
    if (!is_rational_square(so->form.signed_discriminant()))
      s += "*[" + square_class(so->form.signed_discriminant()).str() + "]";
    return s;
  }
  const auto& a = std::get<Abstract>(g);
  std::string s = a.diagram.format();
  auto orbs = orbits(a.diagram, a.action);
  if (orbs.size() != a.diagram.vertex_count())
    s += "* (" + std::to_string(orbs.size()) + " orbits)";
  return s;
}

// p-adic valuation of the order of the local invariant at the labeled place.
inline long place_order_valuation(const CsaDescriptor& a, const std::string& v, const Int& p) {
  auto it = a.inv.find(v);
  if (it == a.inv.end() || it->second == 0) return 0;
  return valuation(den(it->second), p);
}

inline std::set<std::string> place_labels(const CsaDescriptor& a, const CsaDescriptor& b) {
  std::set<std::string> labels;
  for (const auto& [v, kind] : a.places) labels.insert(v);
  for (const auto& [v, kind] : b.places) labels.insert(v);
  for (const auto& [v, r] : a.inv) labels.insert(v);
  for (const auto& [v, r] : b.inv) labels.insert(v);
  return labels;
}

// The squarefree representative of the square class of a nonzero rational.
inline Rat square_class(const Rat& a) {
  Rat out = a < 0 ? -1 : 1;
  if (valuation(a, Int(2)) % 2) out *= 2;
  for (const auto& q : odd_prime_support(a))
    if (valuation(a, q) % 2) out *= q;
  return out;
}

// Equality of invariant tuples up to isometry: dimension, signature, square
// class of the discriminant, Hasse invariants at every place of interest.
inline bool same_invariants(const FormInvariants& x, const FormInvariants& y) {
  if (x.dim != y.dim || x.signature != y.signature) return false;
  if (!is_rational_square(x.disc * y.disc)) return false;
  std::set<RationalPlace> places;
  for (const auto& [v, e] : x.hasse) places.insert(v);
  for (const auto& [v, e] : y.hasse) places.insert(v);
  for (const auto& v : places) {
    auto ix = x.hasse.find(v);
    auto iy = y.hasse.find(v);
    if ((ix == x.hasse.end() ? 1 : ix->second) != (iy == y.hasse.end() ? 1 : iy->second))
      return false;
  }
  return true;
}

// Is q2 isometric to a scalar multiple of q1? In odd dimension the scalar's
// square class is forced by the discriminants; in even dimension scaling
// fixes the discriminant class and the scalar can be taken supported on the
// primes already relevant to one of the forms, so the search is finite.
inline bool similar_forms(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (q1.dim() != q2.dim()) return false;
  FormInvariants target = invariants_of(q2);
  if (q1.dim() % 2) {
    Rat lambda = square_class(q1.discriminant() * q2.discriminant());
    return same_invariants(invariants_of(q1.scaled(lambda)), target);
  }
  if (!is_rational_square(q1.discriminant() * q2.discriminant())) return false;
  std::set<Int> support{Int(2)};
  for (const auto& a : q1.coefficients())
    for (const auto& q : odd_prime_support(a)) support.insert(q);
  for (const auto& a : q2.coefficients())
    for (const auto& q : odd_prime_support(a)) support.insert(q);
  for (const auto& lambda : candidate_classes(support))
    if (same_invariants(invariants_of(q1.scaled(lambda)), target)) return true;
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Equivalence mod p

// Decides whether two descriptors of the same kind are motivically
// equivalent modulo p. NotEquivalent verdicts carry a witness that can be
// rechecked directly; orthogonal pairs that agree on every computed bound
// but are not scalar multiples of each other come back Unknown.
inline Verdict equivalent_mod_p(const GroupDescriptor& g, const GroupDescriptor& h,
                                const Int& p) {
  if (!is_prime(p)) throw validation_error("equivalence requires a prime");
  if (g.index() != h.index())
    throw validation_error("cannot compare descriptors of different kinds");

  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    const auto& a = sl->algebra;
    const auto& b = std::get<SpecialLinear>(h).algebra;
    if (a.degree != b.degree)
      return Verdict::not_equivalent(TypeWitness{detail::type_name(g), detail::type_name(h)}, p);
    for (const auto& v : detail::place_labels(a, b)) {
      long va = detail::place_order_valuation(a, v, p);
      long vb = detail::place_order_valuation(b, v, p);
      if (va != vb) return Verdict::not_equivalent(PlaceWitness{v, "vp_orders", va, vb}, p);
    }
    return Verdict::equivalent(p);
  }

  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    const auto& q1 = so->form;
    const auto& q2 = std::get<SpecialOrthogonal>(h).form;
    if (q1.dim() != q2.dim())
      return Verdict::not_equivalent(TypeWitness{detail::type_name(g), detail::type_name(h)}, p);
    if (p != 2) {
      // odd primes are not torsion primes here, both groups are quasi-p-split
      if (q1.dim() % 2 == 0 && detail::type_name(g) != detail::type_name(h))
        return Verdict::not_equivalent(TypeWitness{detail::type_name(g), detail::type_name(h)},
                                       p);
      return Verdict::equivalent(p);
    }
    long w1 = witt_index(q1), w2 = witt_index(q2);
    if (w1 != w2) return Verdict::not_equivalent(PlaceWitness{"ground", "witt", w1, w2}, p);
    std::set<RationalPlace> places = q1.relevant_places();
    for (const auto& v : q2.relevant_places()) places.insert(v);
    for (const auto& v : places) {
      long l1 = witt_index_local(q1, v), l2 = witt_index_local(q2, v);
      if (l1 != l2) return Verdict::not_equivalent(PlaceWitness{v.str(), "witt", l1, l2}, p);
    }
    if (q1.dim() % 2 == 0 && detail::type_name(g) != detail::type_name(h))
      return Verdict::not_equivalent(TypeWitness{detail::type_name(g), detail::type_name(h)}, p);
    if (detail::similar_forms(q1, q2)) return Verdict::equivalent(p);
    return Verdict::unknown("critquad quantifies over all extensions", p);
  }

  const auto& a = std::get<Abstract>(g);
  const auto& b = std::get<Abstract>(h);
  validate_group(g);
  validate_group(h);
  if (!(a.diagram == b.diagram) || orbits(a.diagram, a.action) != orbits(b.diagram, b.action))
    return Verdict::not_equivalent(TypeWitness{detail::type_name(g), detail::type_name(h)}, p);
  if (!a.table.prime || !b.table.prime || *a.table.prime != p || *b.table.prime != p)
    return Verdict::unknown("higher index tables carry no data for prime " + p.str(), p);
  for (const auto& [label, idx] : a.table.entries) {
    auto it = b.table.entries.find(label);
    if (it == b.table.entries.end()) continue;
    if (idx != it->second) return Verdict::not_equivalent(EntryWitness{label}, p);
  }
  return Verdict::equivalent(p, true);
}

// Motivic equivalence outright: the conjunction of equivalent_mod_p over the
// primes that can matter. For special linear pairs these are the primes
// dividing either index; for orthogonal pairs only p = 2 can fail. Abstract
// tables cover a single tagged prime, so a clean entrywise match cannot
// settle the other primes and comes back Unknown.
inline Verdict motivically_equivalent(const GroupDescriptor& g, const GroupDescriptor& h) {
  if (g.index() != h.index())
    throw validation_error("cannot compare descriptors of different kinds");

  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    Int product = sl->algebra.index() * std::get<SpecialLinear>(h).algebra.index();
    std::set<Int> primes = prime_support(product);
    if (primes.empty()) primes.insert(2);  // split pair, only the type can differ
    for (const auto& p : primes) {
      Verdict v = equivalent_mod_p(g, h, p);
      if (v.kind != VerdictKind::Equivalent) return v;
    }
    return Verdict::equivalent();
  }

  if (std::holds_alternative<SpecialOrthogonal>(g)) {
    Verdict v = equivalent_mod_p(g, h, 2);
    if (v.kind == VerdictKind::Equivalent) v.prime.reset();
    return v;
  }

  const auto& a = std::get<Abstract>(g);
  const auto& b = std::get<Abstract>(h);
  if (!a.table.prime || !b.table.prime || *a.table.prime != *b.table.prime)
    return Verdict::unknown("abstract tables do not share a prime tag");
  Verdict v = equivalent_mod_p(g, h, *a.table.prime);
  if (v.kind == VerdictKind::Equivalent)
    return Verdict::unknown("abstract tables cover only prime " + a.table.prime->str(),
                            *a.table.prime);
  return v;
}

// ---------------------------------------------------------------------------
// Levi factors

// Descriptors of the simple factors of the Levi subgroup attached to a
// distinguished theta. Scope: a single distinguished vertex for special
// linear groups, a prefix {1..k} of distinguished vertices for orthogonal
// ones; other shapes are not handled. Factors may be trivial (degree 1) and
// an orthogonal factor of dimension 0 is omitted.
inline std::vector<GroupDescriptor> levi_descriptor(const GroupDescriptor& g,
                                                    const VertexSet& theta) {
  if (std::holds_alternative<Abstract>(g))
    throw validation_error("levi factors of abstract descriptors are not supported");
  if (theta.empty()) throw validation_error("levi factors need a nonempty theta");

  TitsIndex t = tits_index(g);
  {
    VertexSet covered;
    for (const auto& o : t.distinguished)
      if (std::includes(theta.begin(), theta.end(), o.begin(), o.end()))
        covered.insert(o.begin(), o.end());
    if (covered != theta)
      throw validation_error("theta is not a union of distinguished orbits");
  }

  std::vector<GroupDescriptor> out;
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    if (theta.size() != 1)
      throw validation_error("special linear levi factors take a single distinguished vertex");
    Int k = Int(*theta.begin());
    CsaDescriptor left = sl->algebra;
    left.degree = k;
    CsaDescriptor right = sl->algebra;
    right.degree = sl->algebra.degree - k;
    out.emplace_back(SpecialLinear{std::move(left)});
    out.emplace_back(SpecialLinear{std::move(right)});
    return out;
  }

  const auto& q = std::get<SpecialOrthogonal>(g).form;
  unsigned k = *theta.rbegin();
  if (theta.size() != k)
    throw validation_error("orthogonal levi factors take a prefix {1..k} of distinguished vertices");
  if (k > witt_index(q))
    throw validation_error("stripping more hyperbolic planes than the Witt index");

  CsaDescriptor split;
  split.degree = k;
  out.emplace_back(SpecialLinear{std::move(split)});

  FormInvariants ti = invariants_of(q);
  for (unsigned i = 0; i < k; ++i) ti = detail::strip_hyperbolic(ti);
  if (ti.dim > 0) {
    auto kernel = diagonal_form_from_invariants(ti);
    if (!kernel) throw std::logic_error("levi factors: stripped invariants not realizable");
    out.emplace_back(SpecialOrthogonal{std::move(*kernel)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Upper motive classes

// Class ids for every pair (group position, theta), theta running over the
// nonempty unions of star orbits. Pairs whose flag variety splits over a
// prime-to-p extension of the ground field share the reserved id "split".
// Special linear pairs share an id exactly when their varieties stay
// isotropy-equivalent over every extension of the local model, which the
// per-place splitting profile decides; orthogonal and abstract pairs merge
// only on an Equivalent verdict, and Unknown comparisons are recorded as
// caveats instead.
struct ClassAssignment {
  std::map<std::pair<std::size_t, VertexSet>, std::string> ids;
  std::vector<std::string> caveats;
};

inline ClassAssignment assign_class_ids(const std::vector<GroupDescriptor>& groups,
                                        const Int& p) {
  if (!is_prime(p)) throw validation_error("class assignment requires a prime");
  ClassAssignment out;
  unsigned counter = 0;
  auto fresh = [&counter] { return "c" + std::to_string(++counter); };

  // Splitting profiles of special linear pairs: theta splits over a given
  // extension exactly when every place's residual valuation has dropped to
  // the theta level, so the profile is the vector of per-place overshoots.
  std::map<std::map<std::string, long>, std::string> sl_ids;

  // Union-find over orthogonal and abstract groups, merged on Equivalent.
  std::vector<std::size_t> parent(groups.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::set<std::string> seen_caveats;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (std::holds_alternative<SpecialLinear>(groups[i])) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (groups[j].index() != groups[i].index()) continue;
      Verdict v = equivalent_mod_p(groups[j], groups[i], p);
      if (v.kind == VerdictKind::Equivalent) {
        if (v.registry_relative)
          seen_caveats.insert("groups " + std::to_string(j) + " and " + std::to_string(i) +
                              " merged relative to their common registry");
        parent[root(i)] = root(j);
      } else if (v.kind == VerdictKind::Unknown) {
        seen_caveats.insert("groups " + std::to_string(j) + " and " + std::to_string(i) +
                            " undecided (" + v.reason + "); ids kept distinct");
      }
    }
  }

  std::map<std::pair<std::size_t, VertexSet>, std::string> so_ids;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const GroupDescriptor& g = groups[i];
    TitsIndex pidx = p_index(g, p);
    auto orbs = orbits(pidx.diagram, pidx.action);
    if (orbs.size() > 12)
      throw validation_error("too many star orbits for class enumeration");
    VertexSet split_set;
    for (const auto& o : pidx.distinguished) split_set.insert(o.begin(), o.end());

    for (unsigned mask = 1; mask < (1u << orbs.size()); ++mask) {
      VertexSet theta;
      for (std::size_t b = 0; b < orbs.size(); ++b)
        if (mask & (1u << b)) theta.insert(orbs[b].begin(), orbs[b].end());

      std::string id;
      bool split = std::includes(split_set.begin(), split_set.end(), theta.begin(), theta.end());
      if (split) {
        id = UpperMotiveLabel::split_class();
      } else if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
        long level = valuation(Int(*theta.begin()), p);
        for (VertexId k : theta) level = std::min(level, valuation(Int(k), p));
        std::map<std::string, long> profile;
        for (const auto& [v, r] : sl->algebra.inv) {
          long over = detail::place_order_valuation(sl->algebra, v, p) - level;
          if (over > 0) profile[v] = over;
        }
        auto it = sl_ids.find(profile);
        if (it == sl_ids.end()) it = sl_ids.emplace(std::move(profile), fresh()).first;
        id = it->second;
      } else {
        auto key = std::make_pair(root(i), theta);
        auto it = so_ids.find(key);
        if (it == so_ids.end()) it = so_ids.emplace(std::move(key), fresh()).first;
        id = it->second;
      }
      out.ids[{i, theta}] = id;
    }
  }
  out.caveats.assign(seen_caveats.begin(), seen_caveats.end());
  return out;
}

}  // namespace titsmotive
