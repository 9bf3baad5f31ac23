#pragma once

// Tits indices and p-indices of group descriptors, plus higher p-index
// tables assembled over registries of field extensions.

#include <titsmotive/brauer.hpp>
#include <titsmotive/diagram.hpp>
#include <titsmotive/qform.hpp>

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace titsmotive {

// A diagram with a star action and the set of distinguished orbits. Every
// distinguished entry is a full orbit of the action.
struct TitsIndex {
  DynkinDiagram diagram;
  StarAction action;
  std::set<VertexSet> distinguished;
};

// Equality compares orbit partitions rather than generator lists; actions
// with the same orbits carry the same index data.
inline bool operator==(const TitsIndex& x, const TitsIndex& y) {
  return x.diagram == y.diagram &&
         orbits(x.diagram, x.action) == orbits(y.diagram, y.action) &&
         x.distinguished == y.distinguished;
}
inline bool operator!=(const TitsIndex& x, const TitsIndex& y) { return !(x == y); }

inline void validate_index(const TitsIndex& t) {
  auto orbs = orbits(t.diagram, t.action);
  std::set<VertexSet> all(orbs.begin(), orbs.end());
  for (const auto& o : t.distinguished)
    if (!all.count(o)) throw validation_error("distinguished entry is not a star orbit");
}

inline constexpr const char* ground_label = "ground";

// Indices over a finite family of labeled extensions, always including the
// ground field. A set prime tags the entries as p-indices for that prime.
struct HigherIndexTable {
  std::optional<Int> prime;
  std::map<std::string, TitsIndex> entries;
};

inline bool operator==(const HigherIndexTable& x, const HigherIndexTable& y) {
  return x.prime == y.prime && x.entries == y.entries;
}

inline void validate_table(const HigherIndexTable& t) {
  if (t.prime && !is_prime(*t.prime))
    throw validation_error("higher index table tagged with a non-prime");
  auto it = t.entries.find(ground_label);
  if (it == t.entries.end())
    throw validation_error("higher index table lacks a ground entry");
  auto ground_orbits = orbits(it->second.diagram, it->second.action);
  for (const auto& [label, idx] : t.entries) {
    validate_index(idx);
    if (!(idx.diagram == it->second.diagram) ||
        orbits(idx.diagram, idx.action) != ground_orbits)
      throw validation_error("table entry '" + label +
                             "' does not share the ground diagram and action");
  }
}

// ---------------------------------------------------------------------------
// Group descriptors

struct SpecialLinear {
  CsaDescriptor algebra;
};

struct SpecialOrthogonal {
  QuadraticForm form;
};

struct Abstract {
  DynkinDiagram diagram;
  StarAction action;
  HigherIndexTable table;
};

using GroupDescriptor = std::variant<SpecialLinear, SpecialOrthogonal, Abstract>;

namespace detail {

// Star actions may flip a D4 component or permute several, but a rotation of
// the three outer vertices is triality, which this toolkit does not model.
inline void reject_triality(const DynkinDiagram& d, const StarAction& s) {
  for (const auto& g : generated_group(d, s))
    for (std::size_t ci = 0; ci < d.component_count(); ++ci) {
      const auto& c = d.component(ci);
      if (c.series != Series::D || c.rank != 4) continue;
      VertexId first = d.vertex_id(ci, 1);
      if (d.component_of(g[first - 1]) != ci) continue;
      for (unsigned b = 1; b <= 4; ++b) {
        VertexId v = d.vertex_id(ci, b);
        unsigned len = 1;
        for (VertexId w = g[v - 1]; w != v; w = g[w - 1]) ++len;
        if (len == 3)
          throw validation_error("star action acts by triality on a D4 component");
      }
    }
}

inline unsigned small_degree(const Int& n) {
  if (n > 100000) throw validation_error("algebra degree too large for index computation");
  return n.convert_to<unsigned>();
}

}  // namespace detail

inline void validate_group(const GroupDescriptor& g) {
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    validate_csa(sl->algebra);
    if (sl->algebra.degree < 2)
      throw validation_error("special linear descriptor needs degree >= 2");
  } else if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    if (so->form.dim() < 3)
      throw validation_error("special orthogonal descriptor needs dimension >= 3");
  } else {
    const auto& a = std::get<Abstract>(g);
    validate_star_action(a.diagram, a.action);
    detail::reject_triality(a.diagram, a.action);
    validate_table(a.table);
    const TitsIndex& ground = a.table.entries.at(ground_label);
    if (!(ground.diagram == a.diagram) ||
        orbits(ground.diagram, ground.action) != orbits(a.diagram, a.action))
      throw validation_error("abstract table does not match the descriptor diagram and action");
  }
}

// ---------------------------------------------------------------------------
// Index computation

namespace detail {

// Multiples of step among the vertices of A_{deg-1}.
inline TitsIndex special_linear_index(const Int& degree, const Int& step) {
  unsigned deg = small_degree(degree);
  TitsIndex t;
  t.diagram = DynkinDiagram::parse("A" + std::to_string(deg - 1));
  t.action = StarAction::trivial();
  unsigned s = step.convert_to<unsigned>();
  for (unsigned k = s; k < deg; k += s) t.distinguished.insert({VertexId(k)});
  return t;
}

// Diagram and action of an orthogonal descriptor, distinguished set empty.
// The action on an even dimensional (D type) diagram swaps the two fork
// vertices exactly when the signed discriminant is not a square.
inline TitsIndex orthogonal_frame(unsigned dim, bool ground_square) {
  TitsIndex t;
  t.action = StarAction::trivial();
  if (dim % 2) {
    t.diagram = DynkinDiagram::parse("B" + std::to_string((dim - 1) / 2));
    return t;
  }
  unsigned m = dim / 2;
  t.diagram = DynkinDiagram::parse("D" + std::to_string(m));
  if (!ground_square) {
    Permutation swap_leaves(m);
    for (unsigned i = 0; i < m; ++i) swap_leaves[i] = i + 1;
    std::swap(swap_leaves[m - 2], swap_leaves[m - 1]);
    t.action.generators.push_back(std::move(swap_leaves));
  }
  return t;
}

// Distinguished orbits from a Witt index. here_square tells whether the
// signed discriminant is a square in the field the Witt index refers to;
// ground_square refers to the ground field and fixes the action.
inline TitsIndex orthogonal_index(unsigned dim, unsigned w, bool ground_square,
                                  bool here_square) {
  TitsIndex t = orthogonal_frame(dim, ground_square);
  if (dim % 2) {
    for (unsigned k = 1; k <= w; ++k) t.distinguished.insert({VertexId(k)});
    return t;
  }
  unsigned m = dim / 2;
  if (w + 1 >= m) {
    // A fully hyperbolic form has square signed discriminant and a binary
    // anisotropic kernel never does, in any field.
    if (here_square != (w == m))
      throw std::logic_error("orthogonal index: Witt index and discriminant disagree");
    if (w + 1 == m && ground_square)
      throw std::logic_error("orthogonal index: inner form with corank one Witt index");
    for (const auto& o : orbits(t.diagram, t.action)) t.distinguished.insert(o);
  } else {
    for (unsigned k = 1; k <= w; ++k) t.distinguished.insert({VertexId(k)});
  }
  return t;
}

inline TitsIndex fully_distinguished(TitsIndex t) {
  for (const auto& o : orbits(t.diagram, t.action)) t.distinguished.insert(o);
  return t;
}

}  // namespace detail

inline TitsIndex tits_index(const GroupDescriptor& g) {
  validate_group(g);
  if (const auto* sl = std::get_if<SpecialLinear>(&g))
    return detail::special_linear_index(sl->algebra.degree, sl->algebra.index());
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    const auto& q = so->form;
    bool sq = is_rational_square(q.signed_discriminant());
    return detail::orthogonal_index(static_cast<unsigned>(q.dim()), witt_index(q), sq, sq);
  }
  return std::get<Abstract>(g).table.entries.at(ground_label);
}

inline TitsIndex p_index(const GroupDescriptor& g, const Int& p) {
  validate_group(g);
  if (!is_prime(p)) throw validation_error("p_index requires a prime");
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    Int dp = 1;
    for (long i = 0, e = sl->algebra.p_valuation_index(p); i < e; ++i) dp *= p;
    return detail::special_linear_index(sl->algebra.degree, dp);
  }
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    if (p == 2) return tits_index(g);
    // odd primes are not torsion primes of orthogonal groups: quasi-p-split
    const auto& q = so->form;
    bool sq = is_rational_square(q.signed_discriminant());
    return detail::fully_distinguished(
        detail::orthogonal_frame(static_cast<unsigned>(q.dim()), sq));
  }
  const auto& a = std::get<Abstract>(g);
  if (!a.table.prime || *a.table.prime != p)
    throw validation_error("abstract descriptor carries no index data for prime " + p.str());
  return a.table.entries.at(ground_label);
}

inline bool is_quasi_p_split(const GroupDescriptor& g, const Int& p) {
  TitsIndex t = p_index(g, p);
  return t.distinguished.size() == orbits(t.diagram, t.action).size();
}

inline bool is_p_anisotropic(const GroupDescriptor& g, const Int& p) {
  return p_index(g, p).distinguished.empty();
}

// ---------------------------------------------------------------------------
// Higher p-indices

// One labeled extension. A plan applies to special linear descriptors, a
// completion (finite place or real closure) to special orthogonal ones, and
// a bare label selects an entry of an abstract table.
struct ExtensionSpec {
  std::string label;
  std::optional<ExtensionPlan> plan;
  std::optional<RationalPlace> completion;
};

using ExtensionRegistry = std::vector<ExtensionSpec>;

namespace detail {

inline TitsIndex extended_p_index(const GroupDescriptor& g, const Int& p,
                                  const ExtensionSpec& spec) {
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    if (!spec.plan || spec.completion)
      throw validation_error("registry entry '" + spec.label +
                             "' does not apply to a special linear descriptor");
    CsaDescriptor ext = extend(sl->algebra, *spec.plan);
    Int dp = 1;
    for (long i = 0, e = ext.p_valuation_index(p); i < e; ++i) dp *= p;
    return special_linear_index(ext.degree, dp);
  }
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    if (!spec.completion || spec.plan)
      throw validation_error("registry entry '" + spec.label +
                             "' does not apply to a special orthogonal descriptor");
    validate_place(*spec.completion);
    const auto& q = so->form;
    unsigned dim = static_cast<unsigned>(q.dim());
    bool ground_sq = is_rational_square(q.signed_discriminant());
    if (p != 2) return fully_distinguished(orthogonal_frame(dim, ground_sq));
    unsigned w = witt_index_local(q, *spec.completion);
    bool here_sq = is_local_square(q.signed_discriminant(), *spec.completion);
    return orthogonal_index(dim, w, ground_sq, here_sq);
  }
  const auto& a = std::get<Abstract>(g);
  if (spec.plan || spec.completion)
    throw validation_error("registry entry '" + spec.label +
                           "' does not apply to an abstract descriptor");
  auto it = a.table.entries.find(spec.label);
  if (it == a.table.entries.end())
    throw validation_error("registry label '" + spec.label +
                           "' is not present in the abstract table");
  return it->second;
}

}  // namespace detail

inline HigherIndexTable higher_p_index(const GroupDescriptor& g, const Int& p,
                                       const ExtensionRegistry& registry) {
  validate_group(g);
  if (!is_prime(p)) throw validation_error("higher_p_index requires a prime");
  HigherIndexTable out;
  out.prime = p;
  out.entries[ground_label] = p_index(g, p);
  for (const auto& spec : registry) {
    if (spec.label.empty() || spec.label == ground_label)
      throw validation_error("registry label '" + spec.label + "' is reserved or empty");
    if (out.entries.count(spec.label))
      throw validation_error("duplicate registry label '" + spec.label + "'");
    out.entries.emplace(spec.label, detail::extended_p_index(g, p, spec));
  }
  validate_table(out);
  return out;
}

}  // namespace titsmotive
