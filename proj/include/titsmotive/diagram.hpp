#ifndef TITSMOTIVE_DIAGRAM_HPP
#define TITSMOTIVE_DIAGRAM_HPP

// Dynkin diagrams of the classical and exceptional series, with Bourbaki
// numbering. Vertices of a diagram get global 1-based ids, component-major.
// Edges carry a multiplicity and, for multiple edges, the vertex the arrow
// points to (the short-root side).
//
// Numbering conventions (Bourbaki):
//   A_n : 1 - 2 - ... - n
//   B_n : 1 - ... - (n-1) => n          (arrow to n, alpha_n short)
//   C_n : 1 - ... - (n-1) <= n          (arrow to n-1)
//   D_n : 1 - ... - (n-2) < (n-1, n)    (fork; D_2 is two isolated vertices)
//   E_n : chain 1 - 3 - 4 - 5 - 6 (- 7 (- 8)), plus 2 - 4
//   F_4 : 1 - 2 => 3 - 4                (arrow to 3)
//   G_2 : 1 <= 2, triple edge           (arrow to 1, alpha_1 short)

#include <titsmotive/arith.hpp>
#include <titsmotive/poly.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace titsmotive {

using VertexId = std::uint32_t;  // 1-based, global within a diagram
using VertexSet = std::set<VertexId>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct Component {
  Series series;
  unsigned rank;

  friend bool operator==(const Component&, const Component&) = default;
};

struct Edge {
  VertexId a, b;        // a < b
  unsigned multiplicity;
  VertexId arrow_to;    // 0 for single edges, else a or b (short-root side)
};

inline void validate_component(const Component& c) {
  bool ok = false;
  switch (c.series) {
    case Series::A:
    case Series::B:
    case Series::C: ok = c.rank >= 1; break;
    case Series::D: ok = c.rank >= 2; break;
    case Series::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case Series::F: ok = c.rank == 4; break;
    case Series::G: ok = c.rank == 2; break;
  }
  if (!ok)
    throw validation_error("invalid diagram component " +
                           std::string(1, static_cast<char>(c.series)) +
                           std::to_string(c.rank));
}

class DynkinDiagram {
 public:
  DynkinDiagram() = default;  // empty diagram (trivial group)

  explicit DynkinDiagram(std::vector<Component> comps) : comps_(std::move(comps)) {
    offsets_.push_back(0);
    for (const auto& c : comps_) {
      validate_component(c);
      offsets_.push_back(offsets_.back() + c.rank);
    }
    build_edges();
  }

  // Text form: components joined by '+', e.g. "D4+A1". Empty diagram is "0".
  static DynkinDiagram parse(const std::string& text) {
    std::string t;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty() || t == "0") return DynkinDiagram();
    std::vector<Component> comps;
    std::size_t pos = 0;
    while (pos < t.size()) {
      std::size_t next = t.find('+', pos);
      std::string tok = t.substr(pos, next == std::string::npos ? next : next - pos);
      comps.push_back(parse_component(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
      if (pos == t.size()) throw validation_error("trailing '+' in diagram text");
    }
    return DynkinDiagram(std::move(comps));
  }

  std::string format() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) out += '+';
      out += static_cast<char>(comps_[i].series);
      out += std::to_string(comps_[i].rank);
    }
    return out;
  }

  std::size_t component_count() const { return comps_.size(); }
  const Component& component(std::size_t i) const { return comps_.at(i); }
  const std::vector<Component>& components() const { return comps_; }

  unsigned vertex_count() const { return offsets_.empty() ? 0 : offsets_.back(); }

  std::size_t component_of(VertexId v) const {
    check_vertex(v);
    std::size_t ci = 0;
    while (v > offsets_[ci + 1]) ++ci;
    return ci;
  }

  unsigned bourbaki_of(VertexId v) const {
    std::size_t ci = component_of(v);
    return v - offsets_[ci];
  }

  VertexId vertex_id(std::size_t comp_index, unsigned bourbaki) const {
    if (comp_index >= comps_.size() || bourbaki < 1 || bourbaki > comps_[comp_index].rank)
      throw validation_error("vertex out of range");
    return offsets_[comp_index] + bourbaki;
  }

  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of v with the multiplicity/arrow data of the joining edge.
  std::vector<Edge> edges_at(VertexId v) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
      if (e.a == v || e.b == v) out.push_back(e);
    return out;
  }

  VertexSet all_vertices() const {
    VertexSet s;
    for (VertexId v = 1; v <= vertex_count(); ++v) s.insert(v);
    return s;
  }

  // "A3:2"; with repeated component types, "A1#2:1" is vertex 1 of the
  // second A1. A bare integer is accepted as a global vertex id.
  std::string format_vertex(VertexId v) const {
    std::size_t ci = component_of(v);
    const Component& c = comps_[ci];
    std::string out(1, static_cast<char>(c.series));
    out += std::to_string(c.rank);
    int occurrence = 1, total = 0;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      if (comps_[j] == c) {
        ++total;
        if (j < ci) ++occurrence;
      }
    }
    if (total > 1 && occurrence > 1) out += "#" + std::to_string(occurrence);
    out += ":" + std::to_string(bourbaki_of(v));
    return out;
  }

  VertexId parse_vertex(const std::string& text) const {
    std::string t;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw validation_error("empty vertex text");
    if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      VertexId v = to_uint(t, "vertex id");
      check_vertex(v);
      return v;
    }
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw validation_error("vertex text '" + text + "' lacks ':'");
    std::string comp_part = t.substr(0, colon);
    unsigned bourbaki = to_uint(t.substr(colon + 1), "Bourbaki number");
    int occurrence = 1;
    std::size_t hash = comp_part.find('#');
    if (hash != std::string::npos) {
      occurrence = static_cast<int>(to_uint(comp_part.substr(hash + 1), "occurrence"));
      comp_part = comp_part.substr(0, hash);
    }
    Component want = parse_component(comp_part);
    int seen = 0;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      if (comps_[j] == want && ++seen == occurrence) return vertex_id(j, bourbaki);
    }
    throw validation_error("no component '" + comp_part + "' (occurrence " +
                           std::to_string(occurrence) + ") in diagram " + format());
  }

  // Comma-separated vertex list, e.g. "A3:1,A3:3" or "1,3". Empty set is "".
  VertexSet parse_vertex_set(const std::string& text) const {
    VertexSet out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
      if (!cur.empty() || !out.empty() || in.peek() != EOF) {
        std::string trimmed;
        for (char ch : cur)
          if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
        if (trimmed.empty()) continue;
        out.insert(parse_vertex(trimmed));
      }
    return out;
  }

  friend bool operator==(const DynkinDiagram& x, const DynkinDiagram& y) {
    return x.comps_ == y.comps_;
  }

 private:
  static Component parse_component(const std::string& tok) {
    if (tok.size() < 2) throw validation_error("bad diagram component '" + tok + "'");
    char s = tok[0];
    if (s < 'A' || s > 'G')
      throw validation_error("unknown series '" + std::string(1, s) + "'");
    unsigned rank = to_uint(tok.substr(1), "rank");
    Component c{static_cast<Series>(s), rank};
    validate_component(c);
    return c;
  }

  static unsigned to_uint(const std::string& s, const char* what) {
    if (s.empty()) throw validation_error(std::string("empty ") + what);
    unsigned long v = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw validation_error(std::string("bad ") + what + " '" + s + "'");
      v = v * 10 + static_cast<unsigned long>(ch - '0');
      if (v > 1000000) throw validation_error(std::string(what) + " out of range");
    }
    return static_cast<unsigned>(v);
  }

  void check_vertex(VertexId v) const {
    if (v < 1 || v > vertex_count())
      throw validation_error("vertex " + std::to_string(v) + " out of range for " + format());
  }

  void add_edge(VertexId x, VertexId y, unsigned mult = 1, VertexId arrow_to = 0) {
    if (x > y) std::swap(x, y);
    edges_.push_back(Edge{x, y, mult, arrow_to});
  }

  void build_edges() {
    for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
      const Component& c = comps_[ci];
      unsigned off = offsets_[ci];
      auto v = [&](unsigned k) { return VertexId(off + k); };
      unsigned n = c.rank;
      switch (c.series) {
        case Series::A:
          for (unsigned i = 1; i < n; ++i) add_edge(v(i), v(i + 1));
          break;
        case Series::B:
          for (unsigned i = 1; i + 1 < n; ++i) add_edge(v(i), v(i + 1));
          if (n >= 2) add_edge(v(n - 1), v(n), 2, v(n));
          break;
        case Series::C:
          for (unsigned i = 1; i + 1 < n; ++i) add_edge(v(i), v(i + 1));
          if (n >= 2) add_edge(v(n - 1), v(n), 2, v(n - 1));
          break;
        case Series::D:
          for (unsigned i = 1; i + 2 < n; ++i) add_edge(v(i), v(i + 1));
          if (n >= 3) {
            add_edge(v(n - 2), v(n - 1));
            add_edge(v(n - 2), v(n));
          }
          break;
        case Series::E:
          add_edge(v(1), v(3));
          add_edge(v(3), v(4));
          add_edge(v(2), v(4));
          for (unsigned i = 4; i < n; ++i) add_edge(v(i), v(i + 1));
          break;
        case Series::F:
          add_edge(v(1), v(2));
          add_edge(v(2), v(3), 2, v(3));
          add_edge(v(3), v(4));
          break;
        case Series::G:
          add_edge(v(1), v(2), 3, v(1));
          break;
      }
    }
  }

  std::vector<Component> comps_;
  std::vector<unsigned> offsets_;  // size comps_+1; vertex ids of comp i are (offsets_[i], offsets_[i+1]]
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Star actions: finite sets of diagram automorphisms.

// A permutation is stored as the image array: perm[i-1] is the image of
// vertex i (1-based values).
using Permutation = std::vector<VertexId>;

struct StarAction {
  std::vector<Permutation> generators;

  static StarAction trivial() { return StarAction{}; }

  friend bool operator==(const StarAction&, const StarAction&) = default;
};

inline bool is_permutation(const Permutation& g, unsigned n) {
  if (g.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (VertexId img : g) {
    if (img < 1 || img > n || seen[img - 1]) return false;
    seen[img - 1] = true;
  }
  return true;
}

// A diagram automorphism preserves edges with multiplicities and arrow
// directions, and maps each component onto one of the same series and rank.
inline bool is_diagram_automorphism(const DynkinDiagram& d, const Permutation& g) {
  unsigned n = d.vertex_count();
  if (!is_permutation(g, n)) return false;
  for (std::size_t ci = 0; ci < d.component_count(); ++ci) {
    const Component& c = d.component(ci);
    std::size_t target = d.component_of(g[d.vertex_id(ci, 1) - 1]);
    if (!(d.component(target) == c)) return false;
    for (unsigned k = 2; k <= c.rank; ++k)
      if (d.component_of(g[d.vertex_id(ci, k) - 1]) != target) return false;
  }
  std::map<std::pair<VertexId, VertexId>, std::pair<unsigned, VertexId>> lookup;
  for (const auto& e : d.edges()) lookup[{e.a, e.b}] = {e.multiplicity, e.arrow_to};
  for (const auto& e : d.edges()) {
    VertexId x = g[e.a - 1], y = g[e.b - 1];
    if (x > y) std::swap(x, y);
    auto it = lookup.find({x, y});
    if (it == lookup.end()) return false;
    if (it->second.first != e.multiplicity) return false;
    if (e.multiplicity > 1 && it->second.second != g[e.arrow_to - 1]) return false;
  }
  return true;
}

inline void validate_star_action(const DynkinDiagram& d, const StarAction& s) {
  for (const auto& g : s.generators)
    if (!is_diagram_automorphism(d, g))
      throw validation_error("star action generator is not a diagram automorphism of " +
                             d.format());
}

// Orbit partition of the vertex set under the generated group, sorted by
// least element. Rejects generators that are not diagram automorphisms.
inline std::vector<VertexSet> orbits(const DynkinDiagram& d, const StarAction& s) {
  validate_star_action(d, s);
  unsigned n = d.vertex_count();
  std::vector<VertexId> parent(n + 1);
  for (VertexId v = 0; v <= n; ++v) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : s.generators)
    for (VertexId v = 1; v <= n; ++v) {
      VertexId a = find(v), b = find(g[v - 1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<VertexId, VertexSet> buckets;
  for (VertexId v = 1; v <= n; ++v) buckets[find(v)].insert(v);
  std::vector<VertexSet> out;
  for (auto& [root, set] : buckets) out.push_back(std::move(set));
  return out;
}

// The full automorphism group element list generated by the action (the
// closure is tiny for diagrams we handle; guarded by a hard cap).
inline std::vector<Permutation> generated_group(const DynkinDiagram& d, const StarAction& s,
                                                std::size_t cap = 4096) {
  validate_star_action(d, s);
  unsigned n = d.vertex_count();
  Permutation id(n);
  for (unsigned i = 0; i < n; ++i) id[i] = i + 1;
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : s.generators) {
      Permutation h(n);
      for (unsigned i = 0; i < n; ++i) h[i] = g[queue[qi][i] - 1];
      if (seen.insert(h).second) {
        queue.push_back(h);
        if (seen.size() > cap) throw std::logic_error("generated_group: cap exceeded");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Levi surgery: delete a vertex set, re-classify what remains.

struct LeviSubdiagram {
  DynkinDiagram diagram;
  std::map<VertexId, VertexId> relabel;  // old vertex id -> new vertex id
};

namespace detail {

struct InducedGraph {
  // adjacency with edge data, restricted to the kept vertices
  std::map<VertexId, std::vector<Edge>> adj;

  std::size_t degree(VertexId v) const {
    auto it = adj.find(v);
    return it == adj.end() ? 0 : it->second.size();
  }

  VertexId other(const Edge& e, VertexId v) const { return e.a == v ? e.b : e.a; }
};

// Classify one connected induced subgraph as a Component and produce the
// vertex order: order[k-1] is the old vertex that gets Bourbaki number k.
inline std::pair<Component, std::vector<VertexId>> classify_component(
    const std::vector<VertexId>& verts, const InducedGraph& g) {
  const std::size_t n = verts.size();
  if (n == 1) return {{Series::A, 1}, {verts[0]}};

  std::vector<const Edge*> multiple;
  for (VertexId v : verts)
    for (const auto& e : g.adj.at(v))
      if (e.multiplicity > 1 && e.a == v) multiple.push_back(&e);

  if (multiple.size() > 1) throw std::logic_error("classify: several multiple edges");

  if (multiple.size() == 1 && multiple[0]->multiplicity == 3) {
    if (n != 2) throw std::logic_error("classify: triple edge in big component");
    const Edge& e = *multiple[0];
    return {{Series::G, 2}, {e.arrow_to, g.other(e, e.arrow_to)}};
  }

  if (multiple.size() == 1) {  // one double edge: B, C or F
    const Edge& e = *multiple[0];
    if (n == 2) return {{Series::B, 2}, {g.other(e, e.arrow_to), e.arrow_to}};
    // must be a path; orient it and see where the double edge sits
    std::vector<VertexId> ends;
    for (VertexId v : verts)
      if (g.degree(v) == 1) ends.push_back(v);
    if (ends.size() != 2) throw std::logic_error("classify: double edge off a path");
    std::vector<VertexId> path{std::min(ends[0], ends[1])};
    while (path.size() < n) {
      for (const auto& pe : g.adj.at(path.back())) {
        VertexId w = g.other(pe, path.back());
        if (path.size() < 2 || w != path[path.size() - 2]) {
          path.push_back(w);
          break;
        }
      }
    }
    auto pos = [&](VertexId v) {
      return std::find(path.begin(), path.end(), v) - path.begin();
    };
    std::size_t lo = std::min(pos(e.a), pos(e.b));
    if (lo == 0) std::reverse(path.begin(), path.end()), lo = n - 2;
    if (lo == n - 2) {
      Series s = e.arrow_to == path[n - 1] ? Series::B : Series::C;
      return {{s, static_cast<unsigned>(n)}, path};
    }
    if (n == 4 && lo == 1) {
      if (e.arrow_to == path[1]) std::reverse(path.begin(), path.end());
      return {{Series::F, 4}, path};
    }
    throw std::logic_error("classify: double edge in unexpected position");
  }

  // simply laced: A, D or E
  std::vector<VertexId> branch;
  for (VertexId v : verts)
    if (g.degree(v) >= 3) branch.push_back(v);
  if (branch.size() > 1 || (branch.size() == 1 && g.degree(branch[0]) > 3))
    throw std::logic_error("classify: not a simply-laced diagram shape");

  if (branch.empty()) {  // path => A_n
    std::vector<VertexId> ends;
    for (VertexId v : verts)
      if (g.degree(v) == 1) ends.push_back(v);
    if (ends.size() != 2) throw std::logic_error("classify: cycle in diagram");
    std::vector<VertexId> path{std::min(ends[0], ends[1])};
    while (path.size() < n) {
      for (const auto& pe : g.adj.at(path.back())) {
        VertexId w = g.other(pe, path.back());
        if (path.size() < 2 || w != path[path.size() - 2]) {
          path.push_back(w);
          break;
        }
      }
    }
    return {{Series::A, static_cast<unsigned>(n)}, path};
  }

  VertexId c = branch[0];
  std::vector<std::vector<VertexId>> arms;  // from the center outward
  for (const auto& e : g.adj.at(c)) {
    std::vector<VertexId> arm{g.other(e, c)};
    while (true) {
      VertexId tail = arm.back(), prev = arm.size() >= 2 ? arm[arm.size() - 2] : c;
      bool grew = false;
      for (const auto& ae : g.adj.at(tail)) {
        VertexId w = g.other(ae, tail);
        if (w != prev && w != c) {
          arm.push_back(w);
          grew = true;
          break;
        }
      }
      if (!grew) break;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x[0] < y[0];
  });
  std::size_t a = arms[0].size(), b = arms[1].size(), cc = arms[2].size();

  std::vector<VertexId> order(n);
  if (a == 1 && b == 1) {  // D_n, n >= 4
    if (cc == 1) {  // D_4: all three leaves interchangeable, keep ascending
      std::vector<VertexId> leaves{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaves.begin(), leaves.end());
      return {{Series::D, 4}, {leaves[0], c, leaves[1], leaves[2]}};
    }
    const auto& lng = arms[2];
    for (std::size_t i = 0; i < cc; ++i) order[i] = lng[cc - 1 - i];
    order[cc] = c;
    order[cc + 1] = std::min(arms[0][0], arms[1][0]);
    order[cc + 2] = std::max(arms[0][0], arms[1][0]);
    return {{Series::D, static_cast<unsigned>(n)}, order};
  }
  if (a == 1 && b == 2 && cc >= 2 && cc <= 4) {  // E_6, E_7, E_8
    order[3] = c;                       // Bourbaki 4
    order[1] = arms[0][0];              // Bourbaki 2
    order[2] = arms[1][0];              // Bourbaki 3
    order[0] = arms[1][1];              // Bourbaki 1
    for (std::size_t i = 0; i < cc; ++i) order[4 + i] = arms[2][i];
    return {{Series::E, static_cast<unsigned>(n)}, order};
  }
  throw std::logic_error("classify: branch arms outside D/E shapes");
}

}  // namespace detail

// Diagram obtained by deleting `theta` and the incident edges, with its
// components re-classified and renumbered. Components of the result are
// ordered by their least old vertex; ties cannot occur.
inline LeviSubdiagram levi_subdiagram(const DynkinDiagram& d, const VertexSet& theta) {
  for (VertexId v : theta)
    if (v < 1 || v > d.vertex_count())
      throw validation_error("levi: vertex " + std::to_string(v) + " out of range");

  detail::InducedGraph g;
  for (VertexId v = 1; v <= d.vertex_count(); ++v)
    if (!theta.count(v)) g.adj[v];
  for (const auto& e : d.edges())
    if (!theta.count(e.a) && !theta.count(e.b)) {
      g.adj[e.a].push_back(e);
      g.adj[e.b].push_back(e);
    }

  // connected components, by least vertex
  std::set<VertexId> todo;
  for (const auto& [v, ignored] : g.adj) todo.insert(v);
  std::vector<std::pair<Component, std::vector<VertexId>>> classified;
  while (!todo.empty()) {
    std::vector<VertexId> stack{*todo.begin()}, verts;
    todo.erase(todo.begin());
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (const auto& e : g.adj.at(v)) {
        VertexId w = g.other(e, v);
        if (todo.erase(w)) stack.push_back(w);
      }
    }
    std::sort(verts.begin(), verts.end());
    classified.push_back(detail::classify_component(verts, g));
  }
  std::sort(classified.begin(), classified.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.second.begin(), x.second.end()) <
           *std::min_element(y.second.begin(), y.second.end());
  });

  LeviSubdiagram out;
  std::vector<Component> comps;
  for (const auto& [c, order] : classified) comps.push_back(c);
  out.diagram = DynkinDiagram(std::move(comps));
  for (std::size_t ci = 0; ci < classified.size(); ++ci) {
    const auto& order = classified[ci].second;
    for (std::size_t k = 0; k < order.size(); ++k)
      out.relabel[order[k]] = out.diagram.vertex_id(ci, static_cast<unsigned>(k) + 1);
  }

  // sanity: the relabeling must carry the induced edges onto the edges of
  // the rebuilt diagram, arrows included
  std::map<std::pair<VertexId, VertexId>, std::pair<unsigned, VertexId>> want;
  for (const auto& e : out.diagram.edges()) want[{e.a, e.b}] = {e.multiplicity, e.arrow_to};
  std::size_t seen = 0;
  for (const auto& e : d.edges()) {
    if (theta.count(e.a) || theta.count(e.b)) continue;
    VertexId x = out.relabel.at(e.a), y = out.relabel.at(e.b);
    if (x > y) std::swap(x, y);
    auto it = want.find({x, y});
    if (it == want.end() || it->second.first != e.multiplicity ||
        (e.multiplicity > 1 && it->second.second != out.relabel.at(e.arrow_to)))
      throw std::logic_error("levi: classification does not match induced edges");
    ++seen;
  }
  if (seen != out.diagram.edges().size())
    throw std::logic_error("levi: edge count mismatch after classification");
  return out;
}

// ---------------------------------------------------------------------------
// Poincare series.

inline std::vector<unsigned> fundamental_degrees(const Component& c) {
  unsigned n = c.rank;
  std::vector<unsigned> deg;
  switch (c.series) {
    case Series::A:
      for (unsigned i = 2; i <= n + 1; ++i) deg.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (unsigned i = 2; i <= 2 * n; i += 2) deg.push_back(i);
      break;
    case Series::D:
      for (unsigned i = 2; i <= 2 * (n - 1); i += 2) deg.push_back(i);
      deg.push_back(n);
      break;
    case Series::E:
      if (n == 6) deg = {2, 5, 6, 8, 9, 12};
      else if (n == 7) deg = {2, 6, 8, 10, 12, 14, 18};
      else deg = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F: deg = {2, 6, 8, 12}; break;
    case Series::G: deg = {2, 6}; break;
  }
  return deg;
}

// P_W(q) = prod over fundamental degrees of (q^d - 1)/(q - 1).
inline Poly weyl_poincare(const DynkinDiagram& d) {
  Poly p = Poly::one();
  for (const auto& c : d.components())
    for (unsigned deg : fundamental_degrees(c)) p = p * Poly::q_integer(deg);
  return p;
}

inline Int weyl_order(const DynkinDiagram& d) { return weyl_poincare(d).value_at_one(); }

// Poincare polynomial of the variety of parabolic subgroups of type theta
// (theta is the set of deleted vertices): P_W / P_{W'} for W' the Weyl group
// of the diagram with theta removed. The division is exact.
inline Poly flag_poincare(const DynkinDiagram& d, const VertexSet& theta) {
  return divide_exact(weyl_poincare(d), weyl_poincare(levi_subdiagram(d, theta).diagram));
}

}  // namespace titsmotive

#endif
