#pragma once

// JSON encodings for every document the command line reads or writes.
// Top-level documents carry "schema":"1"; nested objects do not. Rationals
// travel as strings "n" or "n/d" so nothing is rounded.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <titsmotive/equiv.hpp>
#include <titsmotive/motive.hpp>
#include <titsmotive/titsindex.hpp>

namespace titsmotive {

using Json = nlohmann::json;

inline constexpr const char* schema_version = "1";

namespace detail {

inline void check_schema(const Json& j, const char* what) {
  if (!j.is_object()) throw validation_error(std::string(what) + ": expected a JSON object");
  auto it = j.find("schema");
  if (it != j.end() && *it != Json(schema_version))
    throw validation_error(std::string(what) + ": unsupported schema version");
}

inline const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw validation_error(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

}  // namespace detail

inline std::string rat_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw validation_error("rational: expected \"n/d\" string or integer");
  const std::string s = j.get<std::string>();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int d(s.substr(slash + 1));
    if (d == 0) throw validation_error("rational '" + s + "' has denominator zero");
    return Rat(Int(s.substr(0, slash)), d);
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
    throw validation_error("cannot parse rational '" + s + "'");
  }
}

// --------------------------------------------------------------------------
// Quadratic forms: {"schema":"1","diag":["1","-1","5/2",...]}

inline Json to_json(const QuadraticForm& q) {
  Json diag = Json::array();
  for (const auto& c : q.coefficients()) diag.push_back(rat_string(c));
  return Json{{"schema", schema_version}, {"diag", std::move(diag)}};
}

inline QuadraticForm form_from_json(const Json& j) {
  detail::check_schema(j, "quadratic form");
  const Json& diag = detail::field(j, "diag", "quadratic form");
  if (!diag.is_array()) throw validation_error("quadratic form: 'diag' must be an array");
  std::vector<Rat> cs;
  for (const auto& e : diag) cs.push_back(rat_from_json(e));
  return QuadraticForm(std::move(cs));
}

// --------------------------------------------------------------------------
// Central simple algebras:
// {"schema":"1","degree":4,"inv":{"v3":"1/4"},"places":{"v3":"finite"}}

inline Json to_json(const CsaDescriptor& a) {
  Json inv = Json::object(), places = Json::object();
  for (const auto& [v, r] : a.inv) inv[v] = rat_string(r);
  for (const auto& [v, k] : a.places) places[v] = place_kind_name(k);
  return Json{{"schema", schema_version},
              {"degree", a.degree.str()},
              {"inv", std::move(inv)},
              {"places", std::move(places)}};
}

inline Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw validation_error(std::string(what) + ": expected an integer");
}

inline CsaDescriptor csa_from_json(const Json& j) {
  detail::check_schema(j, "algebra");
  CsaDescriptor a;
  a.degree = int_from_json(detail::field(j, "degree", "algebra"), "algebra degree");
  if (auto it = j.find("places"); it != j.end()) {
    if (!it->is_object()) throw validation_error("algebra: 'places' must be an object");
    for (const auto& [v, k] : it->items()) a.places[v] = parse_place_kind(k.get<std::string>());
  }
  if (auto it = j.find("inv"); it != j.end()) {
    if (!it->is_object()) throw validation_error("algebra: 'inv' must be an object");
    for (const auto& [v, r] : it->items()) {
      Rat val = rat_from_json(r);
      if (val != 0) a.inv[v] = val;
      a.places.emplace(v, PlaceKind::Finite);
    }
  }
  return a;
}

// --------------------------------------------------------------------------
// Star actions travel in cycle notation. A single generator is written as
// its cycle list [[1,3]]; several generators nest once more: [[[1,2]],[[3,4]]].

namespace detail {

inline Json permutation_cycles(const Permutation& g) {
  Json cycles = Json::array();
  std::vector<bool> seen(g.size(), false);
  for (VertexId start = 1; start <= g.size(); ++start) {
    if (seen[start - 1] || g[start - 1] == start) continue;
    Json cycle = Json::array();
    VertexId v = start;
    do {
      seen[v - 1] = true;
      cycle.push_back(v);
      v = g[v - 1];
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline Permutation cycles_to_permutation(const Json& cycles, unsigned n) {
  Permutation g(n);
  for (unsigned i = 0; i < n; ++i) g[i] = i + 1;
  for (const auto& cycle : cycles) {
    if (!cycle.is_array() || cycle.empty())
      throw validation_error("star action: cycles must be nonempty arrays");
    std::vector<VertexId> vs;
    for (const auto& e : cycle) {
      if (!e.is_number_unsigned() && !e.is_number_integer())
        throw validation_error("star action: cycle entries must be vertex ids");
      long long v = e.get<long long>();
      if (v < 1 || static_cast<unsigned long long>(v) > n)
        throw validation_error("star action: vertex id out of range");
      vs.push_back(static_cast<VertexId>(v));
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      VertexId from = vs[i], to = vs[(i + 1) % vs.size()];
      if (g[from - 1] != from)
        throw validation_error("star action: vertex repeated across cycles");
      g[from - 1] = to;
    }
  }
  return g;
}

inline Json action_to_json(const StarAction& a) {
  if (a.generators.empty()) return Json::array();
  if (a.generators.size() == 1) return permutation_cycles(a.generators[0]);
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(permutation_cycles(g));
  return gens;
}

inline StarAction action_from_json(const Json& j, unsigned n) {
  if (!j.is_array()) throw validation_error("star action: expected an array");
  StarAction a;
  if (j.empty()) return a;
  // one generator as cycles, or a list of generators; tell them apart by
  // the nesting depth of the first entry
  const Json& first = j.front();
  if (!first.is_array())
    throw validation_error("star action: expected cycle arrays");
  bool nested = !first.empty() && first.front().is_array();
  if (nested)
    for (const auto& g : j) a.generators.push_back(cycles_to_permutation(g, n));
  else
    a.generators.push_back(cycles_to_permutation(j, n));
  return a;
}

inline Json vertex_set_to_json(const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(v);
  return out;
}

inline VertexSet vertex_set_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw validation_error(std::string(what) + ": expected an array");
  VertexSet s;
  for (const auto& e : j) {
    if (!e.is_number_integer() && !e.is_number_unsigned())
      throw validation_error(std::string(what) + ": vertex ids must be integers");
    long long v = e.get<long long>();
    if (v < 1) throw validation_error(std::string(what) + ": vertex ids are 1-based");
    s.insert(static_cast<VertexId>(v));
  }
  return s;
}

inline Json index_body(const TitsIndex& t) {
  Json distinguished = Json::array();
  for (const auto& orbit : t.distinguished) distinguished.push_back(vertex_set_to_json(orbit));
  return Json{{"diagram", t.diagram.format()},
              {"action", action_to_json(t.action)},
              {"distinguished", std::move(distinguished)}};
}

inline TitsIndex index_from_body(const Json& j) {
  if (!j.is_object()) throw validation_error("index: expected a JSON object");
  TitsIndex t;
  t.diagram = DynkinDiagram::parse(field(j, "diagram", "index").get<std::string>());
  if (auto it = j.find("action"); it != j.end())
    t.action = action_from_json(*it, t.diagram.vertex_count());
  if (auto it = j.find("distinguished"); it != j.end()) {
    if (!it->is_array()) throw validation_error("index: 'distinguished' must be an array");
    for (const auto& orbit : *it)
      t.distinguished.insert(vertex_set_from_json(orbit, "index distinguished orbit"));
  }
  validate_star_action(t.diagram, t.action);
  validate_index(t);
  return t;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Indices and higher index tables

inline Json to_json(const TitsIndex& t) {
  Json j = detail::index_body(t);
  j["schema"] = schema_version;
  return j;
}

inline TitsIndex tits_index_from_json(const Json& j) {
  detail::check_schema(j, "index");
  return detail::index_from_body(j);
}

inline Json to_json(const HigherIndexTable& t) {
  Json entries = Json::object();
  for (const auto& [label, idx] : t.entries) entries[label] = detail::index_body(idx);
  Json j{{"schema", schema_version}, {"entries", std::move(entries)}};
  if (t.prime) j["prime"] = static_cast<long long>(*t.prime);
  return j;
}

inline HigherIndexTable table_from_json(const Json& j) {
  detail::check_schema(j, "higher index table");
  HigherIndexTable t;
  if (auto it = j.find("prime"); it != j.end()) t.prime = int_from_json(*it, "table prime");
  const Json& entries = detail::field(j, "entries", "higher index table");
  if (!entries.is_object())
    throw validation_error("higher index table: 'entries' must be an object");
  for (const auto& [label, body] : entries.items())
    t.entries.emplace(label, detail::index_from_body(body));
  validate_table(t);
  return t;
}

// --------------------------------------------------------------------------
// Group descriptors. The "kind" field picks the branch; a document without
// one is recognized by shape, so an emitted higher index table can be fed
// straight back in as an abstract descriptor.

inline Json to_json(const GroupDescriptor& g) {
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    Json j = to_json(sl->algebra);
    j["kind"] = "special_linear";
    return j;
  }
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    Json j = to_json(so->form);
    j["kind"] = "special_orthogonal";
    return j;
  }
  const auto& abs = std::get<Abstract>(g);
  Json j = to_json(abs.table);
  j["kind"] = "abstract";
  return j;
}

inline GroupDescriptor group_from_json(const Json& j) {
  detail::check_schema(j, "group descriptor");
  std::string kind;
  if (auto it = j.find("kind"); it != j.end()) {
    kind = it->get<std::string>();
  } else if (j.contains("diag")) {
    kind = "special_orthogonal";
  } else if (j.contains("degree")) {
    kind = "special_linear";
  } else if (j.contains("entries")) {
    kind = "abstract";
  } else if (j.contains("diagram")) {
    // a bare index document becomes a one-entry table
    TitsIndex t = tits_index_from_json(j);
    HigherIndexTable table;
    if (auto it = j.find("prime"); it != j.end())
      table.prime = int_from_json(*it, "index prime");
    table.entries[ground_label] = t;
    validate_table(table);
    return Abstract{t.diagram, t.action, std::move(table)};
  } else {
    throw validation_error("group descriptor: cannot tell the kind; set 'kind'");
  }
  if (kind == "special_linear") return SpecialLinear{csa_from_json(j)};
  if (kind == "special_orthogonal") return SpecialOrthogonal{form_from_json(j)};
  if (kind == "abstract") {
    HigherIndexTable t = table_from_json(j);
    const TitsIndex& ground = t.entries.at(ground_label);
    return Abstract{ground.diagram, ground.action, std::move(t)};
  }
  throw validation_error("group descriptor: unknown kind '" + kind + "'");
}

// --------------------------------------------------------------------------
// Motives: {"schema":"1","summands":[{"label":{...},"shift":3,"mult":2},...]}
// A bare summand array is accepted on input.

inline Json to_json(const UpperMotiveLabel& l) {
  Json j{{"class", l.class_id}};
  if (!l.group.empty()) j["group"] = l.group;
  if (!l.theta.empty()) j["theta"] = detail::vertex_set_to_json(l.theta);
  if (l.p != 0) j["p"] = static_cast<long long>(l.p);
  return j;
}

inline UpperMotiveLabel label_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("motive label: expected a JSON object");
  UpperMotiveLabel l;
  if (auto it = j.find("group"); it != j.end()) l.group = it->get<std::string>();
  if (auto it = j.find("theta"); it != j.end())
    l.theta = detail::vertex_set_from_json(*it, "motive label theta");
  if (auto it = j.find("p"); it != j.end()) l.p = int_from_json(*it, "motive label p");
  l.class_id = detail::field(j, "class", "motive label").get<std::string>();
  return l;
}

inline Json to_json(const Motive& m) {
  Json summands = Json::array();
  for (const auto& [term, mult] : m.terms())
    summands.push_back(Json{{"label", to_json(term.first)},
                            {"shift", term.second},
                            {"mult", mult}});
  return Json{{"schema", schema_version}, {"summands", std::move(summands)}};
}

inline Motive motive_from_json(const Json& j) {
  const Json* summands = &j;
  if (j.is_object()) {
    detail::check_schema(j, "motive");
    summands = &detail::field(j, "summands", "motive");
  }
  if (!summands->is_array()) throw validation_error("motive: expected a summand array");
  Motive m;
  for (const auto& s : *summands) {
    if (!s.is_object()) throw validation_error("motive: summands must be objects");
    unsigned long long mult = 1;
    if (auto it = s.find("mult"); it != s.end()) mult = it->get<unsigned long long>();
    unsigned shift = 0;
    if (auto it = s.find("shift"); it != s.end()) {
      long long raw = it->get<long long>();
      if (raw < 0) throw validation_error("motive: shifts are nonnegative");
      shift = static_cast<unsigned>(raw);
    }
    m.add(label_from_json(detail::field(s, "label", "motive summand")), shift, mult);
  }
  return m;
}

// --------------------------------------------------------------------------
// Extension registries. A special linear entry carries a plan, an
// orthogonal one a completion, an abstract one just the label:
// {"schema":"1","registry":[{"label":"L","plan":{"v3":[2,2]}},
//                           {"label":"M","completion":"infinity"}]}

inline Json to_json(const ExtensionPlan& plan) {
  Json j = Json::object();
  for (const auto& [v, degrees] : plan) {
    Json slots = Json::array();
    for (const auto& d : degrees) slots.push_back(d.str());
    j[v] = std::move(slots);
  }
  return j;
}

inline ExtensionPlan plan_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("extension plan: expected an object");
  ExtensionPlan plan;
  for (const auto& [v, slots] : j.items()) {
    if (!slots.is_array()) throw validation_error("extension plan: degrees must be arrays");
    std::vector<Int> degrees;
    for (const auto& d : slots) degrees.push_back(int_from_json(d, "extension degree"));
    plan[v] = std::move(degrees);
  }
  return plan;
}

inline RationalPlace place_from_json(const Json& j) {
  if (j.is_number_integer()) return RationalPlace::prime(Int(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "infinity" || s == "inf") return RationalPlace::infinity();
    try {
      return RationalPlace::prime(Int(s));
    } catch (const std::exception&) {
    }
  }
  throw validation_error("completion: expected a prime or \"infinity\"");
}

inline Json to_json(const ExtensionSpec& spec) {
  Json j{{"label", spec.label}};
  if (spec.plan) j["plan"] = to_json(*spec.plan);
  if (spec.completion) j["completion"] = spec.completion->str();
  return j;
}

inline ExtensionSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("registry entry: expected an object");
  ExtensionSpec spec;
  spec.label = detail::field(j, "label", "registry entry").get<std::string>();
  if (auto it = j.find("plan"); it != j.end()) spec.plan = plan_from_json(*it);
  if (auto it = j.find("completion"); it != j.end()) spec.completion = place_from_json(*it);
  return spec;
}

inline Json to_json(const ExtensionRegistry& reg) {
  Json entries = Json::array();
  for (const auto& spec : reg) entries.push_back(to_json(spec));
  return Json{{"schema", schema_version}, {"registry", std::move(entries)}};
}

inline ExtensionRegistry registry_from_json(const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) {
    detail::check_schema(j, "registry");
    entries = &detail::field(j, "registry", "registry");
  }
  if (!entries->is_array()) throw validation_error("registry: expected an entry array");
  ExtensionRegistry reg;
  for (const auto& e : *entries) reg.push_back(spec_from_json(e));
  return reg;
}

// --------------------------------------------------------------------------
// Verdicts

inline Json to_json(const Verdict& v) {
  Json j{{"schema", schema_version}, {"verdict", verdict_name(v.kind)}};
  if (v.prime) j["prime"] = static_cast<long long>(*v.prime);
  if (const auto* w = std::get_if<PlaceWitness>(&v.witness)) {
    j["witness"] = Json{{"place", w->place}, {w->quantity, Json::array({w->left, w->right})}};
  } else if (const auto* tw = std::get_if<TypeWitness>(&v.witness)) {
    j["witness"] = Json{{"types", Json::array({tw->left, tw->right})}};
  } else if (const auto* ew = std::get_if<EntryWitness>(&v.witness)) {
    j["witness"] = Json{{"label", ew->label}};
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.registry_relative) j["registry_relative"] = true;
  return j;
}

// --------------------------------------------------------------------------
// Files

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw validation_error("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace titsmotive
