// titsmotive: indices, p-indices, motivic decompositions, and equivalence
// verdicts for classical group descriptors, JSON in and JSON out.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <titsmotive/titsmotive.hpp>

using namespace titsmotive;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int fail(const std::string& message) {
  emit(Json{{"schema", schema_version}, {"error", message}});
  return 2;
}

unsigned long long resolve_seed(const std::string& flag) {
  if (!flag.empty()) return std::stoull(flag);
  if (const char* env = std::getenv("TITSMOTIVE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw validation_error("TITSMOTIVE_SEED is not a number");
    }
  }
  return 1729;
}

Int parse_prime(const std::string& text) {
  Int p;
  try {
    p = Int(text);
  } catch (const std::exception&) {
    throw validation_error("prime '" + text + "' is not an integer");
  }
  if (!is_prime(p)) throw validation_error("'" + text + "' is not prime");
  return p;
}

// Coefficients that fit in 53 bits stay JSON numbers; anything larger is a
// decimal string so nothing silently loses precision.
Json int_to_json(const Int& n) {
  static const Int cap = (Int(1) << 53);
  if (n >= -cap && n <= cap) return Json(n.convert_to<long long>());
  return Json(n.str());
}

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(int_to_json(c));
  return Json{{"schema", schema_version}, {"coefficients", std::move(coeffs)}};
}

// --------------------------------------------------------------------------
// ASCII rendering. Distinguished vertices are circled in the picture and
// the orbits repeated below as vertex lists.

std::string render_component(const DynkinDiagram& d, std::size_t ci, const VertexSet& marked) {
  const Component& c = d.components()[ci];
  unsigned n = c.rank;
  auto tok = [&](unsigned k) {
    VertexId v = d.vertex_id(ci, k);
    std::string s = std::to_string(v);
    return marked.count(v) ? "(" + s + ")" : s;
  };
  // positions[k] = column where token k starts on the chain line
  std::vector<std::size_t> starts(n + 1, 0);
  std::string line;
  auto append = [&](unsigned k, const std::string& joint) {
    if (!line.empty()) line += joint;
    starts[k] = line.size();
    line += tok(k);
  };

  std::vector<unsigned> chain;
  std::optional<unsigned> branch_from, branch_vertex;
  std::string tip;  // arrow joint before the final chain vertex

  switch (c.series) {
    case Series::A:
      for (unsigned k = 1; k <= n; ++k) chain.push_back(k);
      break;
    case Series::B:
      for (unsigned k = 1; k <= n; ++k) chain.push_back(k);
      if (n >= 2) tip = "=>";
      break;
    case Series::C:
      for (unsigned k = 1; k <= n; ++k) chain.push_back(k);
      if (n >= 2) tip = "<=";
      break;
    case Series::G:
      chain = {1, 2};
      tip = "<<=";
      break;
    case Series::F:
      chain = {1, 2, 3, 4};
      break;
    case Series::D:
      if (n == 2) {
        chain = {1};
        branch_from = 1;
        branch_vertex = 2;
        break;
      }
      for (unsigned k = 1; k <= n - 1; ++k) chain.push_back(k);
      branch_from = n - 2;
      branch_vertex = n;
      break;
    case Series::E:
      chain.push_back(1);
      for (unsigned k = 3; k <= n; ++k) chain.push_back(k);
      branch_from = 4;
      branch_vertex = 2;
      break;
  }

  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::string joint = "--";
    if (c.series == Series::F && chain[i] == 3) joint = "=>";
    if (!tip.empty() && i + 1 == chain.size()) joint = tip;
    append(chain[i], i == 0 ? "" : joint);
  }

  std::string out = line;
  if (branch_vertex) {
    // hang the off-chain vertex below its attachment point
    std::string t = tok(*branch_from);
    std::size_t col = starts[*branch_from] + t.size() / 2;
    if (c.series == Series::D && n == 2) col = starts[1];  // no edge: just stack
    std::string bar(col, ' '), leaf(col, ' ');
    if (!(c.series == Series::D && n == 2)) bar += '|';
    leaf += tok(*branch_vertex);
    if (c.series == Series::D && n == 2)
      out += "\n" + leaf;
    else
      out += "\n" + bar + "\n" + leaf;
  }
  return out;
}

std::string render_index(const TitsIndex& t) {
  VertexSet marked;
  for (const auto& orbit : t.distinguished)
    for (VertexId v : orbit) marked.insert(v);
  std::string out = t.diagram.format();
  for (std::size_t ci = 0; ci < t.diagram.components().size(); ++ci)
    out += "\n" + render_component(t.diagram, ci, marked);
  out += "\ndistinguished:";
  if (t.distinguished.empty()) out += " none";
  for (const auto& orbit : t.distinguished) {
    out += " [";
    bool first = true;
    for (VertexId v : orbit) {
      if (!first) out += " ";
      out += std::to_string(v);
      first = false;
    }
    out += "]";
  }
  return out;
}

// --------------------------------------------------------------------------
// Seeded registries for `higher --random`.

ExtensionRegistry random_registry(const GroupDescriptor& g, unsigned count,
                                  unsigned long long seed) {
  std::mt19937_64 rng(seed);
  ExtensionRegistry reg;
  if (const auto* sl = std::get_if<SpecialLinear>(&g)) {
    static const long degrees[] = {1, 2, 3, 4, 6, 8, 9, 12};
    std::vector<std::string> labels;
    for (const auto& [v, k] : sl->algebra.places) labels.push_back(v);
    if (labels.empty()) throw validation_error("algebra declares no places to extend at");
    for (unsigned i = 1; i <= count; ++i) {
      ExtensionSpec spec;
      spec.label = "r" + std::to_string(i);
      ExtensionPlan plan;
      for (const auto& v : labels) {
        if (rng() % 2) continue;
        std::vector<Int> slots;
        unsigned m = 1 + rng() % 2;
        for (unsigned s = 0; s < m; ++s) slots.emplace_back(degrees[rng() % 8]);
        plan[v] = std::move(slots);
      }
      spec.plan = std::move(plan);
      reg.push_back(std::move(spec));
    }
    return reg;
  }
  if (const auto* so = std::get_if<SpecialOrthogonal>(&g)) {
    std::vector<RationalPlace> places;
    for (const auto& v : so->form.relevant_places()) places.push_back(v);
    for (unsigned i = 1; i <= count; ++i) {
      ExtensionSpec spec;
      spec.label = "r" + std::to_string(i);
      spec.completion = places[rng() % places.size()];
      reg.push_back(std::move(spec));
    }
    return reg;
  }
  const auto& a = std::get<Abstract>(g);
  std::vector<std::string> labels;
  for (const auto& [label, idx] : a.table.entries)
    if (label != ground_label) labels.push_back(label);
  if (labels.empty())
    throw validation_error("abstract table has no labeled entries to sample");
  for (unsigned i = 1; i <= count && i <= labels.size(); ++i) {
    ExtensionSpec spec;
    spec.label = labels[rng() % labels.size()];
    if (std::none_of(reg.begin(), reg.end(),
                     [&](const ExtensionSpec& s) { return s.label == spec.label; }))
      reg.push_back(std::move(spec));
  }
  return reg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tits indices and motivic equivalence of classical group descriptors"};
  app.require_subcommand(1);

  std::string seed_flag;
  app.add_option("--seed", seed_flag, "seed for sampled registries (default 1729)");

  // index
  auto* cmd_index = app.add_subcommand("index", "Witt-Tits index of a group descriptor");
  std::string index_path;
  bool index_ascii = false;
  cmd_index->add_option("group", index_path, "group descriptor JSON file")->required();
  cmd_index->add_flag("--ascii", index_ascii, "draw the diagram instead of JSON");

  // p-index
  auto* cmd_pindex = app.add_subcommand("p-index", "index after scalar extension coprime to p");
  std::string pindex_path, pindex_prime;
  bool pindex_ascii = false;
  cmd_pindex->add_option("group", pindex_path, "group descriptor JSON file")->required();
  cmd_pindex->add_option("-p,--prime", pindex_prime, "prime")->required();
  cmd_pindex->add_flag("--ascii", pindex_ascii, "draw the diagram instead of JSON");

  // higher
  auto* cmd_higher = app.add_subcommand("higher", "p-indices over a registry of extensions");
  std::string higher_path, higher_prime, higher_registry;
  unsigned higher_random = 0;
  cmd_higher->add_option("group", higher_path, "group descriptor JSON file")->required();
  cmd_higher->add_option("-p,--prime", higher_prime, "prime")->required();
  cmd_higher->add_option("--registry", higher_registry, "extension registry JSON file");
  cmd_higher->add_option("--random", higher_random, "sample this many extensions instead");

  // poincare
  auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomial of a flag variety");
  std::string poincare_diagram, poincare_theta;
  cmd_poincare->add_option("diagram", poincare_diagram, "diagram text, e.g. A2 or D4+A1")
      ->required();
  cmd_poincare->add_option("--theta", poincare_theta,
                           "vertices of the parabolic type, e.g. 1,3 or A3:2");

  // motive-split
  auto* cmd_split = app.add_subcommand("motive-split", "motive of a split flag variety");
  std::string split_diagram, split_theta;
  cmd_split->add_option("diagram", split_diagram, "diagram text")->required();
  cmd_split->add_option("--theta", split_theta, "vertices of the parabolic type");

  // equiv
  auto* cmd_equiv = app.add_subcommand("equiv", "motivic equivalence verdict for two groups");
  std::string equiv_a, equiv_b, equiv_prime;
  bool equiv_motivic = false, equiv_strict = false, equiv_abstract = false;
  cmd_equiv->add_option("left", equiv_a, "group descriptor JSON file")->required();
  cmd_equiv->add_option("right", equiv_b, "group descriptor JSON file")->required();
  cmd_equiv->add_option("-p,--prime", equiv_prime, "compare modulo this prime");
  cmd_equiv->add_flag("--motivic", equiv_motivic, "conjoin all relevant primes");
  cmd_equiv->add_flag("--strict", equiv_strict, "exit 1 on an unknown verdict");
  cmd_equiv->add_flag("--abstract", equiv_abstract, "require index table inputs");

  // levi
  auto* cmd_levi = app.add_subcommand("levi", "semisimple Levi factors at a distinguished theta");
  std::string levi_path, levi_theta;
  cmd_levi->add_option("group", levi_path, "group descriptor JSON file")->required();
  cmd_levi->add_option("--theta", levi_theta, "distinguished vertices to cross off")
      ->required();

  // check-calcul
  auto* cmd_check = app.add_subcommand("check-calcul", "verify the reconstruction identity");
  std::string check_motive, check_model, check_class;
  long check_shift = 0;
  cmd_check->add_option("motive", check_motive, "motive JSON file")->required();
  cmd_check->add_option("--model", check_model, "extension model JSON file")->required();
  cmd_check->add_option("--class", check_class, "upper motive class id")->required();
  cmd_check->add_option("--shift", check_shift, "shift to evaluate at (default 0)");

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  try {
    if (*cmd_index) {
      TitsIndex t = tits_index(group_from_json(read_json_file(index_path)));
      if (index_ascii)
        std::cout << render_index(t) << '\n';
      else
        emit(to_json(t));
      return 0;
    }

    if (*cmd_pindex) {
      Int p = parse_prime(pindex_prime);
      TitsIndex t = p_index(group_from_json(read_json_file(pindex_path)), p);
      if (pindex_ascii) {
        std::cout << render_index(t) << '\n';
      } else {
        Json j = to_json(t);
        j["prime"] = int_to_json(p);
        emit(j);
      }
      return 0;
    }

    if (*cmd_higher) {
      Int p = parse_prime(higher_prime);
      GroupDescriptor g = group_from_json(read_json_file(higher_path));
      ExtensionRegistry reg;
      if (!higher_registry.empty() && higher_random > 0)
        throw validation_error("pass --registry or --random, not both");
      if (!higher_registry.empty())
        reg = registry_from_json(read_json_file(higher_registry));
      else if (higher_random > 0)
        reg = random_registry(g, higher_random, resolve_seed(seed_flag));
      emit(to_json(higher_p_index(g, p, reg)));
      return 0;
    }

    if (*cmd_poincare) {
      DynkinDiagram d = DynkinDiagram::parse(poincare_diagram);
      VertexSet theta =
          poincare_theta.empty() ? d.all_vertices() : d.parse_vertex_set(poincare_theta);
      emit(poly_to_json(flag_poincare(d, theta)));
      return 0;
    }

    if (*cmd_split) {
      DynkinDiagram d = DynkinDiagram::parse(split_diagram);
      VertexSet theta =
          split_theta.empty() ? d.all_vertices() : d.parse_vertex_set(split_theta);
      emit(to_json(split_motive(d, theta)));
      return 0;
    }

    if (*cmd_equiv) {
      if (equiv_prime.empty() == !equiv_motivic)
        throw validation_error("pass exactly one of -p or --motivic");
      GroupDescriptor a = group_from_json(read_json_file(equiv_a));
      GroupDescriptor b = group_from_json(read_json_file(equiv_b));
      if (equiv_abstract &&
          (!std::holds_alternative<Abstract>(a) || !std::holds_alternative<Abstract>(b)))
        throw validation_error("--abstract requires index or higher table documents");
      Verdict v = equiv_motivic ? motivically_equivalent(a, b)
                                : equivalent_mod_p(a, b, parse_prime(equiv_prime));
      emit(to_json(v));
      return (equiv_strict && v.kind == VerdictKind::Unknown) ? 1 : 0;
    }

    if (*cmd_levi) {
      GroupDescriptor g = group_from_json(read_json_file(levi_path));
      VertexSet theta = tits_index(g).diagram.parse_vertex_set(levi_theta);
      Json factors = Json::array();
      for (const auto& f : levi_descriptor(g, theta)) factors.push_back(to_json(f));
      emit(Json{{"schema", schema_version}, {"factors", std::move(factors)}});
      return 0;
    }

    if (*cmd_check) {
      Motive m = motive_from_json(read_json_file(check_motive));
      Json model_doc = read_json_file(check_model);
      detail::check_schema(model_doc, "extension model");
      ExtensionModel model;
      const Json& images = detail::field(model_doc, "images", "extension model");
      if (!images.is_object())
        throw validation_error("extension model: 'images' must be an object");
      for (const auto& [cls, image] : images.items())
        model.images[cls] = motive_from_json(image);
      UpperMotiveLabel label;
      label.class_id = check_class;
      bool holds = check_calcul(m, model, label, check_shift);
      emit(Json{{"schema", schema_version}, {"holds", holds}});
      return 0;
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no subcommand dispatched");
}
