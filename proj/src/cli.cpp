#include "nimforge/cli.hpp"

#include "nimforge/catalog.hpp"
#include "nimforge/error.hpp"
#include "nimforge/glm.hpp"
#include "nimforge/io.hpp"
#include "nimforge/jl.hpp"
#include "nimforge/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

namespace nimforge {

namespace {

struct RingArgs {
  std::string family;
  std::string group;
  std::string table;
  int p = 0;
  std::string delta;
  bool allow_odd = false;
};

void add_ring_args(CLI::App* cmd, RingArgs& a) {
  cmd->add_option("family", a.family, "jl or glm")->required()->check(CLI::IsMember({"jl", "glm"}));
  cmd->add_option("--group", a.group, "group shorthand such as Z2xZ2");
  cmd->add_option("--table", a.table, "group JSON file");
  cmd->add_option("--p", a.p, "JL parameter p");
  cmd->add_option("--delta", a.delta, "GLM delta as an element of Gamma");
  cmd->add_flag("--allow-odd", a.allow_odd, "accept odd-order Gamma");
}

RingPtr build_ring(const RingArgs& a) {
  if (a.group.empty() == a.table.empty()) throw Error(ErrorKind::BadInput, "give exactly one of --group, --table");
  auto g = std::make_shared<const FiniteGroup>(
      a.table.empty() ? parse_group_shorthand(a.group) : group_from_json(Json::parse(read_file(a.table))));
  if (a.family == "jl") {
    if (a.p == 0) throw Error(ErrorKind::BadInput, "jl needs --p");
    return jl_ring(g, a.p);
  }
  if (a.delta.empty()) throw Error(ErrorKind::BadInput, "glm needs --delta");
  return glm_ring(g, g->parse_element(a.delta), a.allow_odd);
}

Catalog load_catalog(const std::string& path) { return parse_catalog(read_file(path)); }

int cmd_ring(const RingArgs& a, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const RingPtr ring = build_ring(a);
  const AxiomReport report = verify_axioms(*ring);
  const std::string text = ring_to_json(*ring).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  if (report.pass()) {
    err << "axioms: pass\n";
    return kExitOk;
  }
  for (const auto& v : report.violations)
    err << "axioms: " << v.axiom << " fails at (" << v.witness[0] << ", " << v.witness[1] << ", " << v.witness[2]
        << ", " << v.witness[3] << "): " << v.detail << "\n";
  return kExitDisagreement;
}

void write_dots(Catalog& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (auto& e : c.entries) {
    const std::string base = dir + "/class_" + std::to_string(e.class_id);
    write_file(base + ".dot", to_dot(*c.ring, nim_graph(e.rep), "class " + std::to_string(e.class_id)));
    write_file(base + "_orbits.dot",
               to_dot(*c.ring, nim_orbit_graph(e.rep), "class " + std::to_string(e.class_id) + " orbits"));
    e.dot_paths = {base + ".dot", base + "_orbits.dot"};
  }
}

int cmd_classify(const RingArgs& a, int orbits, const std::string& out_path, bool summary, bool reproducible,
                 const std::string& dot_dir, std::ostream& out) {
  const RingPtr ring = build_ring(a);
  Catalog c = a.family == "jl" ? make_catalog(jl_enumerate(ring, orbits), reproducible)
                               : make_catalog(glm_enumerate(ring, orbits), reproducible);
  if (!dot_dir.empty()) write_dots(c, dot_dir);
  const std::string text = dump_catalog(c);
  if (!out_path.empty()) write_file(out_path, text);
  if (summary) {
    for (const auto& [key, n] : class_counts(c))
      out << "orbits " << key.first << ", dim " << key.second << ": " << n << (n == 1 ? " class\n" : " classes\n");
    out << "total: " << c.entries.size() << " classes\n";
  } else if (out_path.empty()) {
    out << text;
  }
  return kExitOk;
}

int cmd_graph(const std::string& path, int entry, bool orbit_graph, const std::string& out_path, std::ostream& out) {
  const Catalog c = load_catalog(path);
  const CatalogEntry& e = find_entry(c, entry);
  const std::string name = "class " + std::to_string(entry) + (orbit_graph ? " orbits" : "");
  const std::string text =
      orbit_graph ? to_dot(*c.ring, nim_orbit_graph(e.rep), name) : to_dot(*c.ring, nim_graph(e.rep), name);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_algebras(const std::string& path, int entry, std::ostream& out) {
  const Catalog c = load_catalog(path);
  const FusionRing& ring = *c.ring;
  for (const auto& e : c.entries) {
    if (entry >= 0 && e.class_id != entry) continue;
    out << "class " << e.class_id << " (dim " << e.dim << ", " << e.orbit_count
        << (e.orbit_count == 1 ? " orbit)\n" : " orbits)\n");
    for (const auto& a : e.algebras) {
      out << "  orbit " << a.orbit << " at " << e.rep.label(a.point) << ": closed form " << to_string(ring, a.closed_form)
          << "; self-loops " << to_string(ring, a.self_loops) << "; " << (a.agree() ? "agree" : "DIFFER") << "\n";
      if (a.aggregate)
        out << "    summed over 2Gamma-orbits: " << to_string(ring, *a.aggregate) << "; "
            << (*a.aggregate == a.self_loops ? "agrees" : "differs") << " with the single-point reading\n";
    }
  }
  if (entry >= 0) find_entry(c, entry);
  return kExitOk;
}

Json verify_report(const Catalog& c, const OracleResult& res, const SearchConfig& cfg, const CrossCheckReport& cc,
                   const std::vector<const CatalogEntry*>& entries) {
  std::map<std::pair<int, std::vector<int>>, std::pair<int, int>> patterns;  // -> (oracle, classifier)
  std::vector<std::pair<int, std::vector<int>>> oracle_patterns;
  for (const auto& rep : res.reps) {
    const auto key = std::make_pair(decompose_orbits(rep).size(), stabilizer_orders(rep));
    ++patterns[key].first;
    oracle_patterns.push_back(key);
  }
  std::vector<std::pair<int, std::vector<int>>> entry_patterns;
  for (const auto* e : entries) {
    const auto key = std::make_pair(e->orbit_count, stabilizer_orders(e->rep));
    ++patterns[key].second;
    entry_patterns.push_back(key);
  }
  Json by = Json::array();
  for (const auto& [key, n] : patterns)
    by.push_back(Json{{"orbit_count", key.first}, {"stabilizer_orders", key.second}, {"oracle", n.first},
                      {"classifier", n.second}});

  Json refs = Json::array();
  for (const auto& r : reference_counts(*c.ring)) {
    auto fits = [&](const std::pair<int, std::vector<int>>& k) {
      return k.first == r.orbit_count && (r.orders.empty() || k.second == r.orders);
    };
    // only patterns whose every member fits under max_dim are comparable
    const int order = c.ring->descriptor().group->order();
    int pattern_dim = order * r.orbit_count;
    if (!r.orders.empty()) {
      pattern_dim = 0;
      for (int o : r.orders) pattern_dim += order / o;
    }
    if (pattern_dim > cfg.max_dim) continue;
    int oracle = 0;
    for (const auto& k : oracle_patterns) oracle += fits(k) ? 1 : 0;
    Json param_classes = Json::object();
    std::map<std::string, std::set<int>> ids;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (fits(entry_patterns[i]))
        for (const auto& [name, list] : entries[i]->classes.items())
          for (const auto& id : list) ids[name].insert(id.get<int>());
    for (const auto& [name, s] : ids) param_classes[name] = s.size();
    std::string verdict = oracle == r.count ? "oracle matches the stated count" : "oracle differs from the stated count";
    for (const auto& [name, s] : ids)
      if (static_cast<int>(s.size()) == oracle) verdict += "; oracle matches the " + name + " relation";
    refs.push_back(Json{{"pattern", r.note},
                        {"orbit_count", r.orbit_count},
                        {"stabilizer_orders", r.orders},
                        {"stated", r.count},
                        {"oracle", oracle},
                        {"parameter_classes", std::move(param_classes)},
                        {"verdict", std::move(verdict)}});
  }

  return Json{{"max_dim", cfg.max_dim},
              {"hints", res.hinted},
              {"complete", res.complete},
              {"entry_bound", res.entry_bound},
              {"oracle", {{"classes", res.reps.size()}, {"solutions", res.solutions}, {"gsets", res.gsets},
                          {"nodes", res.nodes}}},
              {"cross_check", cross_check_to_json(cc)},
              {"by_pattern", std::move(by)},
              {"reference_counts", std::move(refs)},
              {"catalog_keyed_by", c.relations.value("keyed_by", "matrix")}};
}

int cmd_verify(const std::string& path, SearchConfig cfg, const std::string& out_path, bool update,
               std::ostream& out, std::ostream& err) {
  Catalog c = load_catalog(path);
  const OracleResult res = enumerate_all(c.ring, cfg);
  std::vector<NimRep> classifier;
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : c.entries)
    if (e.dim <= cfg.max_dim) {
      classifier.push_back(e.rep);
      entries.push_back(&e);
    }
  const CrossCheckReport cc = cross_check(classifier, res.reps);
  const Json report = verify_report(c, res, cfg, cc, entries);
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  err << "oracle: " << res.reps.size() << " classes at dim <= " << cfg.max_dim << " in " << res.seconds << " s"
      << (res.complete ? "" : " (incomplete)") << "\n";
  if (update) {
    c.cross_check = report;
    write_file(path, dump_catalog(c));
  }
  if (!res.complete) return kExitResourceLimit;
  return cc.complete_agreement() ? kExitOk : kExitDisagreement;
}

int cmd_enumerate(const RingArgs& a, const std::string& ring_path, SearchConfig cfg, std::ostream& out,
                  std::ostream& err) {
  const RingPtr ring = ring_path.empty() ? build_ring(a) : ring_from_json(Json::parse(read_file(ring_path)));
  const OracleResult res = enumerate_all(ring, cfg);
  Json reps = Json::array();
  for (const auto& r : res.reps) reps.push_back(nimrep_to_json(r));
  out << Json{{"ring", ring_to_json(*ring)}, {"max_dim", cfg.max_dim}, {"complete", res.complete},
              {"reps", std::move(reps)}}
             .dump(2)
      << "\n";
  err << "oracle: " << res.reps.size() << " classes in " << res.seconds << " s\n";
  return res.complete ? kExitOk : kExitResourceLimit;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::EntryBoundTooSmall:
    case ErrorKind::OrderTooLarge:
      return kExitResourceLimit;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion ring NIM-rep construction, classification and verification", "nimforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(NIMFORGE_VERSION));

  RingArgs ring_args;
  std::string out_path;
  auto* ring_cmd = app.add_subcommand("ring", "build a ring and check its axioms");
  add_ring_args(ring_cmd, ring_args);
  ring_cmd->add_option("--out", out_path, "write the ring JSON here");

  int orbits = 0;
  bool summary = false, reproducible = false;
  std::string dot_dir;
  auto* classify = app.add_subcommand("classify", "enumerate and classify irreducible NIM-reps");
  add_ring_args(classify, ring_args);
  classify->add_option("--orbits", orbits, "restrict to this many orbits of the invertibles");
  classify->add_option("--out", out_path, "write the catalog here");
  classify->add_flag("--summary", summary, "print class counts by (orbits, dim)");
  classify->add_flag("--reproducible", reproducible, "zero the timestamp");
  classify->add_option("--dot-dir", dot_dir, "write DOT graphs for every entry");

  std::string catalog_path;
  int entry = -1;
  bool orbit_graph = false;
  auto* graph = app.add_subcommand("graph", "DOT export of one catalog entry");
  graph->add_option("--catalog", catalog_path)->required();
  graph->add_option("--entry", entry)->required();
  graph->add_flag("--orbit-graph", orbit_graph, "contract the invertibles' edges");
  graph->add_option("--out", out_path);

  SearchConfig cfg;
  bool no_hints = false, hints = false, reducible = false, update = false;
  double budget = 0;
  Integer entry_bound = 0;
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--max-dim", cfg.max_dim, "largest module dimension")->required();
    cmd->add_flag("--no-hints", no_hints, "ignore the ring family");
    cmd->add_flag("--hints", hints, "use orbit-support hints for JL/GLM rings");
    cmd->add_option("--time-budget", budget, "seconds");
    cmd->add_option("--entry-bound", entry_bound, "cap on matrix entries");
    cmd->add_flag("--reverse", cfg.reverse_order, "search in reverse order");
    cmd->add_option("--threads", cfg.threads);
  };
  auto* verify = app.add_subcommand("verify", "cross-check a catalog against the oracle");
  verify->add_option("--catalog", catalog_path)->required();
  verify->add_option("--out", out_path, "write the report here");
  verify->add_flag("--update", update, "store the report in the catalog");
  add_search(verify);

  auto* algebras = app.add_subcommand("algebras", "closed-form and self-loop algebra objects");
  algebras->add_option("--catalog", catalog_path)->required();
  algebras->add_option("--entry", entry);

  std::string ring_path;
  auto* enumerate = app.add_subcommand("enumerate", "oracle enumeration for any ring");
  enumerate->add_option("family", ring_args.family, "jl or glm")->check(CLI::IsMember({"jl", "glm"}));
  enumerate->add_option("--group", ring_args.group);
  enumerate->add_option("--table", ring_args.table);
  enumerate->add_option("--p", ring_args.p);
  enumerate->add_option("--delta", ring_args.delta);
  enumerate->add_option("--ring", ring_path, "ring JSON file");
  enumerate->add_flag("--reducible", reducible, "keep reducible reps");
  add_search(enumerate);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    cfg.use_hints = hints || (!no_hints && cfg.max_dim > 6);
    if (budget > 0) cfg.time_budget_seconds = budget;
    if (entry_bound > 0) cfg.entry_bound = entry_bound;
    cfg.require_irreducible = !reducible;
    if (*ring_cmd) return cmd_ring(ring_args, out_path, out, err);
    if (*classify) return cmd_classify(ring_args, orbits, out_path, summary, reproducible, dot_dir, out);
    if (*graph) return cmd_graph(catalog_path, entry, orbit_graph, out_path, out);
    if (*verify) return cmd_verify(catalog_path, cfg, out_path, update, out, err);
    if (*algebras) return cmd_algebras(catalog_path, entry, out);
    if (*enumerate) return cmd_enumerate(ring_args, ring_path, cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err << "error: BadInput: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: BadInput: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace nimforge
