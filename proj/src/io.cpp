#include "nimforge/io.hpp"

#include "nimforge/error.hpp"

#include <fstream>
#include <sstream>

namespace nimforge {

Json group_to_json(const FiniteGroup& g) {
  if (!g.factors().empty()) return Json{{"abelian", g.factors()}};
  return Json{{"order", g.order()}, {"table", g.table()}, {"name", g.name()}};
}

FiniteGroup group_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_group_shorthand(j.get<std::string>());
    if (j.contains("abelian")) return abelian_group(j.at("abelian").get<std::vector<int>>());
    return group_from_table(j.at("table").get<FiniteGroup::Table>(), j.value("name", std::string{}));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("group JSON: ") + e.what());
  }
}

Json ring_to_json(const FusionRing& r) {
  Json j;
  const RingDescriptor& d = r.descriptor();
  switch (d.family) {
    case RingFamily::JordanLarson:
      j["family"] = "jl";
      j["group"] = group_to_json(*d.group);
      j["p"] = d.p;
      break;
    case RingFamily::Glm: {
      j["family"] = "glm";
      j["group"] = group_to_json(*d.group);
      const Quotient q = quotient(*d.group, doubled_subgroup(*d.group));
      j["delta"] = d.group->element_label(q.lift[d.delta]);
      if (d.outside_scope) j["outside_scope"] = true;
      break;
    }
    case RingFamily::Custom:
      j["family"] = "custom";
      break;
  }
  j["basis"] = r.labels();
  j["unit"] = r.unit();
  j["dual"] = r.duals();
  j["invertible"] = r.invertibles();
  Json n = Json::array();
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      for (const auto& [k, v] : r.terms(a, b)) n.push_back({a, b, k, v});
  j["N"] = std::move(n);
  return j;
}

RingPtr ring_from_json(const Json& j) {
  try {
    const std::string family = j.value("family", std::string("custom"));
    RingPtr ring;
    if (family == "jl") {
      ring = jl_ring(std::make_shared<const FiniteGroup>(group_from_json(j.at("group"))), j.at("p").get<int>());
    } else if (family == "glm") {
      auto g = std::make_shared<const FiniteGroup>(group_from_json(j.at("group")));
      const Json& delta = j.at("delta");
      const int d = delta.is_number() ? delta.get<int>() : g->parse_element(delta.get<std::string>());
      ring = glm_ring(g, d, j.value("outside_scope", false));
    } else if (family != "custom") {
      throw Error(ErrorKind::BadInput, "unknown ring family '" + family + "'");
    }
    if (ring && !j.contains("N")) return ring;

    const auto labels = j.at("basis").get<std::vector<std::string>>();
    const auto n = labels.size();
    std::vector<Integer> coeff(n * n * n, 0);
    for (const auto& t : j.at("N")) {
      const auto a = t.at(0).get<std::size_t>(), b = t.at(1).get<std::size_t>(), k = t.at(2).get<std::size_t>();
      if (a >= n || b >= n || k >= n) throw Error(ErrorKind::IndexOutOfRange, "structure constant index");
      coeff[(a * n + b) * n + k] = t.at(3).get<Integer>();
    }
    if (ring) {
      if (ring->coefficients() != coeff || ring->labels() != labels)
        throw Error(ErrorKind::BadInput, "\"N\" does not match the " + family + " ring built from its parameters");
      return ring;
    }
    const int unit = j.value("unit", 0);
    const auto dual = j.at("dual").get<std::vector<int>>();
    std::vector<int> invertible;
    if (j.contains("invertible")) {
      invertible = j.at("invertible").get<std::vector<int>>();
    } else {
      invertible.push_back(unit);
      for (int i = 0; i < static_cast<int>(n); ++i) {
        if (i == unit || dual[i] < 0 || dual[i] >= static_cast<int>(n)) continue;
        int mass = 0;
        bool only_unit = true;
        for (std::size_t k = 0; k < n; ++k) {
          const Integer c = coeff[(i * n + static_cast<std::size_t>(dual[i])) * n + k];
          mass += static_cast<int>(c);
          if (c != 0 && static_cast<int>(k) != unit) only_unit = false;
        }
        if (only_unit && mass == 1) invertible.push_back(i);
      }
    }
    return std::make_shared<const FusionRing>(labels, unit, dual, std::move(coeff), std::move(invertible));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("ring JSON: ") + e.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j.at(r).size()) != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<Integer>();
  }
  return m;
}

Json nimrep_to_json(const NimRep& m) {
  Json mats = Json::object();
  for (int b = 0; b < m.ring().size(); ++b) mats[m.ring().label(b)] = matrix_to_json(m.matrix(b));
  return Json{{"dim", m.dim()}, {"labels", m.labels()}, {"matrices", std::move(mats)}};
}

NimRep nimrep_from_json(const RingPtr& ring, const Json& j) {
  try {
    std::vector<IntMatrix> mats;
    const Json& src = j.at("matrices");
    for (int b = 0; b < ring->size(); ++b) mats.push_back(matrix_from_json(src.at(ring->label(b))));
    return NimRep(ring, std::move(mats), j.value("labels", std::vector<std::string>{}));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("NIM-rep JSON: ") + e.what());
  }
}

Json algebra_to_json(const FusionRing& ring, const AlgebraObject& a) {
  Json j = Json::object();
  for (std::size_t i = 0; i < a.multiplicity.size(); ++i)
    if (a.multiplicity[i] != 0) j[ring.label(static_cast<int>(i))] = a.multiplicity[i];
  return j;
}

AlgebraObject algebra_from_json(const FusionRing& ring, const Json& j) {
  AlgebraObject a;
  a.multiplicity.assign(static_cast<std::size_t>(ring.size()), 0);
  for (const auto& [label, v] : j.items()) a.multiplicity[ring.index_of(label)] = v.get<Integer>();
  return a;
}

Json subgroup_to_json(const FiniteGroup& g, const Subgroup& h) {
  Json j = Json::array();
  for (int x : h.members) j.push_back(g.element_label(x));
  return j;
}

Json jl_params_to_json(const JlParams& p) {
  Json subs = Json::array();
  Json sizes = Json::array();
  for (const auto& h : p.subgroups) {
    subs.push_back(subgroup_to_json(*p.group, h));
    sizes.push_back(h.size());
  }
  return Json{{"p", p.p}, {"m", p.m}, {"subgroups", std::move(subs)}, {"subgroup_orders", std::move(sizes)}};
}

Json glm_params_to_json(const GlmParams& p) {
  const FiniteGroup& g = *p.gamma;
  const SigmaAction sa = sigma_action(g, p.delta, p.subgroups, true);
  Json subs = Json::array();
  for (const auto& h : p.subgroups) subs.push_back(subgroup_to_json(g, h));
  std::vector<CosetSpace> spaces;
  std::vector<int> offset{0};
  for (const auto& h : p.subgroups) {
    spaces.push_back(coset_space(g, h));
    offset.push_back(offset.back() + spaces.back().size());
  }
  Json pairs = Json::array();
  std::vector<int> within(p.subgroups.size(), 0);
  for (int i = 0; i < sa.size(); ++i) {
    const int j = sa.gamma_orbit[i];
    Json cosets = Json::array();
    for (int s : sa.members[i]) cosets.push_back(g.element_label(spaces[j].cosets[s - offset[j]].front()));
    pairs.push_back(Json{{"pair", {++within[j], j + 1}}, {"cosets", std::move(cosets)}});
  }
  return Json{{"delta", g.element_label(sa.quotient.lift[sa.delta])},
              {"orbit_count", p.orbit_count},
              {"subgroups", std::move(subs)},
              {"tau0", p.tau0.to_cycles()},
              {"orbit_pairs", std::move(pairs)}};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FusionRing& ring, const NimGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const auto& n : g.nodes) os << "  " << quoted(n) << ";\n";
  for (const auto& e : g.edges) {
    if (e.label == ring.unit()) continue;
    std::string label = ring.label(e.label);
    if (e.multiplicity != 1) label += " (×" + std::to_string(e.multiplicity) + ")";
    os << "  " << quoted(g.nodes[e.source]) << " -> " << quoted(g.nodes[e.target]) << " [label=" << quoted(label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const FusionRing& ring, const NimOrbitGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const auto& n : g.nodes) os << "  " << quoted(n) << ";\n";
  for (const auto& e : g.edges)
    os << "  " << quoted(g.nodes[e.source]) << " -> " << quoted(g.nodes[e.target])
       << " [label=" << quoted(ring.label(e.label)) << ", multiplicity=" << e.multiplicity << "];\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write " + path);
  out << text;
}

}  // namespace nimforge
