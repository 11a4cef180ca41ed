#include "nimforge/catalog.hpp"

#include "nimforge/error.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>

namespace nimforge {

std::string timestamp(bool reproducible) {
  if (reproducible) return "1970-01-01T00:00:00Z";
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

namespace {

std::vector<AlgebraRecord> jl_records(const FusionRing& ring, const JlParams& params, const NimRep& rep) {
  std::vector<AlgebraRecord> out;
  const auto closed = jl_algebra_objects(ring, params);
  const auto blocks = jl_orbit_blocks(params);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int point = blocks[i].front();
    out.push_back({static_cast<int>(i) + 1, point, closed[i], algebra_object_at(rep, point), std::nullopt});
  }
  return out;
}

std::vector<AlgebraRecord> glm_records(const FusionRing& ring, const GlmParams& params, const NimRep& rep) {
  std::vector<AlgebraRecord> out;
  const GlmAlgebra alg = glm_algebra_objects(ring, params);
  int point = 0;
  for (int j = 0; j < params.orbit_count; ++j) {
    out.push_back({j + 1, point, alg.closed_form[j], algebra_object_at(rep, point),
                   j == 0 ? alg.aggregate : std::nullopt});
    point += params.gamma->order() / params.subgroups[j].size();
  }
  return out;
}

Json algebra_record_to_json(const FusionRing& ring, const NimRep& rep, const AlgebraRecord& a) {
  Json j{{"orbit", a.orbit},
         {"point", rep.label(a.point)},
         {"closed_form", algebra_to_json(ring, a.closed_form)},
         {"closed_form_text", to_string(ring, a.closed_form)},
         {"self_loops", algebra_to_json(ring, a.self_loops)},
         {"agree", a.agree()}};
  if (a.aggregate) {
    j["aggregate"] = algebra_to_json(ring, *a.aggregate);
    j["aggregate_agrees"] = *a.aggregate == a.self_loops;
  }
  return j;
}

int label_index(const NimRep& rep, const std::string& label) {
  const auto& l = rep.labels();
  const auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) throw Error(ErrorKind::BadInput, "unknown module label " + label);
  return static_cast<int>(it - l.begin());
}

}  // namespace

std::vector<int> stabilizer_orders(const NimRep& rep) {
  std::vector<int> out;
  for (const auto& s : decompose_orbits(rep).stabilizers) out.push_back(static_cast<int>(s.size()));
  std::sort(out.begin(), out.end());
  return out;
}

Catalog make_catalog(const JlCatalog& cat, bool reproducible) {
  Catalog c;
  c.generated = timestamp(reproducible);
  c.ring = cat.ring;
  for (const auto& e : cat.entries) {
    c.entries.push_back({e.class_id, jl_params_to_json(e.params), e.rep.dim(), e.params.m,
                         Json{{"tuple", e.tuple_class_ids}}, e.rep, jl_records(*cat.ring, e.params, e.rep),
                         is_admissible(e.rep), {}});
  }
  Json mismatches = Json::array();
  for (const auto& m : cat.mismatches)
    mismatches.push_back(Json{{"first", jl_params_to_json(m.first)},
                              {"second", jl_params_to_json(m.second)},
                              {"tuple_same", m.tuple_same},
                              {"matrix_same", m.matrix_same}});
  c.relations = Json{{"keyed_by", "matrix"},
                     {"tuple_relation", "subgroup tuples equal up to reordering and conjugacy"},
                     {"matrix_classes", cat.entries.size()},
                     {"tuple_classes", cat.tuple_class_count},
                     {"tuples_checked", cat.tuples_checked},
                     {"mismatches", std::move(mismatches)}};
  return c;
}

Catalog make_catalog(const GlmCatalog& cat, bool reproducible) {
  Catalog c;
  c.generated = timestamp(reproducible);
  c.ring = cat.ring;
  for (const auto& e : cat.entries) {
    c.entries.push_back({e.class_id, glm_params_to_json(e.params), e.rep.dim(), e.params.orbit_count,
                         Json{{"equivariant", e.equivariant_class_ids}, {"reorder", e.reorder_class_ids}}, e.rep,
                         glm_records(*cat.ring, e.params, e.rep), is_admissible(e.rep), {}});
  }
  Json mismatches = Json::array();
  for (const auto& m : cat.mismatches)
    mismatches.push_back(Json{{"reading", to_string(m.reading)},
                              {"first", glm_params_to_json(m.first)},
                              {"second", glm_params_to_json(m.second)},
                              {"reading_same", m.reading_same},
                              {"matrix_same", m.matrix_same}});
  c.relations = Json{{"keyed_by", "matrix"},
                     {"matrix_classes", cat.entries.size()},
                     {"equivariant_classes", cat.equivariant_class_count},
                     {"reorder_classes", cat.reorder_class_count},
                     {"params_checked", cat.params_checked},
                     {"mismatches", std::move(mismatches)}};
  return c;
}

Json catalog_to_json(const Catalog& c) {
  const FusionRing& ring = *c.ring;
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json algebras = Json::array();
    for (const auto& a : e.algebras) algebras.push_back(algebra_record_to_json(ring, e.rep, a));
    Json j{{"class_id", e.class_id},
           {"params", e.params},
           {"dim", e.dim},
           {"orbit_count", e.orbit_count},
           {"classes", e.classes},
           {"labels", e.rep.labels()},
           {"matrices", nimrep_to_json(e.rep).at("matrices")},
           {"algebra_objects", std::move(algebras)},
           {"admissible", e.admissible_witness ? Json(e.rep.label(*e.admissible_witness)) : Json(nullptr)},
           {"dot_paths", e.dot_paths}};
    entries.push_back(std::move(j));
  }
  return Json{{"tool", c.tool},         {"version", c.version},       {"generated", c.generated},
              {"ring", ring_to_json(ring)}, {"entries", std::move(entries)}, {"relation_report", c.relations},
              {"cross_check", c.cross_check}};
}

Catalog catalog_from_json(const Json& j) {
  try {
    Catalog c;
    c.tool = j.at("tool").get<std::string>();
    c.version = j.at("version").get<std::string>();
    c.generated = j.at("generated").get<std::string>();
    c.ring = ring_from_json(j.at("ring"));
    const FusionRing& ring = *c.ring;
    for (const auto& e : j.at("entries")) {
      NimRep rep = nimrep_from_json(c.ring, Json{{"labels", e.at("labels")}, {"matrices", e.at("matrices")}});
      std::vector<AlgebraRecord> algebras;
      for (const auto& a : e.at("algebra_objects")) {
        AlgebraRecord r{a.at("orbit").get<int>(), label_index(rep, a.at("point").get<std::string>()),
                        algebra_from_json(ring, a.at("closed_form")), algebra_from_json(ring, a.at("self_loops")),
                        std::nullopt};
        if (a.contains("aggregate")) r.aggregate = algebra_from_json(ring, a.at("aggregate"));
        algebras.push_back(std::move(r));
      }
      std::optional<int> witness;
      if (!e.at("admissible").is_null()) witness = label_index(rep, e.at("admissible").get<std::string>());
      const int dim = e.at("dim").get<int>();
      if (dim != rep.dim()) throw Error(ErrorKind::DimensionMismatch, "entry dim does not match its matrices");
      c.entries.push_back({e.at("class_id").get<int>(), e.at("params"), dim, e.at("orbit_count").get<int>(),
                           e.at("classes"), std::move(rep), std::move(algebras), witness,
                           e.at("dot_paths").get<std::vector<std::string>>()});
    }
    c.relations = j.at("relation_report");
    c.cross_check = j.value("cross_check", Json(nullptr));
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("catalog JSON: ") + e.what());
  }
}

std::string dump_catalog(const Catalog& c) { return catalog_to_json(c).dump(2) + "\n"; }

Catalog parse_catalog(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("catalog is not JSON: ") + e.what());
  }
  return catalog_from_json(j);
}

const CatalogEntry& find_entry(const Catalog& c, int class_id) {
  for (const auto& e : c.entries)
    if (e.class_id == class_id) return e;
  throw Error(ErrorKind::UnknownEntry, "no entry with class id " + std::to_string(class_id));
}

std::vector<std::pair<std::pair<int, int>, int>> class_counts(const Catalog& c) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& e : c.entries) ++counts[{e.orbit_count, e.dim}];
  return {counts.begin(), counts.end()};
}

Json cross_check_to_json(const CrossCheckReport& r) {
  Json matched = Json::array();
  for (const auto& [a, b] : r.matched) matched.push_back({a, b});
  Json dups = Json::array();
  for (const auto& [a, b] : r.duplicate_classifier) dups.push_back({a, b});
  return Json{{"matched", std::move(matched)},
              {"only_classifier", r.only_classifier},
              {"only_oracle", r.only_oracle},
              {"duplicate_classifier", std::move(dups)},
              {"counts", {{"classifier", r.classifier_count}, {"oracle", r.oracle_count}}},
              {"complete_agreement", r.complete_agreement()}};
}

std::vector<ReferenceCount> reference_counts(const FusionRing& ring) {
  const RingDescriptor& d = ring.descriptor();
  if (!d.group || d.group->factors() != std::vector<int>{2, 2}) return {};
  if (d.family == RingFamily::JordanLarson && d.p == 3)
    return {{1, {}, 4, "one orbit"},
            {3, {1, 4, 4}, 1, "three orbits, stabilizer orders 1, 4, 4"},
            {3, {2, 2, 2}, 8, "three orbits, all stabilizers of order 2"},
            {3, {4, 4, 4}, 1, "three orbits, all stabilizers of order 4"},
            {3, {}, 10, "three orbits"}};
  if (d.family == RingFamily::Glm && d.delta == 0)
    return {{1, {4}, 1, "one orbit, H = Gamma"},
            {1, {2}, 6, "one orbit, |H| = 2"},
            {1, {1}, 4, "one orbit, H trivial"},
            {1, {}, 11, "one orbit"},
            {2, {4, 4}, 1, "two orbits, H_1 = H_2 = Gamma"},
            {2, {2, 2}, 6, "two orbits, |H_1| = |H_2| = 2"},
            {2, {1, 1}, 4, "two orbits, both trivial"},
            {2, {}, 11, "two orbits"}};
  if (d.family == RingFamily::Glm) return {{1, {2}, 2, "one orbit, |H| = 2"}};
  return {};
}

}  // namespace nimforge
