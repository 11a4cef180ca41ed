#pragma once

#include "nimforge/glm.hpp"
#include "nimforge/io.hpp"
#include "nimforge/jl.hpp"
#include "nimforge/nimrep.hpp"
#include "nimforge/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nimforge {

struct AlgebraRecord {
  int orbit = 1;  ///< 1-based orbit of the invertibles
  int point = 0;  ///< module basis index the self-loops were read at
  AlgebraObject closed_form;
  AlgebraObject self_loops;
  std::optional<AlgebraObject> aggregate;  ///< GLM one orbit: summed over 2Gamma-orbits

  bool agree() const { return closed_form == self_loops; }
};

struct CatalogEntry {
  int class_id = 0;
  Json params;
  int dim = 0;
  int orbit_count = 0;
  Json classes;  ///< class ids under the parameter-level relations
  NimRep rep;
  std::vector<AlgebraRecord> algebras;
  std::optional<int> admissible_witness;
  std::vector<std::string> dot_paths;
};

struct Catalog {
  std::string tool = "nimforge";
  std::string version = NIMFORGE_VERSION;
  std::string generated;
  RingPtr ring;
  std::vector<CatalogEntry> entries;
  Json relations;
  Json cross_check;  ///< null until verified
};

/// UTC ISO-8601 time, or the epoch when `reproducible`.
std::string timestamp(bool reproducible);

Catalog make_catalog(const JlCatalog& cat, bool reproducible = false);
Catalog make_catalog(const GlmCatalog& cat, bool reproducible = false);

Json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);

/// Pretty-printed JSON with a trailing newline.
std::string dump_catalog(const Catalog& c);
Catalog parse_catalog(const std::string& text);

/// Throws UnknownEntry.
const CatalogEntry& find_entry(const Catalog& c, int class_id);

/// Class counts keyed by (orbit count, dim), in ascending order.
std::vector<std::pair<std::pair<int, int>, int>> class_counts(const Catalog& c);

Json cross_check_to_json(const CrossCheckReport& r);

/// Sorted stabilizer orders of the orbits of the invertibles.
std::vector<int> stabilizer_orders(const NimRep& rep);

/// Class counts stated for a pattern of a known ring; `orders` empty means
/// any stabilizer pattern with that orbit count.
struct ReferenceCount {
  int orbit_count = 0;
  std::vector<int> orders;
  int count = 0;
  std::string note;
};

/// Reference counts for the worked examples over Z2xZ2; empty for other rings.
std::vector<ReferenceCount> reference_counts(const FusionRing& ring);

}  // namespace nimforge
