#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/nimrep.hpp"

#include <optional>
#include <vector>

namespace nimforge {

struct SearchConfig {
  int max_dim = 4;
  std::optional<Integer> entry_bound;  ///< expected cap; a rep exceeding it is an error
  bool require_irreducible = true;
  std::optional<double> time_budget_seconds;
  /// For JL/GLM rings: every column of a non-invertible matrix is supported
  /// on a single orbit of the invertibles. Ignored for other rings.
  bool use_hints = false;
  bool reverse_order = false;  ///< search G-sets and values in reverse
  int threads = 0;             ///< 0: NIMFORGE_THREADS, else hardware concurrency
};

struct OracleResult {
  std::vector<NimRep> reps;  ///< one per isomorphism class, sorted by (dim, matrices)
  bool complete = true;
  bool hinted = false;
  Integer entry_bound = 0;
  long long gsets = 0;
  long long solutions = 0;
  long long nodes = 0;
  double seconds = 0;
};

/// Every NIM-rep of dimension <= cfg.max_dim up to isomorphism. Throws
/// EntryBoundTooSmall when a reported rep has an entry above cfg.entry_bound.
OracleResult enumerate_all(const RingPtr& ring, const SearchConfig& cfg);

/// Actions of the invertibles on d points up to isomorphism, as lists of
/// subgroups of invertible_group(ring), one per orbit.
std::vector<std::vector<Subgroup>> enumerate_gsets(const FusionRing& ring, int d);

struct CrossCheckReport {
  std::vector<std::pair<int, int>> matched;               ///< (classifier, oracle)
  std::vector<int> only_classifier;
  std::vector<int> only_oracle;
  std::vector<std::pair<int, int>> duplicate_classifier;  ///< (duplicate, earlier entry)
  int classifier_count = 0;
  int oracle_count = 0;

  bool complete_agreement() const {
    return only_classifier.empty() && only_oracle.empty() && duplicate_classifier.empty();
  }
};

CrossCheckReport cross_check(const std::vector<NimRep>& classifier, const std::vector<NimRep>& oracle);

/// Worker count from NIMFORGE_THREADS, else hardware concurrency (at least 1).
int default_threads();

}  // namespace nimforge
