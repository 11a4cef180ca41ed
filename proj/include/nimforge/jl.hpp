#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/group.hpp"
#include "nimforge/nimrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nimforge {

/// An m-orbit NIM-rep over R_{p,G}: orbit i is G/H_i, and X_1 sends orbit i to orbit i+1 (mod m).
struct JlParams {
  GroupPtr group;
  int p = 0;
  int m = 0;
  std::vector<Subgroup> subgroups;
};

/// Description of the first failed condition, or nullopt.
std::optional<std::string> jl_violation(const JlParams& params);

/// Throws ConditionViolated naming the offending (i, k).
void jl_check(const JlParams& params);

/// Module basis: cosets of H_1, then of H_2, ...; labels "m<i>_<least member>".
/// `ring` must be jl_ring(params.group, params.p).
NimRep jl_build(const RingPtr& ring, const JlParams& params);

/// Module basis indices of each orbit, in orbit order.
std::vector<std::vector<int>> jl_orbit_blocks(const JlParams& params);

/// Coefficient matrix by orbit: c(i, j) = (X_k acting on orbit i, orbit j).
IntMatrix jl_coefficients(const NimRep& rep, const JlParams& params, int k);

/// Exists tau in S_m with H_i conjugate to H'_tau(i).
bool jl_same_class(const JlParams& a, const JlParams& b);

/// Closed-form algebra object of each orbit.
std::vector<AlgebraObject> jl_algebra_objects(const FusionRing& ring, const JlParams& params);

struct JlEntry {
  JlParams params;
  NimRep rep;
  int class_id = 0;          ///< matrix-level isomorphism class
  int tuple_class_id = 0;  ///< class under jl_same_class of the first tuple seen
  std::vector<int> tuple_class_ids;  ///< every tuple class landing here, sorted
};

/// Two tuples on which the tuple-level and matrix-level relations disagree.
struct JlMismatch {
  JlParams first;
  JlParams second;
  bool tuple_same = false;
  bool matrix_same = false;
};

struct JlCatalog {
  RingPtr ring;
  std::vector<JlEntry> entries;  ///< one per matrix-level class, canonical order
  int tuples_checked = 0;
  int tuple_class_count = 0;
  std::vector<JlMismatch> mismatches;
};

/// All m | p and all valid subgroup tuples, merged by matrix-level isomorphism.
/// `orbit_filter` > 0 restricts to that m.
JlCatalog jl_enumerate(const RingPtr& ring, int orbit_filter = 0);

}  // namespace nimforge
