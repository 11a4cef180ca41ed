#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nimforge {

/// A validated NIM-rep: one non-negative integer matrix per ring basis
/// element, acting on column vectors. matrix(b)(t, s) is the multiplicity of
/// module basis element t in b acting on s.
class NimRep {
 public:
  /// Validates everything (see nimrep_from_matrices). Labels default to
  /// "m0", "m1", ...
  NimRep(RingPtr ring, std::vector<IntMatrix> matrices, std::vector<std::string> labels = {});

  const FusionRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int dim() const { return dim_; }
  const IntMatrix& matrix(int b) const { return matrices_[static_cast<std::size_t>(b)]; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Image list of the permutation matrix of invertible basis element g.
  std::vector<int> permutation_of(int g) const;

 private:
  RingPtr ring_;
  int dim_ = 0;
  std::vector<IntMatrix> matrices_;
  std::vector<std::string> labels_;
};

/// Checks unit, homomorphism, rigidity and that invertibles act by
/// permutations. Throws UnitNotIdentity, NotHomomorphism, NotRigid,
/// InvertibleNotPermutation, NegativeEntry, DimensionMismatch.
NimRep nimrep_from_matrices(RingPtr ring, std::vector<IntMatrix> matrices,
                            std::vector<std::string> labels = {});

/// The ring acting on itself: matrix(i) = left multiplication by b_i.
NimRep regular_nimrep(RingPtr ring);

/// Block-diagonal sum.
NimRep direct_sum(const NimRep& a, const NimRep& b);

/// Relabels module basis element i as perm[i].
NimRep relabel(const NimRep& m, const std::vector<int>& perm);

bool is_irreducible(const NimRep& m);

/// Connected components of the undirected NIM-graph, each sorted, ordered by least member.
std::vector<std::vector<int>> components(const NimRep& m);

struct OrbitDecomposition {
  std::vector<int> subgroup;                  ///< ring basis indices of the acting invertibles
  std::vector<std::vector<int>> orbits;       ///< sorted, ordered by least member
  std::vector<std::vector<int>> stabilizers;  ///< ring basis indices fixing the least member
  std::vector<int> orbit_of;

  int size() const { return static_cast<int>(orbits.size()); }
};

/// Orbits of the module basis under a subgroup of the ring's invertibles,
/// given by ring basis indices. Throws NotASubgroup.
OrbitDecomposition decompose_orbits(const NimRep& m, const std::vector<int>& subgroup);

/// Orbits under all invertibles of the ring.
OrbitDecomposition decompose_orbits(const NimRep& m);

/// For each outer orbit, the indices of the inner orbits it contains. The
/// inner subgroup must be contained in the outer one.
std::vector<std::vector<int>> nest_orbits(const OrbitDecomposition& outer, const OrbitDecomposition& inner);

struct NimEdge {
  int source = 0;
  int target = 0;
  int label = 0;  ///< ring basis index
  Integer multiplicity = 0;
};

struct NimGraph {
  std::vector<std::string> nodes;
  std::vector<NimEdge> edges;  ///< sorted by (label, source, target)
};

/// Orbit graph edges carry, as multiplicity, the number of edges with that
/// label leaving any single node of the source orbit into the target orbit.
struct NimOrbitGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<int>> orbits;
  std::vector<NimEdge> edges;  ///< one per (source, target, label), sorted by (label, source, target)
};

NimGraph nim_graph(const NimRep& m);

/// Contracts the edges of the given invertibles; only non-invertible labels
/// remain. An empty subgroup gives the NIM-graph without group edges.
NimOrbitGraph nim_orbit_graph(const NimRep& m, const std::vector<int>& subgroup);
NimOrbitGraph nim_orbit_graph(const NimRep& m);

/// A basis element reaching every basis element through single basis-element
/// actions, if one exists (the least such index).
std::optional<int> is_admissible(const NimRep& m);

struct AlgebraObject {
  std::vector<Integer> multiplicity;  ///< indexed by ring basis

  friend bool operator==(const AlgebraObject&, const AlgebraObject&) = default;
};

/// Self-loop reading: multiplicity of b is matrix(b)(idx, idx). Throws IndexOutOfRange.
AlgebraObject algebra_object_at(const NimRep& m, int idx);

/// "0 + (1,0) + X_1 + 2 X_2"
std::string to_string(const FusionRing& ring, const AlgebraObject& a);

/// Block coefficients c(target block, source block) for label b, read from
/// the first element of each source block. Throws ConditionViolated when the
/// matrix is not constant on the blocks.
IntMatrix block_coefficients(const NimRep& m, int b, const std::vector<std::vector<int>>& blocks);

}  // namespace nimforge
