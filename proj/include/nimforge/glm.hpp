#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/group.hpp"
#include "nimforge/nimrep.hpp"
#include "nimforge/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nimforge {

/// The Gamma/2Gamma action on 2Gamma-orbits of the Gamma-set
/// Gamma/H_1 (+ Gamma/H_2). Indices run over the 2Gamma-orbits of the first
/// Gamma-orbit, then of the second, each by least coset representative.
struct SigmaAction {
  Quotient quotient;                      ///< Gamma/2Gamma
  int delta = 0;                          ///< quotient index
  std::vector<int> gamma_orbit;           ///< 2Gamma-orbit index -> Gamma-orbit (0 or 1)
  std::vector<std::vector<int>> members;  ///< 2Gamma-orbit index -> module basis indices
  std::vector<Permutation> sigma;         ///< per quotient element
  std::vector<bool> delta_in_hbar;        ///< per Gamma-orbit: delta in H_i + 2Gamma

  int size() const { return static_cast<int>(members.size()); }
  const Permutation& sigma_delta() const { return sigma[static_cast<std::size_t>(delta)]; }
};

/// `delta` is an element of Gamma. Throws NotAbelian, OddOrder.
SigmaAction sigma_action(const FiniteGroup& gamma, int delta, const std::vector<Subgroup>& subgroups,
                         bool allow_odd = false);

/// All tau0 commuting with every sigma with tau0^2 = sigma_delta; with two
/// Gamma-orbits tau0 must also swap them. Sorted by image list.
std::vector<Permutation> enumerate_tau0(const SigmaAction& sigma);

struct GlmParams {
  GroupPtr gamma;
  int delta = 0;  ///< element of Gamma
  int orbit_count = 1;
  std::vector<Subgroup> subgroups;
  Permutation tau0;
};

std::optional<std::string> glm_violation(const GlmParams& params);

/// Throws ConditionViolated with the failed clause.
void glm_check(const GlmParams& params);

/// Coefficient of every nonzero block of the X matrices.
Integer glm_coefficient(const GlmParams& params);

/// Module basis: cosets of H (or H_1 then H_2). Labels "m<gamma orbit>_<least member>".
NimRep glm_build(const RingPtr& ring, const GlmParams& params);

enum class Reading {
  Equivariant,   ///< all Gamma-set isomorphisms
  OrbitReorder,  ///< Gamma-orbit reordering only
};

const char* to_string(Reading r);

bool glm_same_class(const GlmParams& a, const GlmParams& b, Reading reading = Reading::Equivariant);

struct GlmAlgebra {
  /// Per Gamma-orbit, read at a single basis element. For one orbit this is
  /// H plus c X_g for each g whose tau0 sigma_g fixes the 2Gamma-orbits.
  std::vector<AlgebraObject> closed_form;
  /// One orbit: the formula summed over all 2Gamma-orbit indices.
  std::optional<AlgebraObject> aggregate;
};

GlmAlgebra glm_algebra_objects(const FusionRing& ring, const GlmParams& params);

/// First failure of the orbit-pair mass and cross-orbit equations on a built rep, if any.
std::optional<std::string> glm_equation_violation(const NimRep& rep, const GlmParams& params);

struct GlmEntry {
  GlmParams params;
  NimRep rep;
  int class_id = 0;              ///< matrix-level isomorphism class
  int equivariant_class_id = 0;  ///< glm_same_class, Reading::Equivariant
  int reorder_class_id = 0;      ///< glm_same_class, Reading::OrbitReorder
  std::vector<int> equivariant_class_ids;  ///< every class landing here, sorted
  std::vector<int> reorder_class_ids;
};

struct GlmMismatch {
  GlmParams first;
  GlmParams second;
  Reading reading = Reading::Equivariant;
  bool reading_same = false;
  bool matrix_same = false;
};

struct GlmCatalog {
  RingPtr ring;
  std::vector<GlmEntry> entries;  ///< one per matrix-level class
  int params_checked = 0;
  int equivariant_class_count = 0;
  int reorder_class_count = 0;
  std::vector<GlmMismatch> mismatches;
};

/// `orbit_filter` 1 or 2 restricts the Gamma-orbit count.
GlmCatalog glm_enumerate(const RingPtr& ring, int orbit_filter = 0);

}  // namespace nimforge
