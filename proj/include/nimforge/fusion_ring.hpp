#pragma once

#include "nimforge/group.hpp"
#include "nimforge/types.hpp"

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nimforge {

enum class RingFamily { Custom, JordanLarson, Glm };

/// How a ring was built. Classifiers and the oracle's hinted mode use it; the
/// structure constants alone define the ring.
struct RingDescriptor {
  RingFamily family = RingFamily::Custom;
  GroupPtr group;
  int p = 0;           ///< JL only
  int delta = 0;       ///< GLM only: element of Gamma/2Gamma (quotient index)
  bool outside_scope = false;  ///< GLM over odd-order Gamma
};

/// A based ring with non-negative integer structure constants stored densely:
/// coeff(i, j, k) is the multiplicity of b_k in b_i b_j.
class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
             std::vector<Integer> coefficients, std::vector<int> invertibles,
             RingDescriptor descriptor = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;
  int unit() const { return unit_; }
  int dual(int i) const { return dual_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& duals() const { return dual_; }

  Integer coeff(int i, int j, int k) const {
    return coefficients_[(static_cast<std::size_t>(i) * n() + static_cast<std::size_t>(j)) * n() +
                         static_cast<std::size_t>(k)];
  }
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  /// Nonzero (k, N_ij^k) pairs of b_i b_j, ordered by k.
  const std::vector<std::pair<int, Integer>>& terms(int i, int j) const {
    return terms_[static_cast<std::size_t>(i) * n() + static_cast<std::size_t>(j)];
  }

  /// The basis element b_i b_j when that product is a single basis element, else -1.
  int simple_product(int i, int j) const;

  /// Basis indices of the invertible elements; the unit comes first.
  const std::vector<int>& invertibles() const { return invertibles_; }
  bool is_invertible(int i) const { return invertible_flag_[static_cast<std::size_t>(i)] != 0; }
  std::vector<int> non_invertibles() const;

  const RingDescriptor& descriptor() const { return descriptor_; }

  /// Left multiplication by basis element i: L(k, j) = N_ij^k.
  IntMatrix left_matrix(int i) const;

  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.labels_ == b.labels_ && a.unit_ == b.unit_ && a.dual_ == b.dual_ &&
           a.coefficients_ == b.coefficients_ && a.invertibles_ == b.invertibles_;
  }

 private:
  std::size_t n() const { return labels_.size(); }

  std::vector<std::string> labels_;
  int unit_;
  std::vector<int> dual_;
  std::vector<Integer> coefficients_;
  std::vector<std::vector<std::pair<int, Integer>>> terms_;
  std::vector<int> invertibles_;
  std::vector<char> invertible_flag_;
  RingDescriptor descriptor_;
};

using RingPtr = std::shared_ptr<const FusionRing>;

/// R_{p,G}: basis G then X_1..X_{p-1}. Throws BadP, OrderNotSquare.
RingPtr jl_ring(GroupPtr g, int p);

/// Basis index of X_k in a ring built by jl_ring.
int jl_x_index(const FusionRing& ring, int k);

/// GLM(Gamma, delta): basis Gamma then X_q for q in Gamma/2Gamma (quotient
/// order). `delta` is an element of Gamma, reduced mod 2Gamma. Throws
/// NotAbelian, OddOrder (unless allow_odd).
RingPtr glm_ring(GroupPtr gamma, int delta, bool allow_odd = false);

/// Basis index of X_q in a ring built by glm_ring (q a Gamma/2Gamma index).
int glm_x_index(const FusionRing& ring, int q);

struct AxiomViolation {
  std::string axiom;
  std::array<int, 4> witness{-1, -1, -1, -1};
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Unit, associativity, duality, invertible-subset and Frobenius-reciprocity
/// checks. Stops collecting after `max_violations` entries.
AxiomReport verify_axioms(const FusionRing& ring, std::size_t max_violations = 16);

IntVector basis_vector(const FusionRing& ring, int i);

/// Bilinear extension of the structure constants. Throws DimensionMismatch.
IntVector multiply(const FusionRing& ring, const IntVector& x, const IntVector& y);

/// The group formed by ring.invertibles(), element i <-> invertibles()[i].
FiniteGroup invertible_group(const FusionRing& ring);

/// Upper bound on FPdim(x) for x = sum_i v_i b_i: the largest column sum of
/// its left-multiplication matrix.
Integer fpdim_upper_bound(const FusionRing& ring, const IntVector& x);

}  // namespace nimforge
