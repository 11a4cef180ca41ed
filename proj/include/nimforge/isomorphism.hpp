#pragma once

#include "nimforge/nimrep.hpp"

#include <optional>
#include <vector>

namespace nimforge {

/// Per-node invariant: for each ring basis element, (diagonal, row sum, column sum).
using NodeSignature = std::vector<Integer>;

std::vector<NodeSignature> node_signatures(const NimRep& m);

/// Sorted multiset of node signatures. Equal for isomorphic reps.
std::vector<NodeSignature> invariant_key(const NimRep& m);

/// A bijection s with matrix2(b)(s[t], s[u]) = matrix1(b)(t, u) for every b,
/// found by backtracking over signature-compatible candidates.
std::optional<std::vector<int>> are_isomorphic(const NimRep& a, const NimRep& b);

}  // namespace nimforge
