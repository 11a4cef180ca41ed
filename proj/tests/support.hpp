#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/group.hpp"

#include <memory>

namespace nimforge::test {

inline GroupPtr group(std::initializer_list<int> factors) {
  return std::make_shared<const FiniteGroup>(abelian_group(factors));
}

inline GroupPtr klein() { return group({2, 2}); }

/// Subgroup of `g` generated by the listed elements.
inline Subgroup gen(const FiniteGroup& g, std::initializer_list<int> generators) {
  return generated_subgroup(g, std::span<const int>(generators.begin(), generators.size()));
}

inline Subgroup whole(const FiniteGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return make_subgroup(g, all);
}

inline Subgroup trivial(const FiniteGroup& g) { return make_subgroup(g, {0}); }

}  // namespace nimforge::test
