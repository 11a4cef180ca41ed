#include "nimforge/jl.hpp"

#include "nimforge/error.hpp"
#include "nimforge/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nimforge {

std::optional<std::string> jl_violation(const JlParams& params) {
  const int order = params.group->order();
  if (params.p < 2) return "p must be at least 2";
  if (params.m < 1 || params.p % params.m != 0) return "m must divide p";
  if (static_cast<int>(params.subgroups.size()) != params.m) return "need one subgroup per orbit";
  for (int i = 0; i < params.m; ++i)
    for (int k = 1; k < params.p; ++k) {
      const int j = (i + k) % params.m;
      const Integer prod = Integer{params.subgroups[i].size()} * params.subgroups[j].size();
      if (prod % order != 0 || !is_perfect_square(prod / order))
        return "|H_i||H_sigma_k(i)|/|G| is not a square integer at (i, k) = (" + std::to_string(i + 1) + ", " +
               std::to_string(k) + ")";
    }
  return std::nullopt;
}

void jl_check(const JlParams& params) {
  if (auto v = jl_violation(params)) throw Error(ErrorKind::ConditionViolated, *v);
}

std::vector<std::vector<int>> jl_orbit_blocks(const JlParams& params) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (const auto& h : params.subgroups) {
    std::vector<int> block;
    for (int c = 0; c < params.group->order() / h.size(); ++c) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

NimRep jl_build(const RingPtr& ring, const JlParams& params) {
  jl_check(params);
  const RingDescriptor& desc = ring->descriptor();
  if (desc.family != RingFamily::JordanLarson || desc.p != params.p || !(*desc.group == *params.group))
    throw Error(ErrorKind::BadInput, "ring does not match the parameters");
  const FiniteGroup& g = *params.group;
  std::vector<CosetSpace> spaces;
  std::vector<int> offset;
  std::vector<std::string> labels;
  int dim = 0;
  for (int i = 0; i < params.m; ++i) {
    spaces.push_back(coset_space(g, params.subgroups[i]));
    offset.push_back(dim);
    for (const auto& coset : spaces.back().cosets)
      labels.push_back("m" + std::to_string(i + 1) + "_" + g.element_label(coset.front()));
    dim += spaces.back().size();
  }
  std::vector<IntMatrix> mats(static_cast<std::size_t>(ring->size()), IntMatrix::Zero(dim, dim));
  for (int a = 0; a < g.order(); ++a)
    for (int i = 0; i < params.m; ++i)
      for (int c = 0; c < spaces[i].size(); ++c) mats[a](offset[i] + spaces[i].action[a][c], offset[i] + c) = 1;
  for (int k = 1; k < params.p; ++k) {
    IntMatrix& x = mats[static_cast<std::size_t>(jl_x_index(*ring, k))];
    for (int i = 0; i < params.m; ++i) {
      const int j = (i + k) % params.m;
      const Integer coef = exact_sqrt(Integer{params.subgroups[i].size()} * params.subgroups[j].size() / g.order());
      x.block(offset[j], offset[i], spaces[j].size(), spaces[i].size()).setConstant(coef);
    }
  }
  return NimRep(ring, std::move(mats), std::move(labels));
}

IntMatrix jl_coefficients(const NimRep& rep, const JlParams& params, int k) {
  return block_coefficients(rep, jl_x_index(rep.ring(), k), jl_orbit_blocks(params)).transpose();
}

bool jl_same_class(const JlParams& a, const JlParams& b) {
  if (a.m != b.m || a.p != b.p || a.subgroups.size() != b.subgroups.size()) return false;
  const std::size_t m = a.subgroups.size();
  std::vector<int> match(m, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < m; ++j) {
      if (seen[j] || !are_conjugate(*a.group, a.subgroups[i], b.subgroups[j])) continue;
      seen[j] = 1;
      if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]), seen)) {
        match[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<char> seen(m, 0);
    if (!augment(i, seen)) return false;
  }
  return true;
}

std::vector<AlgebraObject> jl_algebra_objects(const FusionRing& ring, const JlParams& params) {
  jl_check(params);
  const int order = params.group->order();
  const int ell = params.p / params.m;
  std::vector<AlgebraObject> out;
  for (const auto& h : params.subgroups) {
    AlgebraObject a;
    a.multiplicity.assign(static_cast<std::size_t>(ring.size()), 0);
    for (int x : h.members) a.multiplicity[x] = 1;
    for (int j = 1; j < ell; ++j)
      a.multiplicity[jl_x_index(ring, j * params.m)] = exact_sqrt(Integer{h.size()} * h.size() / order);
    out.push_back(std::move(a));
  }
  return out;
}

JlCatalog jl_enumerate(const RingPtr& ring, int orbit_filter) {
  const RingDescriptor& desc = ring->descriptor();
  if (desc.family != RingFamily::JordanLarson) throw Error(ErrorKind::BadInput, "not a JL ring");
  JlCatalog cat;
  cat.ring = ring;
  const std::vector<Subgroup> subs = enumerate_subgroups(*desc.group);
  const int s = static_cast<int>(subs.size());

  std::map<std::vector<NodeSignature>, std::vector<int>> buckets;
  std::vector<JlParams> tuple_reps;
  for (int m = 1; m <= desc.p; ++m) {
    if (desc.p % m != 0 || (orbit_filter > 0 && m != orbit_filter)) continue;
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      JlParams params{desc.group, desc.p, m, {}};
      for (int i : idx) params.subgroups.push_back(subs[i]);
      if (!jl_violation(params)) {
        ++cat.tuples_checked;
        NimRep rep = jl_build(ring, params);
        int tuple_class = -1;
        for (std::size_t t = 0; t < tuple_reps.size() && tuple_class < 0; ++t)
          if (jl_same_class(tuple_reps[t], params)) tuple_class = static_cast<int>(t);
        if (tuple_class < 0) {
          tuple_class = static_cast<int>(tuple_reps.size());
          tuple_reps.push_back(params);
        }
        auto& bucket = buckets[invariant_key(rep)];
        int matrix_class = -1;
        for (int e : bucket)
          if (are_isomorphic(cat.entries[e].rep, rep)) {
            matrix_class = e;
            break;
          }
        if (matrix_class < 0) {
          for (const auto& e : cat.entries)
            if (std::binary_search(e.tuple_class_ids.begin(), e.tuple_class_ids.end(), tuple_class))
              cat.mismatches.push_back({e.params, params, true, false});
          bucket.push_back(static_cast<int>(cat.entries.size()));
          const int id = static_cast<int>(cat.entries.size());
          cat.entries.push_back({std::move(params), std::move(rep), id, tuple_class, {tuple_class}});
        } else {
          JlEntry& e = cat.entries[matrix_class];
          if (e.tuple_class_id != tuple_class) cat.mismatches.push_back({e.params, params, false, true});
          insert_class_id(e.tuple_class_ids, tuple_class);
        }
      }
      int pos = m - 1;
      while (pos >= 0 && ++idx[pos] == s) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  cat.tuple_class_count = static_cast<int>(tuple_reps.size());
  return cat;
}

}  // namespace nimforge
