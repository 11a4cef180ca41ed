#include "nimforge/glm.hpp"

#include "nimforge/error.hpp"
#include "nimforge/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace nimforge {

namespace {

Integer doubled_order(const FiniteGroup& gamma) { return doubled_subgroup(gamma).size(); }

Integer meet_doubled(const FiniteGroup& gamma, const Subgroup& h) {
  return intersect(h, doubled_subgroup(gamma)).size();
}

bool commutes(const Permutation& a, const Permutation& b) { return a * b == b * a; }

}  // namespace

SigmaAction sigma_action(const FiniteGroup& gamma, int delta, const std::vector<Subgroup>& subgroups,
                         bool allow_odd) {
  if (!gamma.is_abelian()) throw Error(ErrorKind::NotAbelian, "Gamma must be abelian");
  if (gamma.order() % 2 != 0 && !allow_odd)
    throw Error(ErrorKind::OddOrder, "|Gamma| = " + std::to_string(gamma.order()) + " is odd");
  const Subgroup doubled = doubled_subgroup(gamma);
  SigmaAction sa{quotient(gamma, doubled), 0, {}, {}, {}, {}};
  sa.delta = sa.quotient.projection[delta];

  std::vector<CosetSpace> spaces;
  std::vector<std::vector<int>> coset_orbit;  // per Gamma-orbit: coset -> 2Gamma-orbit index
  int offset = 0;
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    spaces.push_back(coset_space(gamma, subgroups[j]));
    const Subgroup k = join(gamma, subgroups[j], doubled);
    sa.delta_in_hbar.push_back(k.contains(delta));
    std::map<int, int> index_of_key;
    std::vector<int> orbit_of(static_cast<std::size_t>(spaces[j].size()));
    for (int c = 0; c < spaces[j].size(); ++c) {
      const int x = spaces[j].cosets[c].front();
      int key = gamma.order();
      for (int y : k.members) key = std::min(key, gamma.mul(x, y));
      auto [it, fresh] = index_of_key.try_emplace(key, sa.size());
      if (fresh) {
        sa.members.emplace_back();
        sa.gamma_orbit.push_back(static_cast<int>(j));
      }
      orbit_of[c] = it->second;
      sa.members[it->second].push_back(offset + c);
    }
    coset_orbit.push_back(std::move(orbit_of));
    offset += spaces[j].size();
  }

  std::vector<int> first_offset;
  offset = 0;
  for (const auto& s : spaces) {
    first_offset.push_back(offset);
    offset += s.size();
  }
  for (int q = 0; q < sa.quotient.group.order(); ++q) {
    const int g = sa.quotient.lift[q];
    std::vector<int> images(static_cast<std::size_t>(sa.size()));
    for (int i = 0; i < sa.size(); ++i) {
      const int j = sa.gamma_orbit[i];
      const int c = sa.members[i].front() - first_offset[j];
      images[i] = coset_orbit[j][spaces[j].action[g][c]];
    }
    sa.sigma.emplace_back(std::move(images));
  }
  return sa;
}

std::vector<Permutation> enumerate_tau0(const SigmaAction& sa) {
  const int n = sa.size();
  const int nq = static_cast<int>(sa.sigma.size());
  const bool two = n > 0 && sa.gamma_orbit.back() == 1;
  std::vector<int> firsts;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (covered[i]) continue;
    firsts.push_back(i);
    for (int q = 0; q < nq; ++q) covered[sa.sigma[q](i)] = 1;
  }
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  auto extend = [&](auto&& self, std::size_t o) -> void {
    if (o == firsts.size()) {
      Permutation tau(images);
      if (tau * tau != sa.sigma_delta()) return;
      for (const auto& s : sa.sigma)
        if (!commutes(tau, s)) return;
      out.push_back(std::move(tau));
      return;
    }
    const int f = firsts[o];
    for (int t = 0; t < n; ++t) {
      if (two && sa.gamma_orbit[t] == sa.gamma_orbit[f]) continue;
      if (!two && sa.gamma_orbit[t] != sa.gamma_orbit[f]) continue;
      const std::vector<int> saved = images;
      bool ok = true;
      for (int q = 0; q < nq && ok; ++q) {
        const int src = sa.sigma[q](f);
        const int dst = sa.sigma[q](t);
        if (images[src] >= 0 && images[src] != dst) ok = false;
        images[src] = dst;
      }
      std::vector<char> hit(static_cast<std::size_t>(n), 0);
      for (int v : images)
        if (v >= 0) {
          if (hit[v]) ok = false;
          hit[v] = 1;
        }
      if (ok) self(self, o + 1);
      images = saved;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> glm_violation(const GlmParams& params) {
  const FiniteGroup& gamma = *params.gamma;
  if (params.orbit_count != 1 && params.orbit_count != 2) return "orbit count must be 1 or 2";
  if (static_cast<int>(params.subgroups.size()) != params.orbit_count) return "need one subgroup per Gamma-orbit";
  const SigmaAction sa = sigma_action(gamma, params.delta, params.subgroups, true);
  const Integer d2 = doubled_order(gamma);
  if (params.orbit_count == 1) {
    const Integer h = meet_doubled(gamma, params.subgroups[0]);
    if ((h * h) % d2 != 0 || !is_perfect_square(h * h / d2)) return "divisibility: sqrt|2Gamma| must divide |H & 2Gamma|";
  } else {
    if (sa.delta_in_hbar[0] != sa.delta_in_hbar[1]) return "delta clause: delta must lie in both or neither of H_1, H_2 mod 2Gamma";
    if (two_torsion_count(quotient(gamma, params.subgroups[0]).group) !=
        two_torsion_count(quotient(gamma, params.subgroups[1]).group))
      return "two-torsion clause: |(Gamma/H_1)[2]| != |(Gamma/H_2)[2]|";
    const Integer prod = meet_doubled(gamma, params.subgroups[0]) * meet_doubled(gamma, params.subgroups[1]);
    if (prod % d2 != 0 || !is_perfect_square(prod / d2)) return "square clause: |H_1&2Gamma||H_2&2Gamma|/|2Gamma| is not a square";
  }
  const Permutation& tau = params.tau0;
  if (tau.size() != sa.size()) return "tau0 must permute the " + std::to_string(sa.size()) + " 2Gamma-orbits";
  if (tau * tau != sa.sigma_delta()) return "tau0 clause: tau0^2 != sigma_delta";
  for (const auto& s : sa.sigma)
    if (!commutes(tau, s)) return "tau0 clause: tau0 does not commute with sigma";
  for (int i = 0; i < sa.size(); ++i)
    if ((sa.gamma_orbit[tau(i)] != sa.gamma_orbit[i]) != (params.orbit_count == 2))
      return params.orbit_count == 2 ? "tau0 clause: tau0 must swap the Gamma-orbits" : "tau0 clause: tau0 leaves the Gamma-orbit";
  return std::nullopt;
}

void glm_check(const GlmParams& params) {
  if (auto v = glm_violation(params)) throw Error(ErrorKind::ConditionViolated, *v);
}

Integer glm_coefficient(const GlmParams& params) {
  glm_check(params);
  const Integer d2 = doubled_order(*params.gamma);
  Integer prod = 1;
  for (const auto& h : params.subgroups) prod *= meet_doubled(*params.gamma, h);
  if (params.orbit_count == 1) prod *= prod;
  return exact_sqrt(prod / d2);
}

NimRep glm_build(const RingPtr& ring, const GlmParams& params) {
  glm_check(params);
  const FiniteGroup& gamma = *params.gamma;
  const RingDescriptor& desc = ring->descriptor();
  const SigmaAction sa = sigma_action(gamma, params.delta, params.subgroups, true);
  if (desc.family != RingFamily::Glm || !(*desc.group == gamma) || desc.delta != sa.delta)
    throw Error(ErrorKind::BadInput, "ring does not match the parameters");
  const Integer coef = glm_coefficient(params);

  std::vector<CosetSpace> spaces;
  std::vector<int> offset;
  std::vector<std::string> labels;
  int dim = 0;
  for (std::size_t j = 0; j < params.subgroups.size(); ++j) {
    spaces.push_back(coset_space(gamma, params.subgroups[j]));
    offset.push_back(dim);
    for (const auto& coset : spaces.back().cosets)
      labels.push_back("m" + std::to_string(j + 1) + "_" + gamma.element_label(coset.front()));
    dim += spaces.back().size();
  }
  std::vector<IntMatrix> mats(static_cast<std::size_t>(ring->size()), IntMatrix::Zero(dim, dim));
  for (int a = 0; a < gamma.order(); ++a)
    for (std::size_t j = 0; j < spaces.size(); ++j)
      for (int c = 0; c < spaces[j].size(); ++c) mats[a](offset[j] + spaces[j].action[a][c], offset[j] + c) = 1;
  for (int q = 0; q < sa.quotient.group.order(); ++q) {
    IntMatrix& x = mats[static_cast<std::size_t>(glm_x_index(*ring, q))];
    for (int i = 0; i < sa.size(); ++i) {
      const int target = params.tau0(sa.sigma[q](i));
      for (int s : sa.members[i])
        for (int t : sa.members[target]) x(t, s) = coef;
    }
  }
  return NimRep(ring, std::move(mats), std::move(labels));
}

const char* to_string(Reading r) {
  return r == Reading::Equivariant ? "equivariant" : "reorder";
}

bool glm_same_class(const GlmParams& a, const GlmParams& b, Reading reading) {
  const FiniteGroup& gamma = *a.gamma;
  if (a.orbit_count != b.orbit_count || a.subgroups.size() != b.subgroups.size()) return false;
  const SigmaAction sa = sigma_action(gamma, a.delta, a.subgroups, true);
  const SigmaAction sb = sigma_action(gamma, b.delta, b.subgroups, true);
  if (sa.delta != sb.delta || sa.size() != sb.size()) return false;
  const int n = static_cast<int>(a.subgroups.size());

  // coset index -> 2Gamma-orbit index, per Gamma-orbit of b
  std::vector<int> b_orbit_of_basis;
  for (int i = 0; i < sb.size(); ++i)
    for (int s : sb.members[i]) {
      if (static_cast<int>(b_orbit_of_basis.size()) <= s) b_orbit_of_basis.resize(static_cast<std::size_t>(s) + 1, -1);
      b_orbit_of_basis[s] = i;
    }
  std::vector<int> b_offset{0};
  for (const auto& h : b.subgroups) b_offset.push_back(b_offset.back() + gamma.order() / h.size());

  std::vector<std::vector<int>> perms{{0}};
  if (n == 2) perms = {{0, 1}, {1, 0}};
  for (const auto& pi : perms) {
    bool same = true;
    for (int j = 0; j < n; ++j) same = same && a.subgroups[j] == b.subgroups[pi[j]];
    if (!same) continue;
    std::vector<CosetSpace> spaces;
    std::vector<std::vector<int>> shifts;
    for (int j = 0; j < n; ++j) {
      spaces.push_back(coset_space(gamma, b.subgroups[pi[j]]));
      std::vector<int> t{0};
      if (reading == Reading::Equivariant) {
        t.clear();
        for (const auto& coset : spaces.back().cosets) t.push_back(coset.front());
      }
      shifts.push_back(std::move(t));
    }
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<int> phi(static_cast<std::size_t>(sa.size()));
      for (int i = 0; i < sa.size(); ++i) {
        const int j = sa.gamma_orbit[i];
        int a_offset = 0;
        for (int jj = 0; jj < j; ++jj) a_offset += gamma.order() / a.subgroups[jj].size();
        const int x = spaces[j].cosets[sa.members[i].front() - a_offset].front();
        const int moved = gamma.mul(x, shifts[j][choice[j]]);
        phi[i] = b_orbit_of_basis[b_offset[pi[j]] + spaces[j].coset_of[moved]];
      }
      bool match = true;
      for (int i = 0; i < sa.size() && match; ++i) match = phi[a.tau0(i)] == b.tau0(phi[i]);
      if (match) return true;
      int pos = n - 1;
      while (pos >= 0 && ++choice[pos] == static_cast<int>(shifts[pos].size())) choice[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return false;
}

GlmAlgebra glm_algebra_objects(const FusionRing& ring, const GlmParams& params) {
  glm_check(params);
  const SigmaAction sa = sigma_action(*params.gamma, params.delta, params.subgroups, true);
  const Integer coef = glm_coefficient(params);
  GlmAlgebra out;
  for (int j = 0; j < params.orbit_count; ++j) {
    AlgebraObject a;
    a.multiplicity.assign(static_cast<std::size_t>(ring.size()), 0);
    for (int x : params.subgroups[j].members) a.multiplicity[x] = 1;
    int first = 0;
    while (sa.gamma_orbit[first] != j) ++first;
    for (int q = 0; q < sa.quotient.group.order(); ++q)
      if (params.tau0(sa.sigma[q](first)) == first) a.multiplicity[glm_x_index(ring, q)] += coef;
    out.closed_form.push_back(std::move(a));
  }
  if (params.orbit_count == 1) {
    AlgebraObject a;
    a.multiplicity.assign(static_cast<std::size_t>(ring.size()), 0);
    for (int x : params.subgroups[0].members) a.multiplicity[x] = 1;
    const Permutation inv = params.tau0.inverse();
    for (int q = 0; q < sa.quotient.group.order(); ++q)
      for (int i = 0; i < sa.size(); ++i)
        if (sa.sigma[q](i) == inv(i)) a.multiplicity[glm_x_index(ring, q)] += coef;
    out.aggregate = std::move(a);
  }
  return out;
}

std::optional<std::string> glm_equation_violation(const NimRep& rep, const GlmParams& params) {
  const FiniteGroup& gamma = *params.gamma;
  const SigmaAction sa = sigma_action(gamma, params.delta, params.subgroups, true);
  const FiniteGroup& q = sa.quotient.group;
  const int n = sa.size();
  auto c = [&](int g, int from, int to) {
    return rep.matrix(glm_x_index(rep.ring(), g))(sa.members[to].front(), sa.members[from].front());
  };
  for (int g = 0; g < q.order(); ++g) {
    const int back = q.mul(q.inverse(g), q.inverse(sa.delta));
    for (int i = 0; i < n; ++i) {
      const Integer meet = meet_doubled(gamma, params.subgroups[sa.gamma_orbit[i]]);
      Integer rhs = 0;
      for (int k = 0; k < n; ++k) rhs += c(g, i, k) * c(g, i, k) * static_cast<Integer>(sa.members[k].size());
      if (rhs != meet)
        return "mass equation fails at g = " + std::to_string(g) + ", orbit " + std::to_string(i);
      for (int u = 0; u < n; ++u) {
        if (u == i) continue;
        Integer sum = 0;
        for (int k = 0; k < n; ++k) sum += c(g, i, k) * c(back, k, u) * static_cast<Integer>(sa.members[k].size());
        if (sum != 0)
          return "cross-orbit equation fails at g = " + std::to_string(g) + ", orbits " + std::to_string(i) + ", " +
                 std::to_string(u);
      }
    }
  }
  return std::nullopt;
}

GlmCatalog glm_enumerate(const RingPtr& ring, int orbit_filter) {
  const RingDescriptor& desc = ring->descriptor();
  if (desc.family != RingFamily::Glm) throw Error(ErrorKind::BadInput, "not a GLM ring");
  const FiniteGroup& gamma = *desc.group;
  GlmCatalog cat;
  cat.ring = ring;
  const Quotient quot = quotient(gamma, doubled_subgroup(gamma));
  const int delta = quot.lift[desc.delta];
  const std::vector<Subgroup> subs = enumerate_subgroups(gamma);

  std::vector<GlmParams> candidates;
  auto collect = [&](std::vector<Subgroup> hs) {
    GlmParams probe{desc.group, delta, static_cast<int>(hs.size()), hs, {}};
    const SigmaAction sa = sigma_action(gamma, delta, hs, true);
    for (auto& tau : enumerate_tau0(sa)) {
      probe.tau0 = std::move(tau);
      if (!glm_violation(probe)) candidates.push_back(probe);
    }
  };
  if (orbit_filter != 2)
    for (const auto& h : subs) collect({h});
  if (orbit_filter != 1)
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) collect({h1, h2});

  std::map<std::vector<NodeSignature>, std::vector<int>> buckets;
  std::vector<GlmParams> equivariant_reps;
  std::vector<GlmParams> reorder_reps;
  auto class_of = [](std::vector<GlmParams>& reps, const GlmParams& p, Reading r) {
    for (std::size_t t = 0; t < reps.size(); ++t)
      if (glm_same_class(reps[t], p, r)) return static_cast<int>(t);
    reps.push_back(p);
    return static_cast<int>(reps.size()) - 1;
  };
  for (auto& params : candidates) {
    ++cat.params_checked;
    NimRep rep = glm_build(ring, params);
    const int eq = class_of(equivariant_reps, params, Reading::Equivariant);
    const int pa = class_of(reorder_reps, params, Reading::OrbitReorder);
    auto& bucket = buckets[invariant_key(rep)];
    int matrix_class = -1;
    for (int e : bucket)
      if (are_isomorphic(cat.entries[e].rep, rep)) {
        matrix_class = e;
        break;
      }
    if (matrix_class < 0) {
      auto has = [](const std::vector<int>& ids, int id) { return std::binary_search(ids.begin(), ids.end(), id); };
      for (const auto& e : cat.entries) {
        if (has(e.equivariant_class_ids, eq))
          cat.mismatches.push_back({e.params, params, Reading::Equivariant, true, false});
        if (has(e.reorder_class_ids, pa))
          cat.mismatches.push_back({e.params, params, Reading::OrbitReorder, true, false});
      }
      const int id = static_cast<int>(cat.entries.size());
      bucket.push_back(id);
      cat.entries.push_back({std::move(params), std::move(rep), id, eq, pa, {eq}, {pa}});
    } else {
      GlmEntry& e = cat.entries[matrix_class];
      if (e.equivariant_class_id != eq) cat.mismatches.push_back({e.params, params, Reading::Equivariant, false, true});
      if (e.reorder_class_id != pa) cat.mismatches.push_back({e.params, params, Reading::OrbitReorder, false, true});
      insert_class_id(e.equivariant_class_ids, eq);
      insert_class_id(e.reorder_class_ids, pa);
    }
  }
  cat.equivariant_class_count = static_cast<int>(equivariant_reps.size());
  cat.reorder_class_count = static_cast<int>(reorder_reps.size());
  return cat;
}

}  // namespace nimforge
