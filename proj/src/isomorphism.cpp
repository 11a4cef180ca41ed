#include "nimforge/isomorphism.hpp"

#include <algorithm>

namespace nimforge {

std::vector<NodeSignature> node_signatures(const NimRep& m) {
  std::vector<NodeSignature> sigs(static_cast<std::size_t>(m.dim()));
  for (const auto& x : m.matrices()) {
    const IntVector rows = x.rowwise().sum();
    const IntVector cols = x.colwise().sum().transpose();
    for (int s = 0; s < m.dim(); ++s) {
      sigs[s].push_back(x(s, s));
      sigs[s].push_back(rows(s));
      sigs[s].push_back(cols(s));
    }
  }
  return sigs;
}

std::vector<NodeSignature> invariant_key(const NimRep& m) {
  auto sigs = node_signatures(m);
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

namespace {

struct Search {
  const NimRep& a;
  const NimRep& b;
  std::vector<int> order;
  std::vector<std::vector<int>> candidates;
  std::vector<int> image;
  std::vector<char> used;

  bool consistent(int u, int v, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const int u2 = order[k];
      const int v2 = image[u2];
      for (int l = 0; l < a.ring().size(); ++l) {
        if (a.matrix(l)(u, u2) != b.matrix(l)(v, v2)) return false;
        if (a.matrix(l)(u2, u) != b.matrix(l)(v2, v)) return false;
      }
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int v : candidates[u]) {
      if (used[v] || !consistent(u, v, depth)) continue;
      image[u] = v;
      used[v] = 1;
      if (run(depth + 1)) return true;
      used[v] = 0;
    }
    image[u] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const NimRep& a, const NimRep& b) {
  if (a.dim() != b.dim() || a.ring().size() != b.ring().size()) return std::nullopt;
  const auto sa = node_signatures(a);
  const auto sb = node_signatures(b);
  {
    auto ka = sa, kb = sb;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  const int d = a.dim();
  Search search{a, b, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(d)),
                std::vector<int>(static_cast<std::size_t>(d), -1), std::vector<char>(static_cast<std::size_t>(d), 0)};
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      if (sa[u] == sb[v]) search.candidates[u].push_back(v);

  // BFS from the most constrained unvisited node so each new node is adjacent
  // to already placed ones.
  IntMatrix adj = IntMatrix::Zero(d, d);
  for (const auto& x : a.matrices()) adj += x + x.transpose();
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  while (static_cast<int>(search.order.size()) < d) {
    int start = -1;
    for (int u = 0; u < d; ++u)
      if (!seen[u] && (start < 0 || search.candidates[u].size() < search.candidates[start].size())) start = u;
    seen[start] = 1;
    const std::size_t first = search.order.size();
    search.order.push_back(start);
    for (std::size_t head = first; head < search.order.size(); ++head)
      for (int v = 0; v < d; ++v)
        if (!seen[v] && adj(search.order[head], v) != 0) {
          seen[v] = 1;
          search.order.push_back(v);
        }
  }
  if (!search.run(0)) return std::nullopt;
  return search.image;
}

}  // namespace nimforge
