#include "nimforge/nimrep.hpp"

#include "nimforge/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nimforge {

namespace {

std::string entry(int b, Eigen::Index t, Eigen::Index s) {
  return "(label " + std::to_string(b) + ", row " + std::to_string(t) + ", col " + std::to_string(s) + ")";
}

void validate(const FusionRing& ring, const std::vector<IntMatrix>& mats) {
  if (static_cast<int>(mats.size()) != ring.size())
    throw Error(ErrorKind::DimensionMismatch, "need one matrix per ring basis element");
  const Eigen::Index d = mats.empty() ? 0 : mats.front().rows();
  for (int b = 0; b < ring.size(); ++b) {
    const IntMatrix& m = mats[static_cast<std::size_t>(b)];
    if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::DimensionMismatch, "matrices must be square of equal size");
    for (Eigen::Index t = 0; t < d; ++t)
      for (Eigen::Index s = 0; s < d; ++s)
        if (m(t, s) < 0) throw Error(ErrorKind::NegativeEntry, "negative entry at " + entry(b, t, s));
  }
  const IntMatrix& unit = mats[static_cast<std::size_t>(ring.unit())];
  if (unit != IntMatrix::Identity(d, d)) throw Error(ErrorKind::UnitNotIdentity, "unit does not act as the identity");
  for (int g : ring.invertibles())
    if (!is_permutation_matrix(mats[static_cast<std::size_t>(g)]))
      throw Error(ErrorKind::InvertibleNotPermutation, "invertible " + ring.label(g) + " is not a permutation");
  for (int b = 0; b < ring.size(); ++b) {
    const IntMatrix& m = mats[static_cast<std::size_t>(b)];
    const IntMatrix& dual = mats[static_cast<std::size_t>(ring.dual(b))];
    for (Eigen::Index t = 0; t < d; ++t)
      for (Eigen::Index s = 0; s < d; ++s)
        if (dual(t, s) != m(s, t))
          throw Error(ErrorKind::NotRigid, ring.label(b) + " at " + entry(b, t, s));
  }
  IntMatrix rhs(d, d);
  for (int i = 0; i < ring.size(); ++i)
    for (int j = 0; j < ring.size(); ++j) {
      rhs.setZero();
      for (const auto& [k, c] : ring.terms(i, j)) rhs += c * mats[static_cast<std::size_t>(k)];
      const IntMatrix lhs = mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)];
      if (lhs != rhs) {
        Eigen::Index t = 0, s = 0;
        (lhs - rhs).cwiseAbs().maxCoeff(&t, &s);
        throw Error(ErrorKind::NotHomomorphism, "(" + ring.label(i) + ", " + ring.label(j) + ") at row " +
                                                    std::to_string(t) + ", col " + std::to_string(s));
      }
    }
}

}  // namespace

NimRep::NimRep(RingPtr ring, std::vector<IntMatrix> matrices, std::vector<std::string> labels)
    : ring_(std::move(ring)), matrices_(std::move(matrices)), labels_(std::move(labels)) {
  validate(*ring_, matrices_);
  dim_ = static_cast<int>(matrices_.front().rows());
  if (labels_.empty())
    for (int i = 0; i < dim_; ++i) labels_.push_back("m" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != dim_) throw Error(ErrorKind::DimensionMismatch, "one label per basis element");
}

std::vector<int> NimRep::permutation_of(int g) const {
  const IntMatrix& m = matrix(g);
  std::vector<int> images(static_cast<std::size_t>(dim_));
  for (int s = 0; s < dim_; ++s)
    for (int t = 0; t < dim_; ++t)
      if (m(t, s) != 0) images[s] = t;
  return images;
}

NimRep nimrep_from_matrices(RingPtr ring, std::vector<IntMatrix> matrices, std::vector<std::string> labels) {
  return NimRep(std::move(ring), std::move(matrices), std::move(labels));
}

NimRep regular_nimrep(RingPtr ring) {
  std::vector<IntMatrix> mats;
  for (int i = 0; i < ring->size(); ++i) mats.push_back(ring->left_matrix(i));
  std::vector<std::string> labels = ring->labels();
  return NimRep(std::move(ring), std::move(mats), std::move(labels));
}

NimRep direct_sum(const NimRep& a, const NimRep& b) {
  const int d = a.dim() + b.dim();
  std::vector<IntMatrix> mats;
  for (int i = 0; i < a.ring().size(); ++i) {
    IntMatrix m = IntMatrix::Zero(d, d);
    m.topLeftCorner(a.dim(), a.dim()) = a.matrix(i);
    m.bottomRightCorner(b.dim(), b.dim()) = b.matrix(i);
    mats.push_back(std::move(m));
  }
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return NimRep(a.ring_ptr(), std::move(mats), std::move(labels));
}

NimRep relabel(const NimRep& m, const std::vector<int>& perm) {
  const IntMatrix p = permutation_matrix(perm);
  std::vector<IntMatrix> mats;
  for (const auto& x : m.matrices()) mats.push_back(p * x * p.transpose());
  std::vector<std::string> labels(m.labels().size());
  for (std::size_t i = 0; i < perm.size(); ++i) labels[static_cast<std::size_t>(perm[i])] = m.labels()[i];
  return NimRep(m.ring_ptr(), std::move(mats), std::move(labels));
}

std::vector<std::vector<int>> components(const NimRep& m) {
  const int d = m.dim();
  IntMatrix adj = IntMatrix::Zero(d, d);
  for (const auto& x : m.matrices()) adj += x + x.transpose();
  std::vector<int> seen(static_cast<std::size_t>(d), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < d; ++start) {
    if (seen[start] >= 0) continue;
    std::vector<int> comp{start};
    seen[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int v = 0; v < d; ++v)
        if (adj(comp[head], v) != 0 && seen[v] < 0) {
          seen[v] = static_cast<int>(out.size());
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_irreducible(const NimRep& m) { return m.dim() > 0 && components(m).size() == 1; }

OrbitDecomposition decompose_orbits(const NimRep& m, const std::vector<int>& subgroup) {
  const FusionRing& ring = m.ring();
  std::vector<char> in(static_cast<std::size_t>(ring.size()), 0);
  for (int g : subgroup) {
    if (g < 0 || g >= ring.size() || !ring.is_invertible(g))
      throw Error(ErrorKind::NotASubgroup, "not an invertible basis element: " + std::to_string(g));
    in[g] = 1;
  }
  if (!in[ring.unit()]) throw Error(ErrorKind::NotASubgroup, "subgroup must contain the unit");
  for (int g : subgroup) {
    if (!in[ring.dual(g)]) throw Error(ErrorKind::NotASubgroup, "not closed under inverses");
    for (int h : subgroup)
      if (int gh = ring.simple_product(g, h); gh < 0 || !in[gh])
        throw Error(ErrorKind::NotASubgroup, "not closed under multiplication");
  }

  OrbitDecomposition out;
  out.subgroup = subgroup;
  std::sort(out.subgroup.begin(), out.subgroup.end());
  std::vector<std::vector<int>> actions;
  for (int g : out.subgroup) actions.push_back(m.permutation_of(g));
  out.orbit_of.assign(static_cast<std::size_t>(m.dim()), -1);
  for (int s = 0; s < m.dim(); ++s) {
    if (out.orbit_of[s] >= 0) continue;
    const int id = out.size();
    std::vector<int> orbit;
    for (const auto& a : actions)
      if (out.orbit_of[a[s]] < 0) {
        out.orbit_of[a[s]] = id;
        orbit.push_back(a[s]);
      }
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> stab;
    for (std::size_t i = 0; i < actions.size(); ++i)
      if (actions[i][s] == s) stab.push_back(out.subgroup[i]);
    out.orbits.push_back(std::move(orbit));
    out.stabilizers.push_back(std::move(stab));
  }
  return out;
}

OrbitDecomposition decompose_orbits(const NimRep& m) { return decompose_orbits(m, m.ring().invertibles()); }

std::vector<std::vector<int>> nest_orbits(const OrbitDecomposition& outer, const OrbitDecomposition& inner) {
  std::vector<std::vector<int>> out(outer.orbits.size());
  for (int j = 0; j < inner.size(); ++j) {
    const int o = outer.orbit_of[inner.orbits[j].front()];
    for (int s : inner.orbits[j])
      if (outer.orbit_of[s] != o) throw Error(ErrorKind::NotASubgroup, "inner orbits are not nested in outer orbits");
    out[o].push_back(j);
  }
  return out;
}

NimGraph nim_graph(const NimRep& m) {
  NimGraph g;
  g.nodes = m.labels();
  for (int b = 0; b < m.ring().size(); ++b)
    for (int s = 0; s < m.dim(); ++s)
      for (int t = 0; t < m.dim(); ++t)
        if (Integer c = m.matrix(b)(t, s); c != 0) g.edges.push_back({s, t, b, c});
  return g;
}

NimOrbitGraph nim_orbit_graph(const NimRep& m, const std::vector<int>& subgroup) {
  NimOrbitGraph g;
  if (subgroup.empty()) {
    for (int s = 0; s < m.dim(); ++s) g.orbits.push_back({s});
  } else {
    g.orbits = decompose_orbits(m, subgroup).orbits;
  }
  for (const auto& orbit : g.orbits) {
    std::string name;
    for (int s : orbit) name += (name.empty() ? "" : ",") + m.label(s);
    g.nodes.push_back(g.orbits.size() == static_cast<std::size_t>(m.dim()) ? name : "{" + name + "}");
  }
  for (int b : m.ring().non_invertibles())
    for (std::size_t src = 0; src < g.orbits.size(); ++src)
      for (std::size_t dst = 0; dst < g.orbits.size(); ++dst) {
        const int s = g.orbits[src].front();
        Integer total = 0;
        for (int t : g.orbits[dst]) total += m.matrix(b)(t, s);
        if (total != 0) g.edges.push_back({static_cast<int>(src), static_cast<int>(dst), b, total});
      }
  return g;
}

NimOrbitGraph nim_orbit_graph(const NimRep& m) { return nim_orbit_graph(m, m.ring().invertibles()); }

std::optional<int> is_admissible(const NimRep& m) {
  for (int s = 0; s < m.dim(); ++s) {
    bool all = true;
    for (int t = 0; t < m.dim() && all; ++t) {
      bool hit = false;
      for (const auto& x : m.matrices())
        if (x(t, s) != 0) {
          hit = true;
          break;
        }
      all = hit;
    }
    if (all) return s;
  }
  return std::nullopt;
}

AlgebraObject algebra_object_at(const NimRep& m, int idx) {
  if (idx < 0 || idx >= m.dim()) throw Error(ErrorKind::IndexOutOfRange, "module index " + std::to_string(idx));
  AlgebraObject a;
  for (const auto& x : m.matrices()) a.multiplicity.push_back(x(idx, idx));
  return a;
}

std::string to_string(const FusionRing& ring, const AlgebraObject& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.multiplicity.size(); ++i) {
    if (a.multiplicity[i] == 0) continue;
    if (!first) os << " + ";
    if (a.multiplicity[i] != 1) os << a.multiplicity[i] << ' ';
    os << ring.label(static_cast<int>(i));
    first = false;
  }
  return first ? "0" : os.str();
}

IntMatrix block_coefficients(const NimRep& m, int b, const std::vector<std::vector<int>>& blocks) {
  const auto n = static_cast<Eigen::Index>(blocks.size());
  IntMatrix c = IntMatrix::Zero(n, n);
  const IntMatrix& x = m.matrix(b);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const Integer v = x(blocks[i].front(), blocks[j].front());
      for (int t : blocks[i])
        for (int s : blocks[j])
          if (x(t, s) != v) throw Error(ErrorKind::ConditionViolated, "matrix is not constant on blocks");
      c(i, j) = v;
    }
  return c;
}

}  // namespace nimforge
