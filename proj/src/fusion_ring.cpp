#include "nimforge/fusion_ring.hpp"

#include "nimforge/error.hpp"

#include <algorithm>

namespace nimforge {

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       std::vector<Integer> coefficients, std::vector<int> invertibles,
                       RingDescriptor descriptor)
    : labels_(std::move(labels)),
      unit_(unit),
      dual_(std::move(dual)),
      coefficients_(std::move(coefficients)),
      invertibles_(std::move(invertibles)),
      descriptor_(std::move(descriptor)) {
  const std::size_t count = labels_.size();
  if (count == 0) throw Error(ErrorKind::BadInput, "empty basis");
  if (unit_ < 0 || static_cast<std::size_t>(unit_) >= count) throw Error(ErrorKind::BadInput, "unit out of range");
  if (dual_.size() != count) throw Error(ErrorKind::DimensionMismatch, "dual list has wrong length");
  for (int d : dual_)
    if (d < 0 || static_cast<std::size_t>(d) >= count) throw Error(ErrorKind::BadInput, "dual out of range");
  if (coefficients_.size() != count * count * count)
    throw Error(ErrorKind::DimensionMismatch, "structure constants have wrong size");
  for (Integer c : coefficients_)
    if (c < 0) throw Error(ErrorKind::NegativeEntry, "negative structure constant");
  invertible_flag_.assign(count, 0);
  for (int g : invertibles_) {
    if (g < 0 || static_cast<std::size_t>(g) >= count) throw Error(ErrorKind::BadInput, "invertible index out of range");
    invertible_flag_[static_cast<std::size_t>(g)] = 1;
  }
  if (invertibles_.empty() || invertibles_.front() != unit_)
    throw Error(ErrorKind::BadInput, "invertible list must start with the unit");
  terms_.resize(count * count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k)
        if (Integer c = coefficients_[(i * count + j) * count + k]; c != 0)
          terms_[i * count + j].emplace_back(static_cast<int>(k), c);
}

int FusionRing::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  throw Error(ErrorKind::BadInput, "no basis element labelled '" + label + "'");
}

int FusionRing::simple_product(int i, int j) const {
  const auto& t = terms(i, j);
  return t.size() == 1 && t.front().second == 1 ? t.front().first : -1;
}

std::vector<int> FusionRing::non_invertibles() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!is_invertible(i)) out.push_back(i);
  return out;
}

IntMatrix FusionRing::left_matrix(int i) const {
  IntMatrix l = IntMatrix::Zero(size(), size());
  for (int j = 0; j < size(); ++j)
    for (const auto& [k, c] : terms(i, j)) l(k, j) = c;
  return l;
}

RingPtr jl_ring(GroupPtr g, int p) {
  if (p < 2) throw Error(ErrorKind::BadP, "p = " + std::to_string(p) + " < 2");
  const int order = g->order();
  Integer root = 0;
  if (p > 2) {
    if (!is_perfect_square(order))
      throw Error(ErrorKind::OrderNotSquare, "|G| = " + std::to_string(order) + " is not a square");
    root = exact_sqrt(order);
  }
  const int n = order + p - 1;
  auto x = [&](int k) { return order + ((k % p) + p) % p - 1; };  // k not divisible by p
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) labels.push_back(g->element_label(a));
  for (int k = 1; k < p; ++k) labels.push_back("X_" + std::to_string(k));
  std::vector<int> dual(static_cast<std::size_t>(n));
  for (int a = 0; a < order; ++a) dual[a] = g->inverse(a);
  for (int k = 1; k < p; ++k) dual[x(k)] = x(p - k);

  const auto un = static_cast<std::size_t>(n);
  std::vector<Integer> coeff(un * un * un, 0);
  auto set = [&](int i, int j, int k, Integer v) {
    coeff[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(k)] = v;
  };
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) set(a, b, g->mul(a, b), 1);
    for (int k = 1; k < p; ++k) {
      set(a, x(k), x(k), 1);
      set(x(k), a, x(k), 1);
    }
  }
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < p; ++j) {
      if ((i + j) % p == 0) {
        for (int a = 0; a < order; ++a) set(x(i), x(j), a, 1);
      } else {
        set(x(i), x(j), x(i + j), root);
      }
    }
  }
  std::vector<int> invertibles(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) invertibles[a] = a;
  RingDescriptor desc{RingFamily::JordanLarson, g, p, 0, false};
  return std::make_shared<const FusionRing>(std::move(labels), 0, std::move(dual), std::move(coeff),
                                            std::move(invertibles), std::move(desc));
}

int jl_x_index(const FusionRing& ring, int k) {
  const int p = ring.descriptor().p;
  const int r = ((k % p) + p) % p;
  if (r == 0) throw Error(ErrorKind::IndexOutOfRange, "X_k needs k not divisible by p");
  return ring.descriptor().group->order() + r - 1;
}

RingPtr glm_ring(GroupPtr gamma, int delta, bool allow_odd) {
  if (!gamma->is_abelian()) throw Error(ErrorKind::NotAbelian, "Gamma must be abelian");
  if (gamma->order() % 2 != 0 && !allow_odd)
    throw Error(ErrorKind::OddOrder, "|Gamma| = " + std::to_string(gamma->order()) + " is odd");
  if (delta < 0 || delta >= gamma->order()) throw Error(ErrorKind::BadInput, "delta out of range");
  const Subgroup doubled = doubled_subgroup(*gamma);
  const Quotient q = quotient(*gamma, doubled);
  const int order = gamma->order();
  const int nq = q.group.order();
  const int n = order + nq;
  const int delta_bar = q.projection[delta];

  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) labels.push_back(gamma->element_label(a));
  for (int c = 0; c < nq; ++c) labels.push_back("X_[" + gamma->element_label(q.lift[c]) + "]");
  std::vector<int> dual(static_cast<std::size_t>(n));
  for (int a = 0; a < order; ++a) dual[a] = gamma->inverse(a);
  for (int c = 0; c < nq; ++c) dual[order + c] = order + q.group.mul(q.group.inverse(c), q.group.inverse(delta_bar));

  const auto un = static_cast<std::size_t>(n);
  std::vector<Integer> coeff(un * un * un, 0);
  auto set = [&](int i, int j, int k, Integer v) {
    coeff[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(k)] = v;
  };
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) set(a, b, gamma->mul(a, b), 1);
    for (int c = 0; c < nq; ++c) {
      const int shifted = order + q.group.mul(q.projection[a], c);
      set(a, order + c, shifted, 1);
      set(order + c, a, shifted, 1);
    }
  }
  for (int c = 0; c < nq; ++c)
    for (int d = 0; d < nq; ++d) {
      const int target = q.group.mul(delta_bar, q.group.mul(c, d));
      for (int t = 0; t < order; ++t)
        if (q.projection[t] == target) set(order + c, order + d, t, 1);
    }
  std::vector<int> invertibles(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) invertibles[a] = a;
  RingDescriptor desc{RingFamily::Glm, gamma, 0, delta_bar, order % 2 != 0};
  return std::make_shared<const FusionRing>(std::move(labels), 0, std::move(dual), std::move(coeff),
                                            std::move(invertibles), std::move(desc));
}

int glm_x_index(const FusionRing& ring, int q) { return ring.descriptor().group->order() + q; }

AxiomReport verify_axioms(const FusionRing& ring, std::size_t max_violations) {
  AxiomReport report;
  const int n = ring.size();
  auto add = [&](std::string axiom, std::array<int, 4> w, std::string detail) {
    if (report.violations.size() < max_violations)
      report.violations.push_back({std::move(axiom), w, std::move(detail)});
  };
  const int u = ring.unit();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Integer expect = j == k ? 1 : 0;
      if (ring.coeff(u, j, k) != expect) add("unit", {u, j, k, -1}, "unit * b_j != b_j");
      if (ring.coeff(j, u, k) != expect) add("unit", {j, u, k, -1}, "b_j * unit != b_j");
    }

  // (b_i b_j) b_l == b_i (b_j b_l), compared coefficientwise.
  std::vector<Integer> lhs(static_cast<std::size_t>(n));
  std::vector<Integer> rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [k, c] : ring.terms(i, j))
          for (const auto& [m, d] : ring.terms(k, l)) lhs[m] += c * d;
        for (const auto& [k, c] : ring.terms(j, l))
          for (const auto& [m, d] : ring.terms(i, k)) rhs[m] += c * d;
        for (int m = 0; m < n; ++m)
          if (lhs[m] != rhs[m])
            add("associativity", {i, j, l, m},
                "(b_i b_j) b_l has " + std::to_string(lhs[m]) + ", b_i (b_j b_l) has " + std::to_string(rhs[m]));
      }

  for (int i = 0; i < n; ++i) {
    if (ring.dual(ring.dual(i)) != i) add("involution", {i, -1, -1, -1}, "dual is not an involution");
    for (int j = 0; j < n; ++j) {
      const Integer expect = j == ring.dual(i) ? 1 : 0;
      if (ring.coeff(i, j, u) != expect) add("duality", {i, j, u, -1}, "N_ij^unit must be 1 iff j = i*");
    }
  }

  for (int g : ring.invertibles()) {
    if (!ring.is_invertible(ring.dual(g))) add("invertibles", {g, -1, -1, -1}, "not closed under dual");
    for (int h : ring.invertibles()) {
      const int prod = ring.simple_product(g, h);
      if (prod < 0 || !ring.is_invertible(prod))
        add("invertibles", {g, h, prod, -1}, "product of invertibles is not a single invertible");
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (ring.coeff(i, j, k) != ring.coeff(ring.dual(i), k, j))
          add("frobenius", {i, j, k, -1}, "N_ij^k != N_{i*k}^j");
  return report;
}

IntVector basis_vector(const FusionRing& ring, int i) {
  IntVector v = IntVector::Zero(ring.size());
  v(i) = 1;
  return v;
}

IntVector multiply(const FusionRing& ring, const IntVector& x, const IntVector& y) {
  if (x.size() != ring.size() || y.size() != ring.size())
    throw Error(ErrorKind::DimensionMismatch, "ring elements must have one coefficient per basis element");
  IntVector out = IntVector::Zero(ring.size());
  for (int i = 0; i < ring.size(); ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < ring.size(); ++j) {
      if (y(j) == 0) continue;
      for (const auto& [k, c] : ring.terms(i, j)) out(k) += x(i) * y(j) * c;
    }
  }
  return out;
}

FiniteGroup invertible_group(const FusionRing& ring) {
  const auto& inv = ring.invertibles();
  const int order = static_cast<int>(inv.size());
  std::vector<int> position(static_cast<std::size_t>(ring.size()), -1);
  for (int a = 0; a < order; ++a) position[inv[a]] = a;
  FiniteGroup::Table table(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int prod = ring.simple_product(inv[a], inv[b]);
      if (prod < 0 || position[prod] < 0)
        throw Error(ErrorKind::BadInput, "invertible elements do not form a group");
      table[a][b] = position[prod];
    }
  return group_from_table(std::move(table), "invertibles", 1 << 20);
}

Integer fpdim_upper_bound(const FusionRing& ring, const IntVector& x) {
  Integer best = 0;
  for (int j = 0; j < ring.size(); ++j) {
    Integer column = 0;
    for (int i = 0; i < ring.size(); ++i) {
      if (x(i) == 0) continue;
      for (const auto& [k, c] : ring.terms(i, j)) column += x(i) * c;
    }
    best = std::max(best, column);
  }
  return best;
}

}  // namespace nimforge
