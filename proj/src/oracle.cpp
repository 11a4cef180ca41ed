#include "nimforge/oracle.hpp"

#include "nimforge/error.hpp"
#include "nimforge/isomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace nimforge {

int default_threads() {
  if (const char* env = std::getenv("NIMFORGE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::vector<std::vector<Subgroup>> enumerate_gsets(const FusionRing& ring, int d) {
  const FiniteGroup g = invertible_group(ring);
  const std::vector<Subgroup> subs = enumerate_subgroups(g);
  std::vector<Subgroup> reps;
  for (const auto& cls : conjugacy_classes_of_subgroups(g, subs)) reps.push_back(subs[cls.front()]);
  std::vector<std::vector<Subgroup>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      std::vector<Subgroup> set;
      for (int i : chosen) set.push_back(reps[i]);
      out.push_back(std::move(set));
      return;
    }
    for (int i = start; i < static_cast<int>(reps.size()); ++i) {
      const int index = g.order() / reps[i].size();
      if (index > left) continue;
      chosen.push_back(i);
      self(self, i, left - index);
      chosen.pop_back();
    }
  };
  if (d > 0) rec(rec, 0, d);
  return out;
}

namespace {

struct Prod {
  int u, v;
  auto operator<=>(const Prod&) const = default;
};

struct Lin {
  Integer coef;
  int var;
  auto operator<=>(const Lin&) const = default;
};

/// sum(prods) - sum(lins) == constant
struct Equation {
  std::vector<Prod> prods;
  std::vector<Lin> lins;
  Integer constant = 0;
  auto operator<=>(const Equation&) const = default;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Problem {
  int d = 0;
  std::vector<int> noninv;           // ring indices
  std::vector<IntMatrix> fixed;      // per ring index: permutation matrix for invertibles
  std::vector<int> var_of;           // position (bi, r, c) -> var
  std::vector<Integer> ub;
  std::optional<Integer> cap;        // user's entry bound, checked on solutions
  std::vector<Equation> eqs;
  std::vector<std::vector<int>> eqs_of_var;
  std::vector<std::vector<int>> positions;  // var -> positions
  std::vector<int> point_orbit;
  bool hints = false;

  int pos(int bi, int r, int c) const { return (bi * d + r) * d + c; }
  int nvars() const { return static_cast<int>(ub.size()); }
};

Problem make_problem(const FusionRing& ring, const std::vector<Subgroup>& gset, const std::vector<Integer>& label_bound,
                     const std::optional<Integer>& cap, bool hints) {
  const FiniteGroup g = invertible_group(ring);
  const auto& inv = ring.invertibles();
  Problem pb;
  pb.noninv = ring.non_invertibles();
  pb.hints = hints;
  std::vector<int> offset;
  std::vector<CosetSpace> spaces;
  for (std::size_t j = 0; j < gset.size(); ++j) {
    spaces.push_back(coset_space(g, gset[j]));
    offset.push_back(pb.d);
    for (int c = 0; c < spaces.back().size(); ++c) pb.point_orbit.push_back(static_cast<int>(j));
    pb.d += spaces.back().size();
  }
  const int d = pb.d;
  std::vector<std::vector<int>> act(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(d)));
  pb.fixed.assign(static_cast<std::size_t>(ring.size()), IntMatrix());
  for (int a = 0; a < g.order(); ++a) {
    IntMatrix p = IntMatrix::Zero(d, d);
    for (std::size_t j = 0; j < spaces.size(); ++j)
      for (int c = 0; c < spaces[j].size(); ++c) {
        act[a][offset[j] + c] = offset[j] + spaces[j].action[a][c];
        p(offset[j] + spaces[j].action[a][c], offset[j] + c) = 1;
      }
    pb.fixed[inv[a]] = std::move(p);
  }

  const int nb = static_cast<int>(pb.noninv.size());
  std::vector<int> bindex(static_cast<std::size_t>(ring.size()), -1);
  for (int i = 0; i < nb; ++i) bindex[pb.noninv[i]] = i;
  auto need = [&](int k) {
    if (k < 0 || bindex[k] < 0) throw Error(ErrorKind::BadInput, "invertible times non-invertible is not a non-invertible basis element");
    return bindex[k];
  };
  UnionFind uf(nb * d * d);
  for (int bi = 0; bi < nb; ++bi) {
    const int b = pb.noninv[bi];
    const int dual = need(ring.dual(b));
    for (int a = 0; a < g.order(); ++a) {
      const int left = need(ring.simple_product(inv[a], b));
      const int right = need(ring.simple_product(b, inv[a]));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          uf.unite(pb.pos(left, act[a][r], c), pb.pos(bi, r, c));
          uf.unite(pb.pos(right, r, c), pb.pos(bi, r, act[a][c]));
        }
    }
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) uf.unite(pb.pos(dual, c, r), pb.pos(bi, r, c));
  }
  std::map<int, int> var_of_root;
  pb.var_of.resize(static_cast<std::size_t>(nb * d * d));
  for (int p = 0; p < nb * d * d; ++p) {
    auto [it, fresh] = var_of_root.try_emplace(uf.find(p), static_cast<int>(var_of_root.size()));
    pb.var_of[p] = it->second;
    if (fresh) {
      pb.positions.emplace_back();
      pb.ub.push_back(label_bound[pb.noninv[p / (d * d)]]);
    }
    pb.positions[it->second].push_back(p);
    pb.ub[it->second] = std::min(pb.ub[it->second], label_bound[pb.noninv[p / (d * d)]]);
  }

  std::set<Equation> unique;
  for (int ai = 0; ai < nb; ++ai)
    for (int bi = 0; bi < nb; ++bi) {
      const int a = pb.noninv[ai];
      const int b = pb.noninv[bi];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          Equation eq;
          for (int t = 0; t < d; ++t) {
            int u = pb.var_of[pb.pos(ai, r, t)];
            int v = pb.var_of[pb.pos(bi, t, c)];
            if (u > v) std::swap(u, v);
            eq.prods.push_back({u, v});
          }
          std::map<int, Integer> lin;
          for (const auto& [k, n] : ring.terms(a, b)) {
            if (ring.is_invertible(k)) {
              eq.constant += n * pb.fixed[k](r, c);
            } else {
              lin[pb.var_of[pb.pos(bindex[k], r, c)]] += n;
            }
          }
          for (const auto& [var, n] : lin) eq.lins.push_back({n, var});
          std::sort(eq.prods.begin(), eq.prods.end());
          unique.insert(std::move(eq));
        }
    }
  pb.eqs.assign(unique.begin(), unique.end());

  // u^2 <= constant + sum of the linear part's upper bound
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& eq : pb.eqs) {
      Integer rhs = eq.constant;
      for (const auto& l : eq.lins) rhs += l.coef * pb.ub[l.var];
      for (const auto& p : eq.prods)
        if (p.u == p.v) pb.ub[p.u] = std::min(pb.ub[p.u], isqrt(std::max<Integer>(rhs, 0)));
    }
  pb.cap = cap;

  pb.eqs_of_var.resize(pb.ub.size());
  for (int e = 0; e < static_cast<int>(pb.eqs.size()); ++e) {
    std::set<int> vars;
    for (const auto& p : pb.eqs[e].prods) vars.insert({p.u, p.v});
    for (const auto& l : pb.eqs[e].lins) vars.insert(l.var);
    for (int v : vars) pb.eqs_of_var[v].push_back(e);
  }
  return pb;
}

struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<long long> nodes{0};
  std::chrono::steady_clock::time_point start;
  std::optional<double> budget;
};

class Solver {
 public:
  Solver(const RingPtr& ring, const Problem& pb, bool reverse, bool irreducible, Shared& shared)
      : ring_(ring), pb_(pb), reverse_(reverse), irreducible_(irreducible), shared_(shared) {
    const int n = pb.nvars();
    lo_.assign(static_cast<std::size_t>(n), 0);
    hi_ = pb.ub;
    assigned_.assign(static_cast<std::size_t>(n), 0);
    open_.resize(pb.eqs.size());
    for (std::size_t e = 0; e < pb.eqs.size(); ++e) {
      std::set<int> vars;
      for (const auto& p : pb.eqs[e].prods) vars.insert({p.u, p.v});
      for (const auto& l : pb.eqs[e].lins) vars.insert(l.var);
      open_[e] = static_cast<int>(vars.size());
      eq_vars_.emplace_back(vars.begin(), vars.end());
    }
  }

  void run() {
    for (std::size_t e = 0; e < pb_.eqs.size(); ++e)
      if (!feasible(static_cast<int>(e))) return;
    search(0);
  }

  std::vector<NimRep> solutions;
  bool cap_hit = false;

 private:
  bool feasible(int e) const {
    const Equation& eq = pb_.eqs[e];
    Integer low = 0, high = 0;
    for (const auto& p : eq.prods) {
      low += lo_[p.u] * lo_[p.v];
      high += hi_[p.u] * hi_[p.v];
    }
    for (const auto& l : eq.lins) {
      low -= l.coef * hi_[l.var];
      high -= l.coef * lo_[l.var];
    }
    return low <= eq.constant && eq.constant <= high;
  }

  bool hint_ok(int var) const {
    if (!pb_.hints) return true;
    const int d = pb_.d;
    for (int p : pb_.positions[var]) {
      const int bi = p / (d * d);
      const int r = (p / d) % d;
      const int c = p % d;
      for (int r2 = 0; r2 < d; ++r2) {
        if (pb_.point_orbit[r2] == pb_.point_orbit[r]) continue;
        const int w = pb_.var_of[pb_.pos(bi, r2, c)];
        if (assigned_[w] && lo_[w] > 0) return false;
      }
    }
    return true;
  }

  int choose() const {
    int best_eq = -1;
    for (std::size_t e = 0; e < open_.size(); ++e)
      if (open_[e] > 0 && (best_eq < 0 || open_[e] < open_[best_eq])) best_eq = static_cast<int>(e);
    if (best_eq >= 0)
      for (int v : eq_vars_[best_eq])
        if (!assigned_[v]) return v;
    for (int v = 0; v < pb_.nvars(); ++v)
      if (!assigned_[v]) return v;
    return -1;
  }

  bool out_of_time() {
    const long long n = ++shared_.nodes;
    if (shared_.stop.load(std::memory_order_relaxed)) return true;
    if (shared_.budget && (n & 1023) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - shared_.start).count();
      if (elapsed > *shared_.budget) shared_.stop = true;
    }
    return shared_.stop.load(std::memory_order_relaxed);
  }

  void search(int depth) {
    if (out_of_time()) return;
    const int var = choose();
    if (var < 0) {
      record();
      return;
    }
    assigned_[var] = 1;
    for (int e : pb_.eqs_of_var[var]) --open_[e];
    const Integer top = pb_.ub[var];
    for (Integer i = 0; i <= top; ++i) {
      const Integer value = reverse_ ? top - i : i;
      lo_[var] = hi_[var] = value;
      bool ok = value == 0 || hint_ok(var);
      for (std::size_t k = 0; ok && k < pb_.eqs_of_var[var].size(); ++k) ok = feasible(pb_.eqs_of_var[var][k]);
      if (ok) search(depth + 1);
    }
    for (int e : pb_.eqs_of_var[var]) ++open_[e];
    assigned_[var] = 0;
    lo_[var] = 0;
    hi_[var] = pb_.ub[var];
  }

  void record() {
    const int d = pb_.d;
    std::vector<IntMatrix> mats(pb_.fixed.size());
    for (std::size_t k = 0; k < mats.size(); ++k)
      if (pb_.fixed[k].size() > 0) mats[k] = pb_.fixed[k];
    for (std::size_t bi = 0; bi < pb_.noninv.size(); ++bi) {
      IntMatrix m(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = lo_[pb_.var_of[pb_.pos(static_cast<int>(bi), r, c)]];
      mats[pb_.noninv[bi]] = std::move(m);
    }
    NimRep rep(ring_, std::move(mats));
    if (irreducible_ && !is_irreducible(rep)) return;
    for (int v = 0; v < pb_.nvars(); ++v)
      if (pb_.cap && lo_[v] > *pb_.cap) cap_hit = true;
    solutions.push_back(std::move(rep));
  }

  const RingPtr& ring_;
  const Problem& pb_;
  bool reverse_;
  bool irreducible_;
  Shared& shared_;
  std::vector<Integer> lo_, hi_;
  std::vector<char> assigned_;
  std::vector<int> open_;
  std::vector<std::vector<int>> eq_vars_;
};

bool lex_less(const NimRep& a, const NimRep& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t k = 0; k < a.matrices().size(); ++k) {
    const IntMatrix& x = a.matrices()[k];
    const IntMatrix& y = b.matrices()[k];
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x.data()[i] != y.data()[i]) return x.data()[i] < y.data()[i];
  }
  return false;
}

}  // namespace

OracleResult enumerate_all(const RingPtr& ring, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  result.hinted = cfg.use_hints && ring->descriptor().family != RingFamily::Custom;

  std::vector<Integer> label_bound(static_cast<std::size_t>(ring->size()), 0);
  for (int b : ring->non_invertibles()) {
    const IntVector square = multiply(*ring, basis_vector(*ring, b), basis_vector(*ring, ring->dual(b)));
    label_bound[b] = isqrt(fpdim_upper_bound(*ring, square));
    result.entry_bound = std::max(result.entry_bound, label_bound[b]);
  }

  std::vector<std::vector<Subgroup>> gsets;
  for (int d = 1; d <= cfg.max_dim; ++d)
    for (auto& s : enumerate_gsets(*ring, d)) gsets.push_back(std::move(s));
  if (cfg.reverse_order) std::reverse(gsets.begin(), gsets.end());
  result.gsets = static_cast<long long>(gsets.size());

  Shared shared;
  shared.start = start;
  shared.budget = cfg.time_budget_seconds;
  std::vector<std::vector<NimRep>> found(gsets.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cap_hit{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < gsets.size(); i = next++) {
        if (shared.stop) break;
        const Problem pb = make_problem(*ring, gsets[i], label_bound, cfg.entry_bound, result.hinted);
        Solver solver(ring, pb, cfg.reverse_order, cfg.require_irreducible, shared);
        solver.run();
        if (solver.cap_hit) cap_hit = true;
        found[i] = std::move(solver.solutions);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      shared.stop = true;
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads > 0 ? cfg.threads : default_threads(),
                                                static_cast<int>(gsets.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (cap_hit)
    throw Error(ErrorKind::EntryBoundTooSmall, "a solution exceeds the entry cap " + std::to_string(*cfg.entry_bound) +
                                                   " (derived bound " + std::to_string(result.entry_bound) + ")");

  std::vector<NimRep> all;
  for (auto& f : found)
    for (auto& rep : f) all.push_back(std::move(rep));
  result.solutions = static_cast<long long>(all.size());
  std::sort(all.begin(), all.end(), lex_less);
  std::map<std::vector<NodeSignature>, std::vector<std::size_t>> buckets;
  for (auto& rep : all) {
    auto& bucket = buckets[invariant_key(rep)];
    bool dup = false;
    for (std::size_t i : bucket)
      if (are_isomorphic(result.reps[i], rep)) {
        dup = true;
        break;
      }
    if (dup) continue;
    bucket.push_back(result.reps.size());
    result.reps.push_back(std::move(rep));
  }
  result.complete = !shared.stop;
  result.nodes = shared.nodes;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CrossCheckReport cross_check(const std::vector<NimRep>& classifier, const std::vector<NimRep>& oracle) {
  CrossCheckReport report;
  report.classifier_count = static_cast<int>(classifier.size());
  report.oracle_count = static_cast<int>(oracle.size());
  std::vector<char> used(oracle.size(), 0);
  for (std::size_t i = 0; i < classifier.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j)
      if (are_isomorphic(classifier[j], classifier[i])) {
        report.duplicate_classifier.emplace_back(static_cast<int>(i), static_cast<int>(j));
        dup = true;
      }
    if (dup) continue;
    bool hit = false;
    for (std::size_t k = 0; k < oracle.size() && !hit; ++k)
      if (!used[k] && are_isomorphic(classifier[i], oracle[k])) {
        used[k] = 1;
        report.matched.emplace_back(static_cast<int>(i), static_cast<int>(k));
        hit = true;
      }
    if (!hit) report.only_classifier.push_back(static_cast<int>(i));
  }
  for (std::size_t k = 0; k < oracle.size(); ++k)
    if (!used[k]) report.only_oracle.push_back(static_cast<int>(k));
  return report;
}

}  // namespace nimforge
