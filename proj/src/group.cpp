#include "nimforge/group.hpp"

#include "nimforge/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nimforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::FactorTooSmall: return "FactorTooSmall";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::OrderNotSquare: return "OrderNotSquare";
    case ErrorKind::BadP: return "BadP";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotRigid: return "NotRigid";
    case ErrorKind::UnitNotIdentity: return "UnitNotIdentity";
    case ErrorKind::InvertibleNotPermutation: return "InvertibleNotPermutation";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EntryBoundTooSmall: return "EntryBoundTooSmall";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
  }
  return "Unknown";
}

namespace {

void require_abelian(const FiniteGroup& g, const char* op) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, std::string(op) + " needs an abelian group");
}

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  // Finite, so closure under multiplication suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int prod : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!in[prod]) {
          in[prod] = 1;
          members.push_back(prod);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

int FiniteGroup::element_order(int a) const {
  int n = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

std::string FiniteGroup::element_label(int a) const {
  if (!factors_.empty()) {
    if (factors_.size() == 1) return std::to_string(a);
    std::ostringstream os;
    os << '(';
    int rest = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << ',';
      os << rest % factors_[i];
      rest /= factors_[i];
    }
    os << ')';
    return os.str();
  }
  return a == 0 ? "e" : "g" + std::to_string(a);
}

int FiniteGroup::parse_element(const std::string& text) const {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  for (int a = 0; a < order(); ++a)
    if (element_label(a) == t) return a;
  std::vector<int> digits;
  std::string body = t;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) digits.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, "cannot parse group element '" + text + "'");
  }
  if (digits.size() == 1 && digits[0] >= 0 && digits[0] < order() &&
      (factors_.size() <= 1 || digits[0] == 0))
    return digits[0];
  if (!factors_.empty() && digits.size() == factors_.size()) {
    int index = 0;
    int radix = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      index += ((digits[i] % factors_[i] + factors_[i]) % factors_[i]) * radix;
      radix *= factors_[i];
    }
    return index;
  }
  throw Error(ErrorKind::BadInput, "cannot parse group element '" + text + "'");
}

FiniteGroup group_from_table(FiniteGroup::Table table, std::string name, int order_limit) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::BadInput, "empty multiplication table");
  if (n > order_limit)
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds limit " + std::to_string(order_limit));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::BadInput, "table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw Error(ErrorKind::BadInput,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error(ErrorKind::NoIdentity, "element 0 is not a two-sided identity (fails at " +
                                             std::to_string(a) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                     "," + std::to_string(c) + ")");
  FiniteGroup g;
  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a));
  }
  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) {
        abelian = false;
        break;
      }
  g.abelian_ = abelian;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  return g;
}

FiniteGroup abelian_group(std::span<const int> invariant_factors, int order_limit) {
  if (invariant_factors.empty()) throw Error(ErrorKind::BadInput, "no invariant factors");
  long long order = 1;
  for (int f : invariant_factors) {
    if (f < 2) throw Error(ErrorKind::FactorTooSmall, "factor " + std::to_string(f));
    order *= f;
    if (order > order_limit)
      throw Error(ErrorKind::OrderTooLarge, "order exceeds limit " + std::to_string(order_limit));
  }
  const int n = static_cast<int>(order);
  const std::vector<int> factors(invariant_factors.begin(), invariant_factors.end());
  auto decode = [&](int x) {
    std::vector<int> d(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      d[i] = x % factors[i];
      x /= factors[i];
    }
    return d;
  };
  FiniteGroup::Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    const auto da = decode(a);
    for (int b = 0; b < n; ++b) {
      const auto db = decode(b);
      int index = 0;
      int radix = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        index += ((da[i] + db[i]) % factors[i]) * radix;
        radix *= factors[i];
      }
      table[a][b] = index;
    }
  }
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "xZ" : "Z") + std::to_string(factors[i]);
  FiniteGroup g = group_from_table(std::move(table), name, order_limit);
  g.factors_ = factors;
  return g;
}

FiniteGroup trivial_group() { return group_from_table({{0}}, "Z1"); }

FiniteGroup parse_group_shorthand(const std::string& text) {
  if (text == "1" || text == "Z1" || text == "trivial") return trivial_group();
  std::vector<int> factors;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
      throw Error(ErrorKind::BadInput, "bad group shorthand '" + text + "'");
    try {
      factors.push_back(std::stoi(part.substr(1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "bad group shorthand '" + text + "'");
    }
  }
  return abelian_group(factors);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0)
    throw Error(ErrorKind::NotASubgroup, "does not contain the identity");
  for (int m : members)
    if (m < 0 || m >= g.order()) throw Error(ErrorKind::NotASubgroup, "member out of range");
  Subgroup h{members};
  for (int a : members) {
    if (!h.contains(g.inverse(a)))
      throw Error(ErrorKind::NotASubgroup, "not closed under inverse at " + g.element_label(a));
    for (int b : members)
      if (!h.contains(g.mul(a, b)))
        throw Error(ErrorKind::NotASubgroup,
                    "not closed at " + g.element_label(a) + "*" + g.element_label(b));
  }
  if (g.order() % h.size() != 0) throw Error(ErrorKind::NotASubgroup, "order does not divide");
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> generators) {
  return Subgroup{closure(g, std::vector<int>(generators.begin(), generators.end()))};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int x = 0; x < g.order(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        auto seed = s;
        seed.push_back(x);
        auto h = closure(g, std::move(seed));
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> conjugate_members(const FiniteGroup& g, const Subgroup& h, int x) {
  std::vector<int> out;
  out.reserve(h.members.size());
  for (int m : h.members) out.push_back(g.mul(g.mul(x, m), g.inverse(x)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return false;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_members(g, a, x) == b.members) return true;
  return false;
}

std::vector<std::vector<int>> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                             const std::vector<Subgroup>& subgroups) {
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    index_of[subgroups[i].members] = static_cast<int>(i);
  std::vector<int> class_of(subgroups.size(), -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (class_of[i] >= 0) continue;
    std::set<int> members;
    for (int x = 0; x < g.order(); ++x) {
      auto it = index_of.find(conjugate_members(g, subgroups[i], x));
      if (it != index_of.end()) members.insert(it->second);
    }
    const int id = static_cast<int>(classes.size());
    for (int m : members) class_of[m] = id;
    classes.emplace_back(members.begin(), members.end());
  }
  return classes;
}

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(0)) throw Error(ErrorKind::NotASubgroup, "missing identity");
  for (int a : h.members) {
    if (a < 0 || a >= g.order() || !h.contains(g.inverse(a)))
      throw Error(ErrorKind::NotASubgroup, "not a subgroup of this group");
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) throw Error(ErrorKind::NotASubgroup, "not closed");
  }
  CosetSpace cs;
  cs.subgroup = h;
  cs.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (cs.coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int m : h.members) coset.push_back(g.mul(x, m));
    std::sort(coset.begin(), coset.end());
    const int id = cs.size();
    for (int y : coset) cs.coset_of[y] = id;
    cs.cosets.push_back(std::move(coset));
  }
  cs.action.assign(static_cast<std::size_t>(g.order()), std::vector<int>(cs.cosets.size()));
  for (int a = 0; a < g.order(); ++a)
    for (int c = 0; c < cs.size(); ++c) cs.action[a][c] = cs.coset_of[g.mul(a, cs.cosets[c].front())];
  return cs;
}

Subgroup doubled_subgroup(const FiniteGroup& g) {
  require_abelian(g, "doubled_subgroup");
  std::set<int> doubles;
  for (int x = 0; x < g.order(); ++x) doubles.insert(g.mul(x, x));
  return Subgroup{std::vector<int>(doubles.begin(), doubles.end())};
}

Quotient quotient(const FiniteGroup& g, const Subgroup& h) {
  require_abelian(g, "quotient");
  const CosetSpace cs = coset_space(g, h);
  const int n = cs.size();
  FiniteGroup::Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = cs.coset_of[g.mul(cs.cosets[a].front(), cs.cosets[b].front())];
  Quotient q{group_from_table(std::move(table), g.name().empty() ? "" : g.name() + "/H"), cs.coset_of, {}};
  for (const auto& c : cs.cosets) q.lift.push_back(c.front());
  return q;
}

int two_torsion_count(const FiniteGroup& g) {
  require_abelian(g, "two_torsion_count");
  int count = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == 0) ++count;
  return count;
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.members;
  gens.insert(gens.end(), b.members.begin(), b.members.end());
  return Subgroup{closure(g, std::move(gens))};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::NotASquare, "negative argument " + std::to_string(n));
  std::int64_t lo = 0;
  std::int64_t hi = std::min<std::int64_t>(n, 3037000499LL) + 1;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

std::int64_t exact_sqrt(std::int64_t n) {
  if (!is_perfect_square(n)) throw Error(ErrorKind::NotASquare, std::to_string(n));
  return isqrt(n);
}

}  // namespace nimforge
