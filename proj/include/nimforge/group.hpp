#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nimforge {

inline constexpr int kDefaultOrderLimit = 64;

/// A finite group given by its multiplication table. Element 0 is the identity.
///
/// Groups built by `abelian_group` remember their invariant factors so that
/// elements can be printed and parsed as tuples, e.g. "(1,0)" in Z2xZ2.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<int>>;

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  bool is_abelian() const { return abelian_; }
  const Table& table() const { return table_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& factors() const { return factors_; }

  /// Additive order of `a` (smallest n >= 1 with a^n = identity).
  int element_order(int a) const;

  /// "e", "3", "(1,0)" or "g5" depending on how the group was built.
  std::string element_label(int a) const;

  /// Inverse of element_label; also accepts a plain element index.
  int parse_element(const std::string& text) const;

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  friend FiniteGroup group_from_table(Table table, std::string name, int order_limit);
  friend FiniteGroup abelian_group(std::span<const int> invariant_factors, int order_limit);

  Table table_;
  std::vector<int> inverse_;
  bool abelian_ = false;
  std::string name_;
  std::vector<int> factors_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted member list of a subgroup. Ordering is (size, lexicographic members),
/// which is the canonical subgroup order used for catalogs.
struct Subgroup {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

/// Left cosets xH, each sorted, listed by least member; action[g][c] is the
/// index of the coset g.(coset c).
struct CosetSpace {
  Subgroup subgroup;
  std::vector<std::vector<int>> cosets;
  std::vector<std::vector<int>> action;
  std::vector<int> coset_of;  ///< element -> index of its coset

  int size() const { return static_cast<int>(cosets.size()); }
};

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  ///< element of the parent -> element of the quotient
  std::vector<int> lift;        ///< quotient element -> least representative
};

FiniteGroup group_from_table(FiniteGroup::Table table, std::string name = {},
                             int order_limit = kDefaultOrderLimit);

FiniteGroup abelian_group(std::span<const int> invariant_factors,
                          int order_limit = kDefaultOrderLimit);

inline FiniteGroup abelian_group(std::initializer_list<int> invariant_factors) {
  return abelian_group(std::span<const int>(invariant_factors.begin(), invariant_factors.size()));
}

FiniteGroup trivial_group();

/// Parses "Z2xZ2", "Z4", "Z2xZ4", "1" / "Z1" (trivial group).
FiniteGroup parse_group_shorthand(const std::string& text);

/// Validated subgroup from a member list; throws NotASubgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> generators);

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

/// Partition of `subgroups` (indices into that list) into conjugacy classes,
/// each class sorted, classes ordered by their least index.
std::vector<std::vector<int>> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                             const std::vector<Subgroup>& subgroups);

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h);

/// The subgroup {x + x}. Throws NotAbelian.
Subgroup doubled_subgroup(const FiniteGroup& g);

/// G/H for abelian G. Throws NotAbelian.
Quotient quotient(const FiniteGroup& g, const Subgroup& h);

/// |{x : x + x = 0}|. Throws NotAbelian.
int two_torsion_count(const FiniteGroup& g);

/// The subgroup generated by the union of two subgroups (their sum, when abelian).
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_perfect_square(std::int64_t n);

/// Exact integer square root; throws NotASquare.
std::int64_t exact_sqrt(std::int64_t n);

/// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

}  // namespace nimforge
