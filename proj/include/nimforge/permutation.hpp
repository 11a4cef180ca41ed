#pragma once

#include <string>
#include <vector>

namespace nimforge {

/// A permutation of {0, ..., n-1} stored as its image list. Composition is
/// right-to-left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Parses 1-based cycle notation such as "(12)(34)", "(1 5)(2 6)" or "e".
  /// Multi-digit points need a separator inside the cycle.
  static Permutation from_cycles(const std::string& text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int order() const;
  bool is_identity() const;
  std::vector<int> fixed_points() const;
  std::vector<int> cycle_lengths() const;  ///< sorted, fixed points included

  /// 1-based cycle notation without fixed points; "e" for the identity.
  /// Points are space separated when n > 9.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace nimforge
