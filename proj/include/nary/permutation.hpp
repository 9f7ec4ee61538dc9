#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace nary {

/// Bijection of {0, ..., m-1} stored as its image array. Composition is
/// right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  /// Images given 0-based. Throws InvalidPermutation unless bijective.
  explicit Permutation(std::vector<int> images);
  /// Images given 1-based, as written in two-line notation.
  static Permutation from_one_based(std::span<const int> images);
  static Permutation identity(int m);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(long k) const;
  /// +1 or -1.
  int sign() const;
  bool is_identity() const;

  /// `[2 3 1]`, 1-based.
  std::string str() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// All permutations of degree m in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int m);

/// Sign of the permutation that sorts `seq` (distinct entries), or 0 if
/// `seq` has a repeated entry.
int sorting_sign(std::span<const int> seq);

}  // namespace nary
