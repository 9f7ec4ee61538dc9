#include "nary/permutation.hpp"

#include "nary/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nary {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw InvalidPermutation("image array is not a permutation: " + str());
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (int& x : zero_based) --x;
  return Permutation(std::move(zero_based));
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[i])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  long e = k < 0 ? -k : k;
  Permutation out = identity(degree());
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int transpositions = 0;
  for (int i = 0; i < degree(); ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !visited[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      visited[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("composing permutations of different degree");
  std::vector<int> images(a.images_.size());
  for (int x = 0; x < a.degree(); ++x) images[static_cast<std::size_t>(x)] = a(b(x));
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

int sorting_sign(std::span<const int> seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace nary
