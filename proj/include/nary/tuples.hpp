#pragma once

#include <span>
#include <string>
#include <vector>

namespace nary {

using IndexTuple = std::vector<int>;

/// Calls fn(tuple) on every strictly increasing k-tuple from {0..p-1} in
/// lexicographic order. Stops early when fn returns false; returns false
/// in that case.
template <class Fn>
bool for_each_increasing(int k, int p, Fn&& fn) {
  if (k < 0 || k > p) return true;
  IndexTuple t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    if (!fn(static_cast<const IndexTuple&>(t))) return false;
    int i = k - 1;
    while (i >= 0 && t[i] == p - k + i) --i;
    if (i < 0) return true;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

/// Same for all k-tuples of {0..p-1} (p^k of them), lexicographic.
template <class Fn>
bool for_each_tuple(int k, int p, Fn&& fn) {
  if (p <= 0 && k > 0) return true;
  IndexTuple t(static_cast<std::size_t>(k), 0);
  while (true) {
    if (!fn(static_cast<const IndexTuple&>(t))) return false;
    int i = k - 1;
    while (i >= 0 && t[i] == p - 1) t[i--] = 0;
    if (i < 0) return true;
    ++t[i];
  }
}

/// Same for non-decreasing k-tuples.
template <class Fn>
bool for_each_nondecreasing(int k, int p, Fn&& fn) {
  if (p <= 0 && k > 0) return true;
  IndexTuple t(static_cast<std::size_t>(k), 0);
  while (true) {
    if (!fn(static_cast<const IndexTuple&>(t))) return false;
    int i = k - 1;
    while (i >= 0 && t[i] == p - 1) --i;
    if (i < 0) return true;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[i];
  }
}

inline std::vector<IndexTuple> increasing_tuples(int k, int p) {
  std::vector<IndexTuple> out;
  for_each_increasing(k, p, [&](const IndexTuple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

/// `1 2 3`, 1-based.
inline std::string format_tuple(std::span<const int> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t[i] + 1);
  }
  return s;
}

}  // namespace nary
