#pragma once

// Lexicographic ranking of k-subsets of [n] = {1,...,n}. Ground-set labels
// are 1-based everywhere; ranks are 0-based positions in lex order.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chirotrop {

using Subset = std::vector<int>;  // strictly increasing labels in [n]

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline void check_subset(const Subset& s, int n) {
  int prev = 0;
  for (int x : s) {
    if (x <= prev || x > n) {
      throw std::invalid_argument("subset must be strictly increasing within [1," +
                                  std::to_string(n) + "]");
    }
    prev = x;
  }
}

/// 0-based position of a k-subset in the lex order of all k-subsets of [n].
inline std::size_t lex_rank(const Subset& s, int n) {
  check_subset(s, n);
  const int k = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < s[i]; ++x) {
      rank += binomial(n - x, k - 1 - i);
    }
    prev = s[i];
  }
  return static_cast<std::size_t>(rank);
}

/// Inverse of lex_rank: the k-subset of [n] at a given lex position.
inline Subset lex_unrank(std::size_t rank, int k, int n) {
  if (rank >= binomial(n, k)) throw std::out_of_range("subset rank out of range");
  Subset s;
  s.reserve(k);
  std::uint64_t r = rank;
  int x = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t c = binomial(n - x, k - 1 - i);
      if (r < c) break;
      r -= c;
      ++x;
    }
    s.push_back(x);
    ++x;
  }
  return s;
}

/// All k-subsets of [n] in lex order.
inline std::vector<Subset> all_subsets(int k, int n) {
  std::vector<Subset> out;
  out.reserve(binomial(n, k));
  for (std::size_t r = 0; r < binomial(n, k); ++r) out.push_back(lex_unrank(r, k, n));
  return out;
}

inline std::string subset_label(const Subset& s) {
  std::string out;
  for (int x : s) out += std::to_string(x);
  return out;
}

}  // namespace chirotrop
