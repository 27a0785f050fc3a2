#pragma once

// Exact arithmetic primitives shared by the whole library: arbitrary-precision
// integers/rationals, fraction-free rank computation, and rational row
// reduction. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chirotrop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Divide an integer vector by the gcd of its entries (keeps signs).
/// The zero vector is returned unchanged.
inline void make_primitive(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = int_gcd(g, x);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (Int& x : v) x /= g;
}

inline bool is_zero_vector(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// Rank of an integer matrix via Bareiss fraction-free elimination.
/// Destroys its argument. Entries stay integral throughout; the exact
/// divisions are guaranteed by the Bareiss recurrence.
inline std::size_t rank_destructive(IntMat& m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  std::size_t col = 0;
  Int prev = 1;
  while (rank < rows && col < cols) {
    // pivot search in the current column
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) {
      ++col;
      continue;
    }
    if (piv != rank) std::swap(m[piv], m[rank]);
    const Int pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * pivot - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++rank;
    ++col;
  }
  return rank;
}

inline std::size_t rank_of(IntMat m) { return rank_destructive(m); }

/// Reduced row echelon form over the rationals. Returns the pivot column of
/// each nonzero row; rows below the rank are removed.
inline std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Rat inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Scale a rational vector to a primitive integer vector (common denominator,
/// then divide by the gcd). Direction is preserved.
inline IntVec scale_to_primitive(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) {
    const Int d = denominator(x);
    lcm = lcm / int_gcd(lcm, d) * d;
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  }
  make_primitive(out);
  return out;
}

/// 3x3 determinant, exact.
inline Rat det3(const RatMat& m, std::size_t c0, std::size_t c1, std::size_t c2) {
  return m[0][c0] * (m[1][c1] * m[2][c2] - m[1][c2] * m[2][c1]) -
         m[0][c1] * (m[1][c0] * m[2][c2] - m[1][c2] * m[2][c0]) +
         m[0][c2] * (m[1][c0] * m[2][c1] - m[1][c1] * m[2][c0]);
}

}  // namespace chirotrop
