#pragma once

// Integer vectors indexed by lex-ordered k-subsets of [n], the lineality
// space L_{k,n}, and exact rank computation modulo lineality.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chirotrop/exact.hpp"
#include "chirotrop/subsets.hpp"

namespace chirotrop {

struct PlueckerVector {
  int k = 0;
  int n = 0;
  IntVec coords;  // length C(n,k), lex index order

  PlueckerVector() = default;
  PlueckerVector(int k_, int n_) : k(k_), n(n_), coords(binomial(n_, k_), Int(0)) {}
  PlueckerVector(int k_, int n_, IntVec c) : k(k_), n(n_), coords(std::move(c)) {
    if (coords.size() != binomial(n, k)) {
      throw std::invalid_argument("coordinate vector has wrong length for (k,n)");
    }
  }

  static PlueckerVector basis(int k, int n, const Subset& s) {
    PlueckerVector v(k, n);
    v.coords[lex_rank(s, n)] = 1;
    return v;
  }

  std::size_t size() const { return coords.size(); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  bool same_shape(const PlueckerVector& o) const { return k == o.k && n == o.n; }

  PlueckerVector operator+(const PlueckerVector& o) const {
    require_same_shape(o);
    PlueckerVector r(k, n);
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i] + o.coords[i];
    return r;
  }

  PlueckerVector operator-(const PlueckerVector& o) const {
    require_same_shape(o);
    PlueckerVector r(k, n);
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = coords[i] - o.coords[i];
    return r;
  }

  bool operator==(const PlueckerVector& o) const {
    return k == o.k && n == o.n && coords == o.coords;
  }

  void require_same_shape(const PlueckerVector& o) const {
    if (!same_shape(o)) throw std::invalid_argument("mixed (k,n) operands");
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) os << ' ';
      os << coords[i];
    }
    return os.str();
  }
};

/// The n generators of L_{k,n}: the i-th vector has a 1 at index I iff i is
/// a member of I.
inline std::vector<PlueckerVector> lineality_basis(int k, int n) {
  std::vector<PlueckerVector> basis(n, PlueckerVector(k, n));
  const auto subsets = all_subsets(k, n);
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    for (int i : subsets[idx]) basis[i - 1].coords[idx] = 1;
  }
  return basis;
}

/// rank(span(vectors) + L_{k,n}) - rank(L_{k,n}), by fraction-free
/// elimination over the integers.
inline std::size_t rank_mod_lineality(const std::vector<PlueckerVector>& vectors, int k, int n) {
  const auto lin = lineality_basis(k, n);
  IntMat m;
  m.reserve(lin.size() + vectors.size());
  for (const auto& v : lin) m.push_back(v.coords);
  const std::size_t lin_rank = rank_of(m);
  for (const auto& v : vectors) {
    if (v.k != k || v.n != n) throw std::invalid_argument("mixed (k,n) inputs");
    m.push_back(v.coords);
  }
  return rank_destructive(m) - lin_rank;
}

inline std::size_t rank_mod_lineality(const std::vector<PlueckerVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("cannot infer (k,n) from empty input");
  return rank_mod_lineality(vectors, vectors.front().k, vectors.front().n);
}

/// Canonical coset representatives modulo span(L_{k,n}). Two vectors are
/// equal mod lineality iff their reduced forms coincide, which makes the
/// reduced form usable as a hash key for deduplication.
class LinealityReducer {
 public:
  LinealityReducer(int k, int n) : k_(k), n_(n) {
    const auto lin = lineality_basis(k, n);
    rows_.reserve(lin.size());
    for (const auto& v : lin) {
      RatVec row(v.coords.size());
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = v.coords[i];
      rows_.push_back(std::move(row));
    }
    pivots_ = rref(rows_);
  }

  RatVec reduce(const PlueckerVector& v) const {
    if (v.k != k_ || v.n != n_) throw std::invalid_argument("mixed (k,n) inputs");
    RatVec x(v.coords.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = v.coords[i];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat f = x[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] -= f * rows_[r][j];
    }
    return x;
  }

  std::string key(const PlueckerVector& v) const {
    const RatVec x = reduce(v);
    std::ostringstream os;
    for (const Rat& c : x) os << c << ',';
    return os.str();
  }

  /// Key invariant under positive rescaling as well: identifies rays.
  std::string ray_key(const PlueckerVector& v) const {
    const IntVec p = scale_to_primitive(reduce(v));
    std::ostringstream os;
    for (const Int& c : p) os << c << ',';
    return os.str();
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  int k_;
  int n_;
  RatMat rows_;
  std::vector<std::size_t> pivots_;
};

inline bool equal_mod_lineality(const PlueckerVector& u, const PlueckerVector& v) {
  u.require_same_shape(v);
  PlueckerVector d = u - v;
  if (is_zero_vector(d.coords)) return true;
  return rank_mod_lineality({std::move(d)}, u.k, u.n) == 0;
}

}  // namespace chirotrop
