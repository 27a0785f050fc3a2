#pragma once

// Three-term Pluecker relations P_{k,n} as index patterns with the fixed
// sign convention (+,-,+) on the terms
//   (Lab,Lcd), (Lac,Lbd), (Lad,Lbc).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirotrop/subsets.hpp"

namespace chirotrop {

struct ThreeTermRelation {
  Subset L;     // (k-2)-subset
  Subset quad;  // {a<b<c<d}, disjoint from L
  // term[t] = pair of lex ranks of the two k-subsets of the t-th monomial
  std::array<std::array<std::size_t, 2>, 3> term;
  static constexpr std::array<int, 3> sign = {+1, -1, +1};

  std::string label() const {
    std::string s = "L={" + subset_label(L) + "} quad={";
    for (std::size_t i = 0; i < quad.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(quad[i]);
    }
    s += '}';
    return s;
  }
};

namespace detail {

inline Subset merged(const Subset& L, int x, int y) {
  Subset s = L;
  s.push_back(x);
  s.push_back(y);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// All three-term relations for (k,n), ordered lex on L then lex on the
/// quad. Exactly C(n,k-2)*C(n-k+2,4) of them.
inline std::vector<ThreeTermRelation> generate_three_term(int k, int n) {
  if (k < 2 || k > n - 2) throw std::invalid_argument("three-term relations need 2 <= k <= n-2");
  std::vector<ThreeTermRelation> rels;
  rels.reserve(binomial(n, k - 2) * binomial(n - k + 2, 4));
  for (const Subset& L : all_subsets(k - 2, n)) {
    // complement of L, increasing
    Subset comp;
    comp.reserve(n - (k - 2));
    std::size_t li = 0;
    for (int x = 1; x <= n; ++x) {
      if (li < L.size() && L[li] == x) {
        ++li;
      } else {
        comp.push_back(x);
      }
    }
    const std::size_t m = comp.size();
    for (std::size_t ia = 0; ia + 3 < m; ++ia)
      for (std::size_t ib = ia + 1; ib + 2 < m; ++ib)
        for (std::size_t ic = ib + 1; ic + 1 < m; ++ic)
          for (std::size_t id = ic + 1; id < m; ++id) {
            const int a = comp[ia], b = comp[ib], c = comp[ic], d = comp[id];
            ThreeTermRelation r;
            r.L = L;
            r.quad = {a, b, c, d};
            r.term[0] = {lex_rank(detail::merged(L, a, b), n), lex_rank(detail::merged(L, c, d), n)};
            r.term[1] = {lex_rank(detail::merged(L, a, c), n), lex_rank(detail::merged(L, b, d), n)};
            r.term[2] = {lex_rank(detail::merged(L, a, d), n), lex_rank(detail::merged(L, b, c), n)};
            rels.push_back(std::move(r));
          }
  }
  return rels;
}

/// Relations in which a given k-subset occurs as a term member. The index is
/// built once; lookups are O(1).
class RelationIndex {
 public:
  RelationIndex(const std::vector<ThreeTermRelation>& rels, std::size_t coord_count)
      : by_coord_(coord_count) {
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      for (const auto& t : rels[ri].term)
        for (std::size_t idx : t) by_coord_[idx].push_back(ri);
    }
    for (auto& v : by_coord_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  const std::vector<std::size_t>& containing(std::size_t coord_index) const {
    return by_coord_.at(coord_index);
  }

 private:
  std::vector<std::vector<std::size_t>> by_coord_;
};

inline std::vector<ThreeTermRelation> relations_containing(
    const Subset& s, int n, const std::vector<ThreeTermRelation>& rels) {
  if (rels.empty()) return {};
  const std::size_t idx = lex_rank(s, n);
  std::vector<ThreeTermRelation> out;
  for (const auto& r : rels) {
    for (const auto& t : r.term) {
      if (t[0] == idx || t[1] == idx) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

}  // namespace chirotrop
