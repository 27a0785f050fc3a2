#pragma once

// Compatibility graphs over ray indices and maximal-clique enumeration
// (Bron-Kerbosch with a greedy max-coverage pivot). Output order is
// deterministic: cliques sorted internally, then lexicographically.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirotrop/chirotope.hpp"
#include "chirotrop/membership.hpp"
#include "chirotrop/pluecker.hpp"

namespace chirotrop {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), blocks_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { blocks_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += __builtin_popcountll(b);
    return c;
  }

  bool any() const {
    for (auto b : blocks_)
      if (b) return true;
    return false;
  }

  Bitset and_with(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= o.blocks_[i];
    return r;
  }

  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      c += __builtin_popcountll(blocks_[i] & o.blocks_[i]);
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      std::uint64_t b = blocks_[bi];
      while (b) {
        const int bit = __builtin_ctzll(b);
        f(bi * 64 + bit);
        b &= b - 1;
      }
    }
  }

  std::size_t size() const { return bits_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> blocks_;
};

enum class GraphMode { Plain, Chirotropical };

struct CompatibilityGraph {
  std::size_t ray_count = 0;
  GraphMode mode = GraphMode::Plain;
  std::string chirotope;  // sign string in chirotropical mode
  std::vector<Bitset> adj;

  bool has_edge(std::size_t i, std::size_t j) const { return adj[i].test(j); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < ray_count; ++i)
      for (std::size_t j = i + 1; j < ray_count; ++j)
        if (adj[i].test(j)) out.emplace_back(i, j);
    return out;
  }
};

/// Edge (i,j) present iff rays[i] + rays[j] passes the plain predicate.
inline CompatibilityGraph build_graph(const std::vector<PlueckerVector>& rays,
                                      const std::vector<ThreeTermRelation>& rels) {
  CompatibilityGraph g;
  g.ray_count = rays.size();
  g.mode = GraphMode::Plain;
  g.adj.assign(rays.size(), Bitset(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (satisfy_eqn(rays[i] + rays[j], rels)) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

/// Chirotropical mode: callers must have filtered the vertex set through the
/// chi-membership predicate already (Algorithm 2 line 1).
inline CompatibilityGraph build_graph(const std::vector<PlueckerVector>& rays,
                                      const std::vector<ThreeTermRelation>& rels,
                                      const Chirotope& chi) {
  const auto lone = lone_term_table(chi, rels);
  for (const auto& r : rays) {
    if (!satisfy_eqn_chi(lone, r, rels))
      throw std::invalid_argument("vertex fails the chi-membership predicate; filter rays first");
  }
  CompatibilityGraph g;
  g.ray_count = rays.size();
  g.mode = GraphMode::Chirotropical;
  g.chirotope = chi.to_sign_string();
  g.adj.assign(rays.size(), Bitset(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (satisfy_eqn_chi(lone, rays[i] + rays[j], rels)) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

namespace detail {

inline void bron_kerbosch(const CompatibilityGraph& g, Bitset& R, Bitset P, Bitset X,
                          std::vector<std::vector<std::size_t>>& out) {
  if (!P.any() && !X.any()) {
    std::vector<std::size_t> clique;
    R.for_each([&](std::size_t v) { clique.push_back(v); });
    out.push_back(std::move(clique));
    return;
  }
  // pivot: vertex of P (or X) covering the most candidates
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool found = false;
  auto consider = [&](std::size_t u) {
    const std::size_t c = P.and_count(g.adj[u]);
    if (!found || c > best) {
      pivot = u;
      best = c;
      found = true;
    }
  };
  P.for_each(consider);
  X.for_each(consider);

  std::vector<std::size_t> candidates;
  P.for_each([&](std::size_t v) {
    if (!g.adj[pivot].test(v)) candidates.push_back(v);
  });
  for (std::size_t v : candidates) {
    R.set(v);
    bron_kerbosch(g, R, P.and_with(g.adj[v]), X.and_with(g.adj[v]), out);
    R.reset(v);
    P.reset(v);
    X.set(v);
  }
}

}  // namespace detail

/// All maximal-by-inclusion cliques, each sorted ascending, the list sorted
/// lexicographically. An isolated vertex yields the singleton clique.
inline std::vector<std::vector<std::size_t>> maximal_cliques(const CompatibilityGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.ray_count == 0) return out;
  Bitset R(g.ray_count), P(g.ray_count), X(g.ray_count);
  for (std::size_t i = 0; i < g.ray_count; ++i) P.set(i);
  detail::bron_kerbosch(g, R, P, X, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chirotrop
