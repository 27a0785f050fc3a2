#pragma once

// Chirotopes as sign vectors over the lex-ordered k-subsets of [n]:
// validity (Grassmann-Pluecker three-term condition), relabeling and
// reorientation actions, orbit expansion, and the +/- string encoding.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirotrop/relations.hpp"
#include "chirotrop/subsets.hpp"

namespace chirotrop {

using Permutation = std::vector<int>;  // perm[i-1] = image of label i

inline bool is_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 1 || x > n || seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

struct Chirotope {
  int k = 0;
  int n = 0;
  std::vector<std::int8_t> signs;  // entries in {+1,-1}, lex index order

  Chirotope() = default;
  Chirotope(int k_, int n_) : k(k_), n(n_), signs(binomial(n_, k_), 1) {}

  std::size_t size() const { return signs.size(); }

  std::int8_t at(const Subset& s) const { return signs[lex_rank(s, n)]; }

  bool operator==(const Chirotope& o) const {
    return k == o.k && n == o.n && signs == o.signs;
  }
  bool operator<(const Chirotope& o) const { return signs < o.signs; }

  std::string to_sign_string() const {
    std::string s(signs.size(), '+');
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i] < 0) s[i] = '-';
    return s;
  }

  static Chirotope from_sign_string(const std::string& s, int k, int n) {
    if (s.size() != binomial(n, k))
      throw std::invalid_argument("sign string has wrong length for (k,n)");
    Chirotope chi(k, n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '+') {
        chi.signs[i] = 1;
      } else if (s[i] == '-') {
        chi.signs[i] = -1;
      } else {
        throw std::invalid_argument("sign string may contain only '+' and '-'");
      }
    }
    return chi;
  }
};

/// Signed monomial values of a relation at a chirotope, in term order.
/// Validity demands that the three values are not all equal.
inline std::array<int, 3> monomial_signs(const Chirotope& chi, const ThreeTermRelation& r) {
  std::array<int, 3> m;
  for (int t = 0; t < 3; ++t) {
    m[t] = ThreeTermRelation::sign[t] * chi.signs[r.term[t][0]] * chi.signs[r.term[t][1]];
  }
  return m;
}

/// Index of the term whose monomial sign differs from the other two, or
/// nullopt when all three agree (i.e. the chirotope fails this relation).
inline std::optional<int> lone_term(const Chirotope& chi, const ThreeTermRelation& r) {
  const auto m = monomial_signs(chi, r);
  if (m[0] == m[1] && m[1] == m[2]) return std::nullopt;
  if (m[0] == m[1]) return 2;
  if (m[0] == m[2]) return 1;
  return 0;
}

inline bool validate(const Chirotope& chi, const std::vector<ThreeTermRelation>& rels) {
  if (chi.signs.size() != binomial(chi.n, chi.k))
    throw std::invalid_argument("chirotope length mismatch with (k,n)");
  for (const auto& r : rels) {
    if (!lone_term(chi, r)) return false;
  }
  return true;
}

/// First relation violated by chi, if any. Used for diagnostics.
inline std::optional<ThreeTermRelation> first_violated_relation(
    const Chirotope& chi, const std::vector<ThreeTermRelation>& rels) {
  for (const auto& r : rels) {
    if (!lone_term(chi, r)) return r;
  }
  return std::nullopt;
}

/// Per-relation lone-term table for a valid chirotope; the hot membership
/// predicate reduces to array lookups against it.
inline std::vector<std::uint8_t> lone_term_table(const Chirotope& chi,
                                                 const std::vector<ThreeTermRelation>& rels) {
  std::vector<std::uint8_t> table(rels.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto lt = lone_term(chi, rels[i]);
    if (!lt) throw std::invalid_argument("chirotope violates relation " + rels[i].label());
    table[i] = static_cast<std::uint8_t>(*lt);
  }
  return table;
}

/// chi_I -> chi_{sigma(I)}: the output sign at I is the input sign at the
/// sorted image of I.
inline Chirotope relabel(const Chirotope& chi, const Permutation& sigma) {
  if (!is_permutation(sigma, chi.n)) throw std::invalid_argument("relabeling must be a bijection on [n]");
  Chirotope out(chi.k, chi.n);
  const auto subsets = all_subsets(chi.k, chi.n);
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    Subset image;
    image.reserve(subsets[idx].size());
    for (int x : subsets[idx]) image.push_back(sigma[x - 1]);
    std::sort(image.begin(), image.end());
    out.signs[idx] = chi.signs[lex_rank(image, chi.n)];
  }
  return out;
}

/// chi_I -> (prod_{i in I} t_i) chi_I for t in {+1,-1}^n.
inline Chirotope reorient(const Chirotope& chi, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != chi.n) throw std::invalid_argument("reorientation vector length mismatch");
  for (int x : t)
    if (x != 1 && x != -1) throw std::invalid_argument("reorientation entries must be +1 or -1");
  Chirotope out(chi.k, chi.n);
  const auto subsets = all_subsets(chi.k, chi.n);
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    int f = 1;
    for (int x : subsets[idx]) f *= t[x - 1];
    out.signs[idx] = static_cast<std::int8_t>(f * chi.signs[idx]);
  }
  return out;
}

struct ChirotopeSet {
  std::vector<Chirotope> members;  // deduplicated, shared (k,n)

  void insert_sorted_unique() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
};

inline std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Closure of the given classes under all n! relabelings and 2^n
/// reorientations, deduplicated, in lex order on sign vectors.
inline ChirotopeSet expand_orbit(const ChirotopeSet& classes) {
  ChirotopeSet out;
  if (classes.members.empty()) return out;
  const int n = classes.members.front().n;
  const auto perms = all_permutations(n);
  std::set<Chirotope> seen;
  for (const auto& chi : classes.members) {
    for (const auto& sigma : perms) {
      const Chirotope rel = relabel(chi, sigma);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = (mask >> i) & 1 ? -1 : 1;
        seen.insert(reorient(rel, t));
      }
    }
  }
  out.members.assign(seen.begin(), seen.end());
  return out;
}

/// All-plus vector with -1 exactly at the listed k-subsets. The inverse of
/// negative_triples_of.
inline Chirotope from_negative_subsets(const std::vector<Subset>& negatives, int k, int n) {
  Chirotope chi(k, n);
  std::set<std::size_t> seen;
  for (const auto& s : negatives) {
    if (static_cast<int>(s.size()) != k) throw std::invalid_argument("negative subset has wrong size");
    const std::size_t idx = lex_rank(s, n);
    if (!seen.insert(idx).second) throw std::invalid_argument("duplicate subset in negative list");
    chi.signs[idx] = -1;
  }
  return chi;
}

inline std::vector<Subset> negative_subsets_of(const Chirotope& chi) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < chi.signs.size(); ++i) {
    if (chi.signs[i] < 0) out.push_back(lex_unrank(i, chi.k, chi.n));
  }
  return out;
}

/// Parse the compact notation "356,456,457,467" (single-digit labels). The
/// empty string denotes the totally positive chirotope.
inline Chirotope parse_negative_triples(const std::string& spec, int k, int n) {
  std::vector<Subset> negs;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    Subset s;
    for (char c : cur) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad label in negative-triples spec");
      s.push_back(c - '0');
    }
    negs.push_back(std::move(s));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',' || c == ' ') {
      flush();
    } else if (c != '(' && c != ')') {
      cur += c;
    }
  }
  flush();
  return from_negative_subsets(negs, k, n);
}

}  // namespace chirotrop
