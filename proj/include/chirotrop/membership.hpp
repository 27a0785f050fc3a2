#pragma once

// Membership predicates for the Dressian and the chirotropical Dressian:
// per relation, the minimum of the three term values must be attained at
// least twice (plain), or the lone-signed term must equal the minimum of
// the paired terms (chirotropical).

#include <array>
#include <optional>
#include <vector>

#include "chirotrop/chirotope.hpp"
#include "chirotrop/pluecker.hpp"
#include "chirotrop/relations.hpp"

namespace chirotrop {

inline std::array<Int, 3> term_values(const PlueckerVector& x, const ThreeTermRelation& r) {
  return {x.coords[r.term[0][0]] + x.coords[r.term[0][1]],
          x.coords[r.term[1][0]] + x.coords[r.term[1][1]],
          x.coords[r.term[2][0]] + x.coords[r.term[2][1]]};
}

inline bool min_attained_twice(const std::array<Int, 3>& v) {
  // unique minimum <=> some entry is strictly below both others
  if (v[0] < v[1] && v[0] < v[2]) return false;
  if (v[1] < v[0] && v[1] < v[2]) return false;
  if (v[2] < v[0] && v[2] < v[1]) return false;
  return true;
}

/// First relation where the minimum is attained only once, or nullopt if x
/// is a tropical Pluecker vector.
inline std::optional<std::size_t> first_eqn_violation(const PlueckerVector& x,
                                                      const std::vector<ThreeTermRelation>& rels) {
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!min_attained_twice(term_values(x, rels[i]))) return i;
  }
  return std::nullopt;
}

inline bool satisfy_eqn(const PlueckerVector& x, const std::vector<ThreeTermRelation>& rels) {
  if (x.coords.size() != binomial(x.n, x.k))
    throw std::invalid_argument("vector length mismatch with (k,n)");
  return !first_eqn_violation(x, rels).has_value();
}

/// Chirotropical membership against a precomputed lone-term table (see
/// lone_term_table); this is the hot path of the engine.
inline bool satisfy_eqn_chi(const std::vector<std::uint8_t>& lone_table, const PlueckerVector& x,
                            const std::vector<ThreeTermRelation>& rels) {
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto v = term_values(x, rels[i]);
    const int lone = lone_table[i];
    const Int& u = v[(lone + 1) % 3];
    const Int& w = v[(lone + 2) % 3];
    if (v[lone] != (u <= w ? u : w)) return false;
  }
  return true;
}

inline std::optional<std::size_t> first_eqn_chi_violation(
    const std::vector<std::uint8_t>& lone_table, const PlueckerVector& x,
    const std::vector<ThreeTermRelation>& rels) {
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto v = term_values(x, rels[i]);
    const int lone = lone_table[i];
    const Int& u = v[(lone + 1) % 3];
    const Int& w = v[(lone + 2) % 3];
    if (v[lone] != (u <= w ? u : w)) return i;
  }
  return std::nullopt;
}

/// Validating entry point: rejects invalid chirotopes before evaluating.
inline bool satisfy_eqn_chi(const Chirotope& chi, const PlueckerVector& x,
                            const std::vector<ThreeTermRelation>& rels) {
  if (chi.k != x.k || chi.n != x.n) throw std::invalid_argument("chirotope and vector shapes differ");
  return satisfy_eqn_chi(lone_term_table(chi, rels), x, rels);
}

}  // namespace chirotrop
