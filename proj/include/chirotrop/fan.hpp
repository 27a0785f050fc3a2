#pragma once

// Fans reconstructed from maximal cliques: the face lattice obtained by
// iterated pairwise intersection of facets, f-vectors, purity, and the
// 2-determinedness witness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chirotrop/graph.hpp"
#include "chirotrop/membership.hpp"
#include "chirotrop/pluecker.hpp"

namespace chirotrop {

using Face = std::vector<std::size_t>;  // sorted ray indices

struct Fan {
  int k = 0;
  int n = 0;
  std::string chirotope;  // sign string; empty for the plain Dressian
  std::vector<PlueckerVector> rays;
  std::map<std::size_t, std::vector<Face>> faces_by_dim;  // dim >= 1
  std::vector<std::size_t> f_vector;                      // index d-1 counts faces of dim d
  std::vector<Face> facets;                               // the maximal cliques
  bool two_determined = false;
  bool pure = false;
  std::size_t facet_dimension = 0;  // common dim when pure

  std::size_t dim() const { return f_vector.size(); }
};

namespace detail {

using Mask = std::vector<std::uint64_t>;

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto b : m) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Mask to_mask(const Face& f, std::size_t blocks) {
  Mask m(blocks, 0);
  for (auto i : f) m[i >> 6] |= std::uint64_t{1} << (i & 63);
  return m;
}

inline Face from_mask(const Mask& m) {
  Face f;
  for (std::size_t bi = 0; bi < m.size(); ++bi) {
    std::uint64_t b = m[bi];
    while (b) {
      f.push_back(bi * 64 + __builtin_ctzll(b));
      b &= b - 1;
    }
  }
  return f;
}

inline bool mask_any(const Mask& m) {
  for (auto b : m)
    if (b) return true;
  return false;
}

inline Mask mask_and(const Mask& a, const Mask& b) {
  Mask r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

/// Rank oracle over coset representatives: each ray is reduced modulo the
/// lineality space once, so face dimensions are plain integer ranks.
class FaceDimOracle {
 public:
  FaceDimOracle(const std::vector<PlueckerVector>& rays, int k, int n) : reducer_(k, n) {
    reduced_.reserve(rays.size());
    for (const auto& r : rays) reduced_.push_back(scale_to_primitive(reducer_.reduce(r)));
  }

  std::size_t dim(const Face& f) const {
    IntMat m;
    m.reserve(f.size());
    for (auto i : f) m.push_back(reduced_[i]);
    return rank_destructive(m);
  }

 private:
  LinealityReducer reducer_;
  std::vector<IntVec> reduced_;
};

}  // namespace detail

/// Close the facet set under pairwise intersection, iterated to a fixed
/// point; bucket every face by its dimension modulo lineality. Records
/// whether one round of facet-facet intersections already produced every
/// non-maximal face (the 2-determinedness witness).
inline Fan face_lattice(const std::vector<Face>& facets, const std::vector<PlueckerVector>& rays,
                        int k, int n) {
  using detail::Mask;
  Fan fan;
  fan.k = k;
  fan.n = n;
  fan.rays = rays;
  fan.facets = facets;

  const std::size_t blocks = (rays.size() + 63) / 64 == 0 ? 1 : (rays.size() + 63) / 64;
  std::vector<Mask> facet_masks;
  facet_masks.reserve(facets.size());
  std::unordered_set<Mask, detail::MaskHash> all;
  for (const auto& f : facets) {
    Mask m = detail::to_mask(f, blocks);
    all.insert(m);
    facet_masks.push_back(std::move(m));
  }

  // one round of facet x facet intersections
  std::unordered_set<Mask, detail::MaskHash> pair_faces;
  std::vector<Mask> frontier;
  for (std::size_t i = 0; i < facet_masks.size(); ++i)
    for (std::size_t j = i + 1; j < facet_masks.size(); ++j) {
      Mask m = detail::mask_and(facet_masks[i], facet_masks[j]);
      if (!detail::mask_any(m)) continue;
      pair_faces.insert(m);
      if (all.insert(m).second) frontier.push_back(std::move(m));
    }

  // iterate to the fixed point; new faces only need to meet existing ones
  while (!frontier.empty()) {
    std::vector<Mask> next;
    const std::vector<Mask> snapshot(all.begin(), all.end());
    for (const auto& f : frontier)
      for (const auto& g : snapshot) {
        Mask m = detail::mask_and(f, g);
        if (!detail::mask_any(m)) continue;
        if (all.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }

  std::unordered_set<Mask, detail::MaskHash> facet_set(facet_masks.begin(), facet_masks.end());
  fan.two_determined = true;
  for (const auto& m : all) {
    if (!facet_set.count(m) && !pair_faces.count(m)) {
      fan.two_determined = false;
      break;
    }
  }

  detail::FaceDimOracle oracle(rays, k, n);
  std::size_t max_dim = 0;
  for (const auto& m : all) {
    Face f = detail::from_mask(m);
    const std::size_t d = oracle.dim(f);
    if (d > f.size()) throw std::logic_error("face dimension exceeds its ray count: corrupt data");
    if (d == 0) throw std::logic_error("face of dimension 0 with nonempty ray set: corrupt data");
    fan.faces_by_dim[d].push_back(std::move(f));
    max_dim = std::max(max_dim, d);
  }
  for (auto& [d, faces] : fan.faces_by_dim) std::sort(faces.begin(), faces.end());

  fan.f_vector.assign(max_dim, 0);
  for (const auto& [d, faces] : fan.faces_by_dim) fan.f_vector[d - 1] = faces.size();

  // purity of the maximal cones
  fan.pure = true;
  fan.facet_dimension = 0;
  for (const auto& f : facets) {
    const std::size_t d = oracle.dim(f);
    if (fan.facet_dimension == 0) fan.facet_dimension = d;
    if (d != fan.facet_dimension) fan.pure = false;
  }
  return fan;
}

/// True iff every non-maximal face arises as an intersection of two facets.
inline bool check_two_determined(const Fan& fan) { return fan.two_determined; }

/// Rays of Dr^chi among the rays of Dr, in input order (Algorithm 2 line 1).
/// Input rays must be tropical Pluecker vectors; violations are reported
/// with the offending ray and relation.
inline std::vector<PlueckerVector> chi_rays(const std::vector<PlueckerVector>& rays,
                                            const Chirotope& chi,
                                            const std::vector<ThreeTermRelation>& rels) {
  const auto lone = lone_term_table(chi, rels);
  std::vector<PlueckerVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (const auto bad = first_eqn_violation(rays[i], rels)) {
      throw std::invalid_argument("ray " + std::to_string(i) +
                                  " is not a tropical Pluecker vector; violates " +
                                  rels[*bad].label());
    }
    if (satisfy_eqn_chi(lone, rays[i], rels)) out.push_back(rays[i]);
  }
  return out;
}

struct PurityViolation : std::runtime_error {
  Face clique;
  std::size_t expected, actual;
  PurityViolation(Face c, std::size_t e, std::size_t a)
      : std::runtime_error("maximal clique of dimension " + std::to_string(a) + " (expected " +
                           std::to_string(e) + ")"),
        clique(std::move(c)),
        expected(e),
        actual(a) {}
};

/// Algorithm 2 followed by the face-lattice pass: chi-rays, compatibility
/// graph, maximal cliques, iterated intersections. Asserts purity: every
/// facet must have dimension (k-1)(n-k-1).
inline Fan compute_chirotropical_dressian(const std::vector<PlueckerVector>& rays,
                                          const Chirotope& chi,
                                          const std::vector<ThreeTermRelation>& rels) {
  const auto selected = chi_rays(rays, chi, rels);
  const auto graph = build_graph(selected, rels, chi);
  const auto facets = maximal_cliques(graph);
  Fan fan = face_lattice(facets, selected, chi.k, chi.n);
  fan.chirotope = chi.to_sign_string();

  const std::size_t expected = static_cast<std::size_t>(chi.k - 1) * (chi.n - chi.k - 1);
  if (!fan.pure || fan.facet_dimension != expected) {
    detail::FaceDimOracle oracle(selected, chi.k, chi.n);
    for (const auto& f : facets) {
      const std::size_t d = oracle.dim(f);
      if (d != expected) throw PurityViolation(f, expected, d);
    }
  }
  return fan;
}

}  // namespace chirotrop
