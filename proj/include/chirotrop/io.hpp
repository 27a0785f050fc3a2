#pragma once

// File formats: ray files (`k n m` header + integer rows), chirotope
// catalogs (one +/- string per line, '#' comments), and the JSON fan
// output mirroring the per-dimension face dictionary layout.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "chirotrop/chirotope.hpp"
#include "chirotrop/fan.hpp"
#include "chirotrop/membership.hpp"
#include "chirotrop/pluecker.hpp"

namespace chirotrop {

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RayFile {
  int k = 0;
  int n = 0;
  std::vector<PlueckerVector> rays;
};

/// Parse and validate a ray file. Every ray must be a tropical Pluecker
/// vector and the rays must be pairwise distinct modulo lineality;
/// diagnostics carry the line number and the violated relation or the
/// duplicate partner.
inline RayFile ingest_rays(std::istream& in, const std::string& name = "<rays>") {
  RayFile rf;
  std::size_t m = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    if (!(hs >> rf.k >> rf.n >> m)) throw IngestError(name + ": malformed header, expected 'k n m'");
    break;
  }
  if (rf.k <= 0 || rf.n <= rf.k) throw IngestError(name + ": header requires 0 < k < n");
  const std::size_t width = binomial(rf.n, rf.k);
  const auto rels = generate_three_term(rf.k, rf.n);
  const LinealityReducer reducer(rf.k, rf.n);
  const std::string zero_key = reducer.key(PlueckerVector(rf.k, rf.n));
  std::unordered_map<std::string, std::size_t> seen;  // coset key -> ray index

  while (rf.rays.size() < m && std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    IntVec coords;
    coords.reserve(width);
    std::string tok;
    while (ls >> tok) {
      try {
        coords.emplace_back(tok);
      } catch (const std::exception&) {
        throw IngestError(name + ":" + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
    }
    if (coords.size() != width) {
      throw IngestError(name + ":" + std::to_string(lineno) + ": expected " + std::to_string(width) +
                        " coordinates, got " + std::to_string(coords.size()));
    }
    PlueckerVector ray(rf.k, rf.n, std::move(coords));
    if (const auto bad = first_eqn_violation(ray, rels)) {
      throw IngestError(name + ":" + std::to_string(lineno) +
                        ": ray is not a tropical Pluecker vector; unique minimum in relation " +
                        rels[*bad].label());
    }
    const std::string key = reducer.key(ray);
    if (key == zero_key) {
      throw IngestError(name + ":" + std::to_string(lineno) + ": ray lies in the lineality space");
    }
    const auto [it, fresh] = seen.emplace(key, rf.rays.size());
    if (!fresh) {
      throw IngestError(name + ":" + std::to_string(lineno) + ": duplicate modulo lineality of ray " +
                        std::to_string(it->second) + " (0-based file order)");
    }
    rf.rays.push_back(std::move(ray));
  }
  if (rf.rays.size() != m) {
    throw IngestError(name + ": header promised " + std::to_string(m) + " rays, file has " +
                      std::to_string(rf.rays.size()));
  }
  return rf;
}

inline RayFile ingest_rays_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open ray file: " + path);
  return ingest_rays(in, path);
}

inline void write_rays(std::ostream& out, const RayFile& rf) {
  out << rf.k << ' ' << rf.n << ' ' << rf.rays.size() << '\n';
  for (const auto& r : rf.rays) out << r.to_string() << '\n';
}

/// Catalog files keep their order (summary tables follow it); duplicates are
/// rejected rather than silently merged.
inline ChirotopeSet read_catalog(std::istream& in, int k, int n, const std::string& name = "<catalog>") {
  ChirotopeSet set;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Chirotope chi;
    try {
      chi = Chirotope::from_sign_string(line, k, n);
    } catch (const std::invalid_argument& e) {
      throw IngestError(name + ":" + std::to_string(lineno) + ": " + e.what());
    }
    for (const auto& other : set.members) {
      if (other == chi)
        throw IngestError(name + ":" + std::to_string(lineno) + ": duplicate chirotope");
    }
    set.members.push_back(std::move(chi));
  }
  return set;
}

inline ChirotopeSet read_catalog_file(const std::string& path, int k, int n) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open catalog file: " + path);
  return read_catalog(in, k, n, path);
}

inline nlohmann::json fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["k"] = fan.k;
  j["n"] = fan.n;
  j["chirotope"] = fan.chirotope;
  nlohmann::json rays = nlohmann::json::array();
  for (const auto& r : fan.rays) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : r.coords) coords.push_back(c.str());
    rays.push_back(coords);
  }
  j["rays"] = rays;
  nlohmann::json faces;
  for (const auto& [d, fs] : fan.faces_by_dim) faces[std::to_string(d)] = fs;
  j["faces_by_dim"] = faces;
  j["f_vector"] = fan.f_vector;
  j["two_determined"] = fan.two_determined;
  j["pure"] = fan.pure;
  return j;
}

}  // namespace chirotrop
