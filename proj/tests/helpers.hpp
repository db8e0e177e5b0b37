#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibrekit/complex.hpp"
#include "fibrekit/homology.hpp"
#include "oracle/oracle.hpp"

namespace testing {

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

/// Complex on labels v0.. from facet bitmasks.
inline fibrekit::SimplicialComplex from_masks(std::size_t n, const std::vector<oracle::Mask>& facets) {
  std::vector<fibrekit::Simplex> faces;
  for (auto f : facets) {
    std::vector<fibrekit::VertexId> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (f >> v & 1u) vs.push_back(static_cast<fibrekit::VertexId>(v));
    }
    faces.emplace_back(vs);
  }
  return fibrekit::SimplicialComplex::from_faces(labels(n), faces);
}

/// Random complex: a handful of random nonempty faces on n vertices.
inline std::vector<oracle::Mask> random_faces(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<oracle::Mask> mask(1, (1u << n) - 1);
  std::vector<oracle::Mask> out;
  int k = count(rng);
  for (int i = 0; i < k; ++i) out.push_back(mask(rng));
  return out;
}

/// Clique complex of a graph given by an edge bitmask over the pairs of
/// n vertices (pair order: (0,1), (0,2), ..., (n-2,n-1)); every vertex is
/// present.
inline std::vector<oracle::Mask> clique_masks(std::size_t n, std::uint32_t edge_bits) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t bit = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++bit) {
      if (edge_bits >> bit & 1u) adj[a][b] = adj[b][a] = true;
    }
  }
  std::vector<oracle::Mask> cliques;
  for (oracle::Mask s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if ((s >> a & 1u) && (s >> b & 1u)) ok = adj[a][b];
      }
    }
    if (ok) cliques.push_back(s);
  }
  return cliques;
}

inline bool same_group(const fibrekit::HomologyGroup& h, const oracle::Group& g) {
  if (h.free_rank != g.free_rank || h.torsion.size() != g.torsion.size()) return false;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (h.torsion[i] != g.torsion[i]) return false;
  }
  return true;
}

}  // namespace testing
