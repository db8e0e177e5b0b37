#pragma once

#include <map>
#include <utility>

#include "fibrekit/complex.hpp"
#include "fibrekit/numeric.hpp"
#include "fibrekit/presentation.hpp"

namespace fibrekit {

inline constexpr std::size_t kDefaultRewriteBudget = 100000;

/// Edge-path group presentation of a connected complex.
struct EdgePathPresentation {
  Presentation presentation;
  /// Generator index of each non-tree edge (u < v), oriented u -> v.
  std::map<std::pair<VertexId, VertexId>, std::size_t> generator_of_edge;
  /// Breadth-first spanning tree edges (u < v).
  std::vector<std::pair<VertexId, VertexId>> tree_edges;
};

/// Generators are the edges outside a breadth-first spanning tree rooted at
/// the smallest vertex (neighbours visited in increasing order); one
/// relator per triangle (a<b<c): [ab][bc][ac]^-1 with tree edges dropped.
/// Throws PreconditionError for empty or disconnected K.
EdgePathPresentation pi1_presentation(const SimplicialComplex& k);

struct SimpleConnectivity {
  Decision answer = Decision::Unknown;
  /// H_1(K) when it certified No.
  std::string reason;
  std::size_t steps = 0;
};

/// Semi-decision for simple connectivity. No is certified by H_1 != 0; Yes
/// by trivializing the edge-path presentation within `budget` rewrite
/// steps; Unknown otherwise. Throws PreconditionError for empty or
/// disconnected K.
SimpleConnectivity try_simply_connected(const SimplicialComplex& k,
                                        std::size_t budget = kDefaultRewriteBudget);

}  // namespace fibrekit
