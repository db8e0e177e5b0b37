#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibrekit/complex.hpp"
#include "fibrekit/labeled_graph.hpp"

namespace fibrekit {

inline constexpr std::size_t kDefaultMaxRadius = 5;

/// Ball radius cap: FIBREKIT_MAX_RADIUS when set (InputError if it is not
/// a nonnegative integer), otherwise kDefaultMaxRadius.
std::size_t max_radius();
/// Throws BudgetExceeded when radius > max_radius().
void check_radius(std::size_t radius);

/// Every vertex v becomes ports "v:0", "v:1", "v:2" joined by the oriented
/// b-cycle 0 -> 1 -> 2 -> 0. Ports are handed out in edge order (source end
/// first). Each input edge joining ports p and q becomes the a-edges p -> q
/// and q -> p. Throws PreconditionError unless G is connected and cubic.
LabeledGraph huang_double(const LabeledGraph& g);

struct SalvettiCells {
  /// counts[k] = number of k-cells; counts[0] = 1 and counts[k] is the
  /// number of (k-1)-simplices of L. Listed at least through k = 2.
  std::vector<std::size_t> counts;
  long long euler_characteristic = 0;
};

/// Throws PreconditionError for non-flag L.
SalvettiCells salvetti_cells(const SimplicialComplex& l);

/// Ball of the given radius in the Cayley graph of the free group on u, w
/// (edges g -> gu labeled u, g -> gw labeled w) with one loop per other
/// vertex of L at every ball vertex. Vertex names are reduced words ("1"
/// for the identity). Throws PreconditionError when |V(L)| < 3, L is not
/// flag or u and w are adjacent; BudgetExceeded above the radius cap.
LabeledGraph cover_skeleton(const SimplicialComplex& l, VertexId u, VertexId w, std::size_t radius);

}  // namespace fibrekit
