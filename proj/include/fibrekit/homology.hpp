#pragma once

#include <string>
#include <vector>

#include "fibrekit/complex.hpp"
#include "fibrekit/integer_matrix.hpp"

namespace fibrekit {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_1 | t_2 | ... and every t_i >= 2.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2" ...
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Chain complex C_{low} <- C_{low+1} <- ... given by boundary matrices.
/// boundaries[i] maps C_{low+i} -> C_{low+i-1} and has shape
/// (rank C_{low+i-1}) x (rank C_{low+i}); boundaries[0] is ignored (zero).
struct ChainComplex {
  int low_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> boundaries;

  HomologyGroup homology(int degree) const;
};

/// Augmented simplicial chain complex of K: degree -1 is spanned by the
/// empty simplex, bases are lexicographically ordered simplices, and the
/// boundary sign of dropping the vertex at position i is (-1)^i.
ChainComplex augmented_chain_complex(const SimplicialComplex& k);

/// Boundary matrix from dimension dim to dim-1 (dim >= 0).
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int dim);

/// Reduced integral homology. Degree -1 is Z exactly for the empty
/// complex; degrees above dim K are trivial.
HomologyGroup reduced_homology(const SimplicialComplex& k, int degree);

/// Reduced homology in degrees -1 .. dim K (index 0 is degree -1).
/// Verifies the reduced Euler characteristic identity.
std::vector<HomologyGroup> reduced_homology_all(const SimplicialComplex& k);

/// n = -1: K nonempty. n >= 0: K nonempty and reduced homology vanishes in
/// degrees 0..n. Values below -1 impose no condition.
bool is_n_acyclic(const SimplicialComplex& k, int n);

/// First degree in [-1, n] with nontrivial reduced homology, if any.
std::optional<int> first_nonacyclic_degree(const SimplicialComplex& k, int n);

}  // namespace fibrekit
