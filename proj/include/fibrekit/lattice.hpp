#pragma once

#include <vector>

#include "fibrekit/integer_matrix.hpp"
#include "fibrekit/numeric.hpp"

namespace fibrekit {

/// Column Hermite normal form of a full row rank n x k integer matrix: an
/// n x n upper triangular matrix H with positive diagonal, 0 <= H(i,j) <
/// H(i,i) for j > i, whose columns generate the same lattice. Throws
/// PreconditionError when the columns do not span a full rank lattice.
IntegerMatrix hermite_normal_form(const IntegerMatrix& columns);

/// Finite-index subgroup of Z^n held by its HNF basis.
class LatticeSubgroup {
 public:
  LatticeSubgroup() = default;
  /// Generators as columns; extra (dependent) columns are allowed.
  static LatticeSubgroup from_columns(const IntegerMatrix& columns);
  static LatticeSubgroup from_column_list(const std::vector<std::vector<Integer>>& columns);
  static LatticeSubgroup full(std::size_t n);

  std::size_t dimension() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }
  std::vector<Integer> column(std::size_t j) const;
  /// |det basis| = [Z^n : L].
  const Integer& index() const { return index_; }
  bool contains(const std::vector<Integer>& v) const;

  friend bool operator==(const LatticeSubgroup&, const LatticeSubgroup&) = default;

 private:
  IntegerMatrix basis_;
  Integer index_ = 1;
};

}  // namespace fibrekit
