#pragma once

#include <optional>
#include <vector>

#include "fibrekit/integer_matrix.hpp"

namespace fibrekit {

/// Smith normal form D = left * M * right.
///
/// `diagonal` has min(rows, cols) entries: d_1 | d_2 | ... | d_r, all
/// positive, followed by zeros.
struct SmithForm {
  std::vector<Integer> diagonal;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;

  std::size_t rank() const;
  /// Diagonal entries greater than one.
  std::vector<Integer> torsion() const;
  /// The full rows x cols diagonal matrix.
  IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntegerMatrix& m, bool want_transforms = false);

}  // namespace fibrekit
