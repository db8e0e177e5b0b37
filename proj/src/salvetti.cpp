#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"

namespace fibrekit {

SalvettiCells salvetti_cells(const SimplicialComplex& l) {
  auto flag = check_flag(l);
  if (!flag.is_flag) {
    throw PreconditionError("salvetti_cells: L is not flag (empty simplex " + l.format(*flag.witness) + ")");
  }
  SalvettiCells out;
  out.counts.push_back(1);
  int top = std::max(l.dimension() + 1, 2);
  for (int k = 1; k <= top; ++k) out.counts.push_back(l.simplex_count(k - 1));
  for (std::size_t k = 0; k < out.counts.size(); ++k) {
    long long c = static_cast<long long>(out.counts[k]);
    out.euler_characteristic += k % 2 == 0 ? c : -c;
  }
  return out;
}

}  // namespace fibrekit
