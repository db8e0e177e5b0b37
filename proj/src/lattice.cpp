#include "fibrekit/lattice.hpp"

#include <algorithm>

#include "fibrekit/errors.hpp"

namespace fibrekit {

namespace {

using Column = std::vector<Integer>;

void subtract_multiple(Column& target, const Column& source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < target.size(); ++r) target[r] -= q * source[r];
}

}  // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Column> remaining;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Column c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = m(i, j);
    remaining.push_back(std::move(c));
  }
  std::vector<Column> pivot(n);
  // Bottom row first; every remaining column is zero below the current row.
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t i = n - 1 - step;
    while (true) {
      std::size_t best = remaining.size();
      std::size_t nonzero = 0;
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (remaining[j][i] == 0) continue;
        ++nonzero;
        if (best == remaining.size() || abs(remaining[j][i]) < abs(remaining[best][i])) best = j;
      }
      if (nonzero == 0) throw PreconditionError("lattice generators do not have full rank");
      if (nonzero == 1) {
        Column p = std::move(remaining[best]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        if (p[i] < 0) {
          for (auto& x : p) x = -x;
        }
        pivot[i] = std::move(p);
        break;
      }
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (j == best || remaining[j][i] == 0) continue;
        subtract_multiple(remaining[j], remaining[best], floor_div(remaining[j][i], remaining[best][i]));
      }
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t step = 0; step < j; ++step) {
      std::size_t i = j - 1 - step;
      subtract_multiple(pivot[j], pivot[i], floor_div(pivot[j][i], pivot[i][i]));
    }
  }
  IntegerMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) h(i, j) = pivot[j][i];
  }
  return h;
}

LatticeSubgroup LatticeSubgroup::from_columns(const IntegerMatrix& columns) {
  LatticeSubgroup out;
  out.basis_ = hermite_normal_form(columns);
  out.index_ = 1;
  for (std::size_t i = 0; i < out.basis_.rows(); ++i) out.index_ *= out.basis_(i, i);
  return out;
}

LatticeSubgroup LatticeSubgroup::from_column_list(const std::vector<std::vector<Integer>>& columns) {
  if (columns.empty()) throw PreconditionError("lattice needs at least one generator");
  std::size_t n = columns.front().size();
  IntegerMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw InputError("lattice generators have different lengths");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return from_columns(m);
}

LatticeSubgroup LatticeSubgroup::full(std::size_t n) { return from_columns(IntegerMatrix::identity(n)); }

std::vector<Integer> LatticeSubgroup::column(std::size_t j) const {
  std::vector<Integer> c(basis_.rows());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = basis_(i, j);
  return c;
}

bool LatticeSubgroup::contains(const std::vector<Integer>& v) const {
  std::size_t n = basis_.rows();
  if (v.size() != n) throw InputError("vector length does not match lattice dimension");
  std::vector<Integer> rest = v;
  // Back substitution through the upper triangular basis.
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t i = n - 1 - step;
    if (rest[i] % basis_(i, i) != 0) return false;
    Integer q = rest[i] / basis_(i, i);
    for (std::size_t r = 0; r <= i; ++r) rest[r] -= q * basis_(r, i);
  }
  return true;
}

}  // namespace fibrekit
