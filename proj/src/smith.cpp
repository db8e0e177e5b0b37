#include "fibrekit/smith.hpp"

namespace fibrekit {

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal) {
    if (d != 0) ++r;
  }
  return r;
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

IntegerMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

namespace {

// Pivot search uses the smallest nonzero absolute value; ties go to the
// first entry in row-major order.
struct Reducer {
  IntegerMatrix a;
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    a.add_row_multiple(target, source, f);
    if (u) u->add_row_multiple(target, source, f);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    a.add_col_multiple(target, source, f);
    if (v) v->add_col_multiple(target, source, f);
  }

  bool move_smallest_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          best = std::move(ax);
          bi = i;
          bj = j;
          found = true;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row t and column t outside the pivot and enforces that the pivot
  // divides every entry of the trailing submatrix.
  void settle_pivot(std::size_t t) {
    for (;;) {
      const Integer pivot = a(t, t);
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) != 0) add_row(i, t, -(a(i, t) / pivot));
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) != 0) add_col(j, t, -(a(t, j) / pivot));
      }
      // Any remainder left in the pivot row or column is strictly smaller
      // than the pivot: promote the smallest one and repeat.
      std::size_t best_i = t, best_j = t;
      Integer best = abs(pivot);
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) != 0 && abs(a(i, t)) < best) {
          best = abs(a(i, t));
          best_i = i;
          best_j = t;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) != 0 && abs(a(t, j)) < best) {
          best = abs(a(t, j));
          best_i = t;
          best_j = j;
        }
      }
      if (best_i != t || best_j != t) {
        swap_rows(t, best_i);
        swap_cols(t, best_j);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % pivot != 0) {
            add_row(t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool want_transforms) {
  Reducer r{m, std::nullopt, std::nullopt};
  if (want_transforms) {
    r.u = IntegerMatrix::identity(m.rows());
    r.v = IntegerMatrix::identity(m.cols());
  }
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!r.move_smallest_to(t)) break;
    r.settle_pivot(t);
  }
  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = r.a(t, t);
  out.left = std::move(r.u);
  out.right = std::move(r.v);
  return out;
}

}  // namespace fibrekit
