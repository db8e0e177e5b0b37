#include "fibrekit/rational_matrix.hpp"

#include <sstream>

#include "fibrekit/errors.hpp"

namespace fibrekit {

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw InputError("matrix: expected " + std::to_string(n * n) + " entries");
}

RationalMatrix RationalMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
  std::size_t n = rows.size();
  std::vector<Rational> data;
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("matrix must be square");
    for (const auto& x : row) data.push_back(parse_rational(x));
  }
  return RationalMatrix(n, std::move(data));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_integer(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("matrix must be square");
  RationalMatrix r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  }
  return r;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_) {
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

Integer RationalMatrix::common_denominator() const {
  Integer d = 1;
  for (const auto& x : data_) d = lcm(d, boost::multiprecision::denominator(x));
  return d;
}

IntegerMatrix RationalMatrix::scaled_to_integer(const Integer& factor) const {
  IntegerMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Rational v = (*this)(i, j) * Rational(factor);
      if (boost::multiprecision::denominator(v) != 1) {
        throw InternalError("scaled_to_integer: factor does not clear denominators");
      }
      out(i, j) = boost::multiprecision::numerator(v);
    }
  }
  return out;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix m = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && m(pivot, c) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(c, j), m(pivot, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n_; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && a(pivot, c) == 0) ++pivot;
    if (pivot == n_) throw PreconditionError("matrix is singular");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a(c, j), a(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    Rational scale = Rational(1) / a(c, c);
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RationalMatrix RationalMatrix::power(std::uint64_t exponent) const {
  RationalMatrix result = identity(n_);
  RationalMatrix base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != n_) throw InputError("vector length does not match matrix size");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix product: size mismatch");
  RationalMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix sum: size mismatch");
  RationalMatrix c(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

Polynomial RationalMatrix::characteristic_polynomial() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::size_t n = n_;
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = (*this) * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    RationalMatrix am = (*this) * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial RationalMatrix::minimal_polynomial() const {
  // Smallest d with A^d in the span of I, A, ..., A^{d-1}; solve for the
  // coefficients by Gaussian elimination on the flattened powers.
  std::size_t n = n_;
  std::vector<std::vector<Rational>> basis;   // reduced vectors
  std::vector<std::vector<Rational>> combo;   // each reduced vector in terms of powers
  std::vector<std::size_t> pivots;
  RationalMatrix power = identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> v(power.data_.begin(), power.data_.end());
    std::vector<Rational> coeffs(d + 1);
    coeffs[d] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& x = v[pivots[b]];
      if (x == 0) continue;
      Rational f = x / basis[b][pivots[b]];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * basis[b][i];
      for (std::size_t i = 0; i < combo[b].size(); ++i) coeffs[i] -= f * combo[b][i];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return Polynomial(std::move(coeffs)).monic();
    basis.push_back(std::move(v));
    combo.push_back(std::move(coeffs));
    pivots.push_back(pivot);
    power = power * (*this);
  }
  throw InternalError("minimal_polynomial: Cayley-Hamilton violated");
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << fibrekit::to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace fibrekit
