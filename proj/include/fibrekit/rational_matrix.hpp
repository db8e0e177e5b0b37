#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibrekit/integer_matrix.hpp"
#include "fibrekit/numeric.hpp"
#include "fibrekit/polynomial.hpp"

namespace fibrekit {

/// Square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}
  RationalMatrix(std::size_t n, std::vector<Rational> row_major);
  /// Entries given as "p/q" strings; throws InputError on ragged input.
  static RationalMatrix parse(const std::vector<std::vector<std::string>>& rows);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_integer(const IntegerMatrix& m);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_integral() const;
  /// Least common multiple of all entry denominators.
  Integer common_denominator() const;
  IntegerMatrix scaled_to_integer(const Integer& factor) const;

  Rational determinant() const;
  bool invertible() const { return determinant() != 0; }
  /// Throws PreconditionError when singular.
  RationalMatrix inverse() const;
  RationalMatrix power(std::uint64_t exponent) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// det(xI - A), monic of degree n.
  Polynomial characteristic_polynomial() const;
  /// Monic generator of {p : p(A) = 0}.
  Polynomial minimal_polynomial() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

}  // namespace fibrekit
