#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibrekit/numeric.hpp"

namespace fibrekit {

/// Univariate polynomial over Q, coefficients stored lowest degree first
/// and always trimmed (no trailing zeros; the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long long> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool is_squarefree(const Polynomial& p);

/// Scales to an integer polynomial with content 1 and positive leading
/// coefficient. Coefficients lowest degree first.
std::vector<Integer> primitive_integer_part(const Polynomial& p);
Polynomial from_integers(const std::vector<Integer>& coefficients);

/// Sturm sequence p, p', -rem(...), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct real roots in the closed interval [a, b] (a <= b).
std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// For a palindromic g of even degree 2d, the degree d polynomial h with
/// g(x) = x^d h(x + 1/x). Throws PreconditionError otherwise.
Polynomial trace_polynomial(const Polynomial& g);

/// Exact test that every complex root of a nonzero squarefree polynomial
/// has modulus one: strip the factors x - 1 and x + 1, require the rest to
/// be palindromic, substitute y = x + 1/x, and count roots of the result in
/// [-2, 2] with Sturm sequences.
bool roots_on_unit_circle(const Polynomial& squarefree);

/// A nontrivial factor over Q (lower degree, degree >= 1) when the
/// polynomial is reducible; nullopt when it is irreducible. Uses
/// factorization modulo a prime, Hensel lifting and recombination of
/// modular factors. Throws PreconditionError for constants.
std::optional<Polynomial> find_rational_factor(const Polynomial& p);
bool is_irreducible_over_q(const Polynomial& p);

}  // namespace fibrekit
