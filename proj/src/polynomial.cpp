#include "fibrekit/polynomial.hpp"

#include <stdexcept>

#include "fibrekit/errors.hpp"

namespace fibrekit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coefficients) {
  for (long long x : coefficients) c_.emplace_back(x);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> out = a.c_;
  for (auto& x : out) x = -x;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out = a.c_;
  for (auto& x : out) x *= s;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational f = top / divisor.leading();
    quot[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = mag != 1 || i == 0;
    if (show_coeff) out += fibrekit::to_string(mag);
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Integer> primitive_integer_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, boost::multiprecision::denominator(c));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
    content = gcd(content, v);
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

Polynomial from_integers(const std::vector<Integer>& coefficients) {
  std::vector<Rational> c;
  for (const auto& x : coefficients) c.emplace_back(x);
  return Polynomial(std::move(c));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    Rational v = q(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw PreconditionError("count_real_roots: zero polynomial");
  if (a > b) return 0;
  if (p.degree() == 0) return 0;
  // Sturm counts distinct roots in (a, b] for any p (the sequence ends in
  // gcd(p, p'), which does not change the count).
  auto seq = sturm_sequence(p);
  std::size_t count = sign_changes(seq, a) - sign_changes(seq, b);
  if (p(a) == 0) ++count;
  return count;
}

Polynomial trace_polynomial(const Polynomial& g) {
  int deg = g.degree();
  if (deg < 0 || deg % 2 != 0) throw PreconditionError("trace_polynomial: degree must be even");
  auto d = static_cast<std::size_t>(deg / 2);
  for (std::size_t i = 0; i <= 2 * d; ++i) {
    if (g.coefficient(i) != g.coefficient(2 * d - i)) {
      throw PreconditionError("trace_polynomial: polynomial is not palindromic");
    }
  }
  // x^j + x^-j = P_j(y) with P_0 = 2, P_1 = y, P_{j+1} = y P_j - P_{j-1}.
  Polynomial y = Polynomial::x();
  Polynomial h = Polynomial::constant(g.coefficient(d));
  Polynomial prev = Polynomial::constant(2);
  Polynomial cur = y;
  for (std::size_t j = 1; j <= d; ++j) {
    h = h + g.coefficient(d + j) * cur;
    Polynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return h;
}

bool roots_on_unit_circle(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw PreconditionError("roots_on_unit_circle: zero polynomial");
  Polynomial g = squarefree.monic();
  for (long long r : {1LL, -1LL}) {
    Polynomial factor{-r, 1};
    auto [q, rem] = g.divmod(factor);
    if (rem.is_zero()) g = q;
  }
  if (g.degree() == 0) return true;
  if (g.degree() % 2 != 0) return false;
  if (g.coefficient(0) == 0) return false;
  // Unit-circle roots of a real polynomial come in pairs z, 1/z, so g must
  // be a scalar multiple of its reversal; without roots +-1 the scalar is 1.
  Polynomial normalized = (Rational(1) / g.coefficient(0)) * g;
  for (int i = 0; i <= normalized.degree(); ++i) {
    if (normalized.coefficient(static_cast<std::size_t>(i)) !=
        normalized.coefficient(static_cast<std::size_t>(normalized.degree() - i))) {
      return false;
    }
  }
  Polynomial h = trace_polynomial(normalized);
  return count_real_roots(h, -2, 2) == static_cast<std::size_t>(h.degree());
}

bool is_irreducible_over_q(const Polynomial& p) { return !find_rational_factor(p).has_value(); }

}  // namespace fibrekit
