// Irreducibility over Q by modular factorization (distinct-degree and
// Cantor-Zassenhaus equal-degree splitting), multifactor Hensel lifting and
// exhaustive recombination of lifted factors.

#include <algorithm>
#include <cstdint>
#include <random>

#include "fibrekit/errors.hpp"
#include "fibrekit/polynomial.hpp"

namespace fibrekit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ------------------------------------------------------------ F_p[x]

class Fp {
 public:
  explicit Fp(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 from(const Integer& x) const {
    return static_cast<u64>(mod_floor(x, Integer(p_)).convert_to<unsigned long long>());
  }

 private:
  u64 p_;
};

using ModPoly = std::vector<u64>;  // lowest degree first, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly sub(const Fp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

ModPoly add(const Fp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

ModPoly mul(const Fp& f, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> divmod(const Fp& f, ModPoly a, const ModPoly& b) {
  int db = deg(b);
  if (db < 0) throw std::domain_error("ModPoly division by zero");
  if (deg(a) < db) return {{}, a};
  ModPoly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
  u64 inv_lead = f.inv(b.back());
  for (int i = deg(a); i >= db; --i) {
    u64 c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    u64 factor = f.mul(c, inv_lead);
    q[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      a[idx] = f.sub(a[idx], f.mul(factor, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly mod(const Fp& f, const ModPoly& a, const ModPoly& b) { return divmod(f, a, b).second; }

ModPoly monic(const Fp& f, ModPoly a) {
  if (a.empty()) return a;
  u64 inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

ModPoly gcd(const Fp& f, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

// s, t with s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const Fp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    ModPoly s2 = sub(f, s0, mul(f, q, s1));
    ModPoly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw InternalError("bezout: inputs not coprime mod p");
  u64 inv = f.inv(r0[0]);
  for (auto& c : s0) c = f.mul(c, inv);
  for (auto& c : t0) c = f.mul(c, inv);
  return {s0, t0};
}

ModPoly powmod(const Fp& f, ModPoly base, const Integer& exponent, const ModPoly& m) {
  ModPoly result{1};
  base = mod(f, base, m);
  Integer e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

ModPoly derivative(const Fp& f, const ModPoly& a) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(f.mul(a[i], i % f.p()));
  trim(out);
  return out;
}

// Splits a monic squarefree polynomial whose irreducible factors all have
// degree d.
void equal_degree_split(const Fp& f, const ModPoly& g, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer exponent = (boost::multiprecision::pow(Integer(f.p()), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, f.p() - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(deg(g)), 0);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(f, powmod(f, a, exponent, g), ModPoly{1});
    ModPoly h = gcd(f, b, g);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(const Fp& f, ModPoly g) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed);
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(g); ++d) {
    h = powmod(f, h, Integer(f.p()), g);
    ModPoly common = gcd(f, sub(f, h, x), g);
    if (deg(common) > 0) {
      equal_degree_split(f, common, d, rng, out);
      g = divmod(f, g, common).first;
      h = mod(f, h, g);
    }
  }
  if (deg(g) > 0) out.push_back(monic(f, g));
  return out;
}

// ------------------------------------------------------- Z[x] mod p^k

using ZPoly = std::vector<Integer>;  // lowest degree first

ZPoly to_z(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

ModPoly to_mod(const Fp& f, const ZPoly& a) {
  ModPoly out;
  for (const auto& c : a) out.push_back(f.from(c));
  trim(out);
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void reduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) c = mod_floor(c, m);
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Lifts f = g * h (mod p), h monic and g carrying the leading coefficient
// of f exactly, to f = g * h (mod p^k) with p^k >= target. Coefficients
// stay in [0, p^k) apart from the leading coefficient of g.
void hensel_lift(const Fp& fp, const ZPoly& f, ZPoly& g, ZPoly& h, const Integer& target,
                 Integer& modulus) {
  auto [s, t] = bezout(fp, to_mod(fp, g), to_mod(fp, h));
  Integer p(fp.p());
  modulus = p;
  while (modulus < target) {
    ZPoly gh = zmul(g, h);
    ZPoly e(std::max(f.size(), gh.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer diff = (i < f.size() ? f[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0));
      e[i] = diff / modulus;  // exact
    }
    ModPoly em = to_mod(fp, e);
    ModPoly hm = to_mod(fp, h);
    // e = g (e s) + h (e t) = g (e s + q h) + h r  where  e t = q g + r.
    auto [q, r] = divmod(fp, mul(fp, em, t), to_mod(fp, g));
    ModPoly dh = add(fp, mul(fp, em, s), mul(fp, q, hm));
    ModPoly dg = std::move(r);
    if (deg(dh) >= deg(hm) || deg(dg) >= static_cast<int>(g.size()) - 1) {
      throw InternalError("hensel_lift: correction degree out of range");
    }
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += modulus * dg[i];
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += modulus * dh[i];
    modulus *= p;
  }
}

// Lifts the modular factorization f = lc * prod(factors) (mod p) to monic
// factors modulo p^k >= target.
void lift_all(const Fp& fp, const ZPoly& f, const std::vector<ModPoly>& factors,
              const Integer& target, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    // The single factor is f / lc made monic modulo the lifting modulus.
    Integer p(fp.p());
    Integer m = p;
    while (m < target) m *= p;
    Integer lc = f.back();
    // Inverse of lc modulo m via Newton iteration from the inverse mod p.
    Integer inv(fp.inv(fp.from(lc)));
    Integer cur = p;
    while (cur < m) {
      cur *= cur;
      inv = mod_floor(inv * (2 - lc * inv), cur);
    }
    inv = mod_floor(inv, m);
    ZPoly u = f;
    for (auto& c : u) c = mod_floor(c * inv, m);
    out.push_back(u);
    return;
  }
  std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  ModPoly gm{fp.from(f.back())};
  for (const auto& a : left) gm = mul(fp, gm, a);
  ModPoly hm{1};
  for (const auto& a : right) hm = mul(fp, hm, a);
  ZPoly g = to_z(gm), h = to_z(hm);
  g.back() = f.back();
  Integer modulus;
  hensel_lift(fp, f, g, h, target, modulus);
  lift_all(fp, g, left, target, out);
  lift_all(fp, h, right, target, out);
}

std::vector<u64> small_primes(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::optional<Polynomial> exact_divisor(const ZPoly& candidate, const Polynomial& f) {
  Polynomial c = from_integers(candidate);
  if (c.degree() < 1 || c.degree() >= f.degree()) return std::nullopt;
  if (!f.divmod(c).second.is_zero()) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Polynomial> find_rational_factor(const Polynomial& input) {
  if (input.degree() < 1) throw PreconditionError("find_rational_factor: constant polynomial");
  if (input.degree() == 1) return std::nullopt;
  Polynomial f = from_integers(primitive_integer_part(input));
  if (!is_squarefree(f)) return gcd(f, f.derivative());
  if (f.coefficient(0) == 0) return Polynomial::x();

  ZPoly fz = primitive_integer_part(f);
  const Integer& lc = fz.back();
  Polynomial fprime = f.derivative();

  // Choose among a few good primes the one with the fewest modular factors.
  std::optional<Fp> best_field;
  std::vector<ModPoly> best_factors;
  int good = 0;
  for (u64 p : small_primes(20000)) {
    if (p == 2) continue;
    Fp fp(p);
    if (fp.from(lc) == 0) continue;
    ModPoly fm = to_mod(fp, fz);
    if (deg(gcd(fp, fm, derivative(fp, fm))) != 0) continue;
    auto factors = factor_mod_p(fp, monic(fp, fm));
    if (factors.size() == 1) return std::nullopt;
    if (!best_field || factors.size() < best_factors.size()) {
      best_field = fp;
      best_factors = std::move(factors);
    }
    if (++good == 5) break;
  }
  if (!best_field) throw InternalError("find_rational_factor: no suitable prime");
  const Fp& fp = *best_field;

  // Any factor of lc/lc(g) * g has coefficients below |lc| * B, where B is
  // a Mignotte-type bound 2^n (n+1) max|c|.
  Integer max_coeff = 0;
  for (const auto& c : fz) max_coeff = std::max(max_coeff, abs(c));
  auto n = static_cast<unsigned>(f.degree());
  Integer bound = abs(lc) * (Integer(1) << n) * (n + 1) * max_coeff;
  Integer target = 2 * bound + 1;

  std::vector<ZPoly> lifted;
  lift_all(fp, fz, best_factors, target, lifted);
  Integer modulus(fp.p());
  while (modulus < target) modulus *= fp.p();
  for (auto& u : lifted) reduce(u, modulus);

  std::size_t r = lifted.size();
  Integer half_mod = modulus / 2;
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    pick.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly candidate{lc};
      for (std::size_t i : pick) {
        candidate = zmul(candidate, lifted[i]);
        reduce(candidate, modulus);
      }
      for (auto& c : candidate) {
        if (c > half_mod) c -= modulus;
      }
      Polynomial cand = from_integers(candidate);
      if (!cand.is_zero()) {
        auto prim = primitive_integer_part(cand);
        if (auto factor = exact_divisor(prim, f)) return factor;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == r - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace fibrekit
