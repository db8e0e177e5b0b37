#include "fibrekit/lm.hpp"

#include <numeric>
#include <set>

#include "fibrekit/errors.hpp"
#include "fibrekit/smith.hpp"

namespace fibrekit {

namespace {

void require_invertible(const RationalMatrix& a) {
  if (a.size() == 0) throw InputError("matrix is empty");
  if (a.determinant() == 0) throw PreconditionError("A is singular");
}

std::optional<std::vector<Integer>> integral_image(const RationalMatrix& a,
                                                   const std::vector<Integer>& v) {
  std::vector<Rational> rv(v.begin(), v.end());
  auto image = a.apply(rv);
  std::vector<Integer> out;
  for (const auto& x : image) {
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

std::vector<Integer> column_of(const IntegerMatrix& m, std::size_t j) {
  std::vector<Integer> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

Polynomial power_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(1) % modulus;
  Polynomial b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

}  // namespace

LatticeSubgroup maximal_sublattice(const RationalMatrix& a) {
  require_invertible(a);
  std::size_t n = a.size();
  Integer d = a.common_denominator();
  IntegerMatrix b = a.scaled_to_integer(d);
  // Kernel of [B | -dI] projected to the first n coordinates.
  IntegerMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = b(i, j);
    m(i, n + i) = -d;
  }
  auto snf = smith_normal_form(m, true);
  if (snf.rank() != n) throw InternalError("maximal_sublattice: [B | -dI] lost rank");
  const IntegerMatrix& v = *snf.right;
  IntegerMatrix generators(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) generators(i, j) = v(i, n + j);
  }
  auto lattice = LatticeSubgroup::from_columns(generators);
  if (!sublattice_valid_for(a, lattice)) throw InternalError("maximal_sublattice: image not integral");
  return lattice;
}

bool sublattice_valid_for(const RationalMatrix& a, const LatticeSubgroup& l) {
  if (l.dimension() != a.size()) return false;
  for (std::size_t j = 0; j < l.dimension(); ++j) {
    if (!integral_image(a, l.column(j))) return false;
  }
  return true;
}

OrderClassification order_classification(const RationalMatrix& a) {
  require_invertible(a);
  std::uint64_t n = a.size();
  if (n > 40) throw PreconditionError("order_classification supports n <= 40");
  std::set<std::pair<std::uint64_t, std::uint64_t>> states{{0, 1}};  // (degree used, lcm)
  for (std::uint64_t d = 1; d <= 2 * n * n + 2; ++d) {
    std::uint64_t f = euler_phi(d);
    if (f > n) continue;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> added;
    for (const auto& [used, l] : states) {
      if (used + f <= n) added.emplace_back(used + f, std::lcm(l, d));
    }
    states.insert(added.begin(), added.end());
  }
  OrderClassification out;
  std::set<std::uint64_t> candidates;
  for (const auto& s : states) candidates.insert(s.second);
  out.candidates.assign(candidates.begin(), candidates.end());

  Polynomial minimal = a.minimal_polynomial();
  Polynomial x = Polynomial::x();
  for (std::uint64_t m : out.candidates) {
    if (power_mod(x, m, minimal) != Polynomial::constant(1)) continue;
    if (a.power(m) != RationalMatrix::identity(a.size())) {
      throw InternalError("order_classification: minimal polynomial divides x^m - 1 but A^m != I");
    }
    out.order = m;
    break;
  }
  return out;
}

OrthogonalityCheck conj_orthogonal(const RationalMatrix& a) {
  require_invertible(a);
  OrthogonalityCheck out;
  out.minimal_polynomial = a.minimal_polynomial();
  out.squarefree = is_squarefree(out.minimal_polynomial);
  if (!out.squarefree) {
    out.reason = "minimal polynomial " + out.minimal_polynomial.to_string() + " is not squarefree";
    return out;
  }
  out.unit_circle = roots_on_unit_circle(out.minimal_polynomial);
  out.conj_orthogonal = out.unit_circle;
  out.reason = out.unit_circle
                   ? "minimal polynomial " + out.minimal_polynomial.to_string() +
                         " is squarefree with every root on the unit circle"
                   : "minimal polynomial " + out.minimal_polynomial.to_string() +
                         " has a root off the unit circle";
  return out;
}

std::string Irreducibility::to_string() const {
  switch (kind) {
    case Kind::Certified:
      return "Certified";
    case Kind::UpToPower:
      return "UpToPower(" + std::to_string(power) + ")";
    case Kind::Fails:
      return "Fails(" + std::to_string(power) + ")";
  }
  return "?";
}

Irreducibility irreducibility(const RationalMatrix& a, std::size_t max_power) {
  require_invertible(a);
  if (max_power < 1) throw PreconditionError("power bound K must be >= 1");
  std::size_t n = a.size();
  Irreducibility out;
  if (n == 1) {
    out.kind = Irreducibility::Kind::Certified;
    out.field_note = "n = 1: R^1 has no proper nontrivial subspace";
    return out;
  }
  if (n == 2 && !order_classification(a).finite() && conj_orthogonal(a).conj_orthogonal) {
    RationalMatrix p = a;
    for (std::size_t k = 1; k <= max_power; ++k) {
      Polynomial c = p.characteristic_polynomial();
      Rational disc = c.coefficient(1) * c.coefficient(1) - 4 * c.coefficient(0);
      if (disc >= 0) {
        throw InternalError("irreducibility: power " + std::to_string(k) +
                            " of an irrational rotation has a real eigenvalue");
      }
      p = p * a;
    }
    out.kind = Irreducibility::Kind::Certified;
    out.field_note =
        "certified over R: A is conjugate to a rotation of infinite order, so no power has a "
        "real eigenvector; negative discriminant checked for k <= " + std::to_string(max_power);
    return out;
  }
  out.field_note =
      "tested over Q: char(A^k) irreducible over Q means A^k leaves no proper nontrivial "
      "rational subspace invariant";
  if (n > 2) out.field_note += "; invariant real subspaces are not excluded for n > 2";
  RationalMatrix p = a;
  for (std::size_t k = 1; k <= max_power; ++k) {
    Polynomial c = p.characteristic_polynomial();
    if (auto factor = find_rational_factor(c)) {
      out.kind = Irreducibility::Kind::Fails;
      out.power = k;
      out.factor = factor->monic();
      out.characteristic_polynomial = c;
      return out;
    }
    p = p * a;
  }
  out.kind = Irreducibility::Kind::UpToPower;
  out.power = max_power;
  return out;
}

Presentation lm_presentation(const RationalMatrix& a, const IntegerMatrix& columns) {
  std::size_t n = a.size();
  if (columns.rows() != n) throw InputError("sublattice basis has the wrong dimension");
  Presentation p;
  p.generators = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    p.names.push_back(n <= 3 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  }
  p.names.push_back("t");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) p.relators.push_back(commutator(i, j));
  }
  const int t = static_cast<int>(n) + 1;
  auto append_power = [](Word& w, std::size_t gen, const Integer& e) {
    int letter = static_cast<int>(gen) + 1;
    Integer count = abs(e);
    for (Integer c = 0; c < count; ++c) w.push_back(e < 0 ? -letter : letter);
  };
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    auto v = column_of(columns, j);
    auto image = integral_image(a, v);
    if (!image) throw PreconditionError("basis column " + std::to_string(j + 1) + " has non-integral image under A");
    Word w{t};
    for (std::size_t i = 0; i < n; ++i) append_power(w, i, v[i]);
    w.push_back(-t);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t i = n - 1 - step;
      append_power(w, i, -(*image)[i]);
    }
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

HomologyGroup abelianization(const Presentation& p) {
  HomologyGroup out;
  if (p.relators.empty()) {
    out.free_rank = p.generators;
    return out;
  }
  IntegerMatrix m(p.relators.size(), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = exponent_sums(p.relators[r], p.generators);
    for (std::size_t g = 0; g < p.generators; ++g) m(r, g) = sums[g];
  }
  auto snf = smith_normal_form(m);
  out.free_rank = p.generators - snf.rank();
  out.torsion = snf.torsion();
  return out;
}

std::string to_string(H1Check::Status s) {
  switch (s) {
    case H1Check::Status::Pass:
      return "pass";
    case H1Check::Status::Fail:
      return "fail";
    case H1Check::Status::NotApplicable:
      return "not applicable";
  }
  return "?";
}

std::string verdict_code(LMAnalysis::Verdict v) {
  switch (v) {
    case LMAnalysis::Verdict::IrreducibleNoFibring:
      return "a";
    case LMAnalysis::Verdict::ReducibleFibres:
      return "b";
    case LMAnalysis::Verdict::Conditional:
      return "c";
    case LMAnalysis::Verdict::Inapplicable:
      return "d";
  }
  return "?";
}

LMAnalysis lm_analyze(const RationalMatrix& a, const std::optional<IntegerMatrix>& columns,
                      std::size_t max_power) {
  require_invertible(a);
  LMAnalysis out;
  out.matrix = a;
  out.determinant = a.determinant();
  auto maximal = maximal_sublattice(a);
  out.maximal_index = maximal.index();
  if (columns) {
    if (columns->rows() != a.size()) throw InputError("sublattice basis has the wrong dimension");
    out.sublattice = LatticeSubgroup::from_columns(*columns);
    out.presentation_basis = *columns;
  } else {
    out.sublattice = maximal;
    out.presentation_basis = maximal.basis();
  }
  out.presentation = lm_presentation(a, out.presentation_basis);
  out.sublattice_maximal = out.sublattice == maximal;

  out.order = order_classification(a);
  out.orthogonality = conj_orthogonal(a);
  out.irreducibility = irreducibility(a, max_power);
  out.hypotheses_hold = !out.order.finite() && out.orthogonality.conj_orthogonal;

  out.abelianization = abelianization(out.presentation);
  out.hom_rank = out.abelianization.free_rank;

  out.h1.hom_rank = out.hom_rank;
  if (!out.hypotheses_hold) {
    out.h1.status = H1Check::Status::NotApplicable;
    out.h1.detail = "A is not an infinite-order matrix conjugate to an orthogonal one";
  } else if (out.irreducibility.kind == Irreducibility::Kind::Fails) {
    out.h1.status = H1Check::Status::NotApplicable;
    out.h1.detail = "the lattice is reducible";
  } else {
    out.h1.status = out.hom_rank == out.h1.quotient_betti ? H1Check::Status::Pass : H1Check::Status::Fail;
    out.h1.detail = "rank Hom(Gamma, Z) = " + std::to_string(out.hom_rank) +
                    ", first Betti number of the quotient graph = 1";
    if (out.irreducibility.kind == Irreducibility::Kind::UpToPower) {
      out.h1.detail += " (irreducibility only checked up to power " +
                       std::to_string(out.irreducibility.power) + ")";
    }
  }

  if (!out.hypotheses_hold) {
    out.verdict = LMAnalysis::Verdict::Inapplicable;
    out.verdict_text = out.order.finite()
                           ? "uniform lattice hypotheses fail (A has finite order " +
                                 std::to_string(*out.order.order) + "); no lattice verdict"
                           : "uniform lattice hypotheses fail (A is not conjugate to an orthogonal "
                             "matrix); no lattice verdict";
  } else {
    switch (out.irreducibility.kind) {
      case Irreducibility::Kind::Certified:
        out.verdict = LMAnalysis::Verdict::IrreducibleNoFibring;
        out.verdict_text = "irreducible uniform lattice; does NOT virtually algebraically fibre";
        break;
      case Irreducibility::Kind::Fails:
        out.verdict = LMAnalysis::Verdict::ReducibleFibres;
        out.verdict_text = "reducible evidence at power " + std::to_string(out.irreducibility.power) +
                           "; virtually algebraically fibres";
        break;
      case Irreducibility::Kind::UpToPower:
        out.verdict = LMAnalysis::Verdict::Conditional;
        out.verdict_text = "no reducibility witness up to power " +
                           std::to_string(out.irreducibility.power) + "; verdict conditional";
        break;
    }
  }
  if (out.hypotheses_hold) {
    out.notes.push_back(
        "LM(A,L) is a uniform lattice in Isom(E^n) x Aut(T) because A has infinite order and is "
        "conjugate to an orthogonal matrix");
    out.notes.push_back(
        "a uniform lattice in Isom(E^n) x Aut(T) virtually algebraically fibres iff it is reducible");
  }
  if (out.irreducibility.kind == Irreducibility::Kind::UpToPower) {
    out.notes.push_back("no global bound on the power K is certified");
  }
  out.notes.push_back(out.irreducibility.field_note);
  return out;
}

}  // namespace fibrekit
