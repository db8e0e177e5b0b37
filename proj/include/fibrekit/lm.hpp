#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibrekit/homology.hpp"
#include "fibrekit/lattice.hpp"
#include "fibrekit/polynomial.hpp"
#include "fibrekit/presentation.hpp"
#include "fibrekit/rational_matrix.hpp"

namespace fibrekit {

inline constexpr std::size_t kDefaultPowerBound = 12;

/// {v in Z^n : Av in Z^n}. Throws PreconditionError for singular A.
LatticeSubgroup maximal_sublattice(const RationalMatrix& a);

/// True when every basis column v of `l` has Av integral.
bool sublattice_valid_for(const RationalMatrix& a, const LatticeSubgroup& l);

struct OrderClassification {
  /// nullopt means infinite order.
  std::optional<std::uint64_t> order;
  /// Candidate orders (lcms of d with sum of phi(d) <= n), increasing.
  std::vector<std::uint64_t> candidates;
  bool finite() const { return order.has_value(); }
};

/// Certified: a finite order is the lcm of the orders of the roots of
/// unity among the eigenvalues, whose cyclotomic factors have total degree
/// <= n. Every candidate is tested. Throws PreconditionError for singular
/// A or n > 40.
OrderClassification order_classification(const RationalMatrix& a);

struct OrthogonalityCheck {
  bool conj_orthogonal = false;
  Polynomial minimal_polynomial;
  bool squarefree = false;
  bool unit_circle = false;
  std::string reason;
};

/// Conjugate in GL_n(R) to an orthogonal matrix iff the minimal
/// polynomial is squarefree with every root on the unit circle.
OrthogonalityCheck conj_orthogonal(const RationalMatrix& a);

struct Irreducibility {
  enum class Kind { Certified, UpToPower, Fails };
  Kind kind = Kind::UpToPower;
  /// UpToPower: the bound K. Fails: the first reducible power k.
  std::size_t power = 0;
  /// Fails: a proper factor of the characteristic polynomial of A^k.
  std::optional<Polynomial> factor;
  Polynomial characteristic_polynomial;  // of A^power for Fails
  /// Which notion of invariant subspace was tested.
  std::string field_note;
  std::string to_string() const;
};

/// n = 1: certified (R has no proper nontrivial subspace). n = 2 with A
/// conjugate orthogonal of infinite order: certified over R, with every
/// power up to K checked for a negative discriminant. Otherwise the first
/// k <= K with char(A^k) reducible over Q, or UpToPower(K).
Irreducibility irreducibility(const RationalMatrix& a, std::size_t max_power);

/// Generators x_1..x_n (a, b, c when n <= 3) and t, relators [x_i, x_j]
/// for i < j, then t x^v t^-1 x^-Av for each column v of `columns`.
/// Throws PreconditionError when some Av is not integral.
Presentation lm_presentation(const RationalMatrix& a, const IntegerMatrix& columns);

/// Free rank and torsion of the abelianized group, via the Smith form of
/// the relator exponent-sum matrix.
HomologyGroup abelianization(const Presentation& p);

struct H1Check {
  enum class Status { Pass, Fail, NotApplicable };
  Status status = Status::NotApplicable;
  std::size_t hom_rank = 0;
  /// First Betti number of the quotient graph (one vertex, one loop).
  std::size_t quotient_betti = 1;
  std::string detail;
};

std::string to_string(H1Check::Status s);

struct LMAnalysis {
  enum class Verdict {
    IrreducibleNoFibring,   // (a)
    ReducibleFibres,        // (b)
    Conditional,            // (c)
    Inapplicable,           // (d)
  };

  RationalMatrix matrix;
  Rational determinant;
  OrderClassification order;
  OrthogonalityCheck orthogonality;
  Irreducibility irreducibility;
  bool hypotheses_hold = false;
  LatticeSubgroup sublattice;
  /// Columns used for the presentation (user basis or HNF basis).
  IntegerMatrix presentation_basis;
  bool sublattice_maximal = false;
  Integer maximal_index;
  Presentation presentation;
  HomologyGroup abelianization;
  std::size_t hom_rank = 0;
  H1Check h1;
  Verdict verdict = Verdict::Inapplicable;
  std::string verdict_text;
  std::vector<std::string> notes;
};

std::string verdict_code(LMAnalysis::Verdict v);

/// Runs every gate. `columns`, when given, is the user basis of L; it must
/// have full rank and integral image under A (PreconditionError otherwise).
LMAnalysis lm_analyze(const RationalMatrix& a, const std::optional<IntegerMatrix>& columns,
                      std::size_t max_power = kDefaultPowerBound);

}  // namespace fibrekit
