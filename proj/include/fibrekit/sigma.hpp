#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibrekit/complex.hpp"
#include "fibrekit/homology.hpp"
#include "fibrekit/numeric.hpp"
#include "fibrekit/pi1.hpp"

namespace fibrekit {

/// A character of the right-angled Artin group A_L, given by its rational
/// value on every vertex generator. The zero character is rejected.
class Character {
 public:
  /// `values` is indexed by vertex id over the label universe; entries for
  /// labels that are not vertices of L are ignored and stored as zero.
  /// Throws PreconditionError for the zero character, InputError for a
  /// size mismatch.
  Character(SimplicialComplex complex, std::vector<Rational> values);

  /// Every vertex of L must be assigned; unknown labels are InputError.
  static Character from_labels(SimplicialComplex complex,
                               const std::map<std::string, Rational>& values);
  /// Value 1 on every vertex.
  static Character ones(SimplicialComplex complex);

  const SimplicialComplex& complex() const { return complex_; }
  const Rational& value(VertexId v) const { return values_.at(v); }
  const std::vector<Rational>& values() const { return values_; }

  Character scaled(const Rational& factor) const;

 private:
  SimplicialComplex complex_;
  std::vector<Rational> values_;
};

struct DeadLivingSplit {
  SimplicialComplex dead;    // full subcomplex on zero-valued vertices
  SimplicialComplex living;  // full subcomplex on nonzero-valued vertices
};

DeadLivingSplit dead_living(const Character& phi);

/// Why the living-link criterion failed.
struct SigmaCertificate {
  enum class Kind {
    LivingLinkNotAcyclic,   // some dead simplex has a non-acyclic living link
    LivingNotSimplyConnected,
  };
  Kind kind = Kind::LivingLinkNotAcyclic;
  Simplex dead_simplex;
  /// n - dim(sigma) - 1
  int required_acyclicity = -1;
  /// Degree of the nonvanishing reduced homology group (-1: empty link).
  int degree = -1;
  HomologyGroup group;
  std::string detail;
};

struct SigmaVerdict {
  int n = 0;
  /// phi in Sigma^{n+1}(A_L; Z), equivalently ker(phi) of type FP_{n+1}.
  bool in_sigma_z = false;
  /// phi in Sigma^{n+1}(A_L), equivalently ker(phi) of type F_{n+1}.
  Decision in_sigma = Decision::No;
  std::optional<SigmaCertificate> certificate;
  /// Number of dead simplices (including the empty one) inspected.
  std::size_t dead_simplices_checked = 0;
  /// Simple connectivity of the living subcomplex when it was consulted.
  std::optional<SimpleConnectivity> living_pi1;
};

/// Living-link criterion: for every dead simplex sigma (including the empty
/// simplex) the living link is (n - dim sigma - 1)-acyclic; for the
/// homotopical version the living subcomplex must also be n-connected,
/// decided as simply connected plus n-acyclic when n >= 1.
/// Throws PreconditionError for non-flag L.
SigmaVerdict sigma_membership(const Character& phi, int n,
                              std::size_t budget = kDefaultRewriteBudget);

struct FinitenessRow {
  int k = 1;
  bool fp = false;
  Decision f = Decision::No;
  /// k >= dim L + 1: the criterion at this degree equals the criterion at
  /// every higher degree.
  bool stable = false;
  std::optional<SigmaCertificate> certificate;
};

struct FinitenessReport {
  std::vector<FinitenessRow> rows;  // k = 1 .. max(n_max, dim L + 1)
  /// The table reaches a stable degree, so rows settle all higher degrees.
  bool stabilized = false;
  bool type_fp = false;
  Decision type_f = Decision::No;
  /// type_f = Yes is obtained from F_n for all n plus finite dimensionality
  /// of subgroups of RAAGs.
  bool type_f_promoted = false;
  std::optional<SimpleConnectivity> living_pi1;
  std::string type_f_note;
};

/// Throws PreconditionError for n_max < 1, non-flag L.
FinitenessReport kernel_finiteness(const Character& phi, int n_max,
                                   std::size_t budget = kDefaultRewriteBudget);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Finiteness type of the kernel of the transferred character on the
/// lattice built from (L, u, w); present only when every hypothesis holds.
struct GammaKernelReport {
  std::vector<Hypothesis> hypotheses;
  std::optional<FinitenessReport> report;
  std::vector<std::string> notes;

  bool hypotheses_hold() const;
};

/// Hypotheses: |V(L)| >= 3, u and w not adjacent, L not a non-trivial join.
/// Throws InputError for unknown vertices and PreconditionError for
/// non-flag L.
GammaKernelReport gamma_kernel_type(const Character& phi, VertexId u, VertexId w, int n_max,
                                    std::size_t budget = kDefaultRewriteBudget);

}  // namespace fibrekit
