#include "fibrekit/sigma.hpp"

#include <algorithm>

#include "fibrekit/errors.hpp"

namespace fibrekit {

// -------------------------------------------------------------- Character

Character::Character(SimplicialComplex complex, std::vector<Rational> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
  if (values_.size() != complex_.universe_size()) {
    throw InputError("character: expected " + std::to_string(complex_.universe_size()) +
                     " values, got " + std::to_string(values_.size()));
  }
  bool nonzero = false;
  for (VertexId v = 0; v < values_.size(); ++v) {
    if (!complex_.has_vertex(v)) {
      values_[v] = 0;
    } else if (values_[v] != 0) {
      nonzero = true;
    }
  }
  if (!nonzero) throw PreconditionError("the zero character is not a character of interest");
}

Character Character::from_labels(SimplicialComplex complex,
                                 const std::map<std::string, Rational>& values) {
  std::vector<Rational> dense(complex.universe_size());
  std::vector<bool> assigned(complex.universe_size(), false);
  for (const auto& [label, value] : values) {
    VertexId v = complex.id_of(label);
    dense[v] = value;
    assigned[v] = true;
  }
  for (VertexId v : complex.vertices()) {
    if (!assigned[v]) throw InputError("character has no value for vertex \"" + complex.label(v) + "\"");
  }
  return Character(std::move(complex), std::move(dense));
}

Character Character::ones(SimplicialComplex complex) {
  std::vector<Rational> values(complex.universe_size(), Rational(1));
  return Character(std::move(complex), std::move(values));
}

Character Character::scaled(const Rational& factor) const {
  std::vector<Rational> out = values_;
  for (auto& x : out) x *= factor;
  return Character(complex_, std::move(out));
}

DeadLivingSplit dead_living(const Character& phi) {
  const auto& l = phi.complex();
  std::vector<bool> dead(l.universe_size(), false);
  std::vector<bool> living(l.universe_size(), false);
  for (VertexId v : l.vertices()) {
    (phi.value(v) == 0 ? dead : living)[v] = true;
  }
  return {restrict_to(l, dead), restrict_to(l, living)};
}

// ------------------------------------------------------------ criterion

namespace {

std::vector<bool> living_mask(const Character& phi) {
  const auto& l = phi.complex();
  std::vector<bool> living(l.universe_size(), false);
  for (VertexId v : l.vertices()) living[v] = phi.value(v) != 0;
  return living;
}

void require_flag(const SimplicialComplex& l) {
  auto check = check_flag(l);
  if (!check.is_flag) {
    throw PreconditionError("L is not a flag complex (empty simplex " + l.format(*check.witness) + ")");
  }
}

// Homological part of the criterion at degree n. Dead simplices are visited
// by dimension, then lexicographically; the first failure is reported.
SigmaVerdict homological_criterion(const Character& phi, int n) {
  const auto& l = phi.complex();
  auto split = dead_living(phi);
  auto living = living_mask(phi);
  SigmaVerdict out;
  out.n = n;
  out.in_sigma_z = true;
  int top = std::min(n, split.dead.dimension());
  for (int d = -1; d <= top; ++d) {
    for (const auto& sigma : split.dead.simplices(d)) {
      ++out.dead_simplices_checked;
      int required = n - d - 1;
      auto living_link = restrict_to(link(l, sigma), living);
      auto bad = first_nonacyclic_degree(living_link, required);
      if (!bad) continue;
      SigmaCertificate cert;
      cert.kind = SigmaCertificate::Kind::LivingLinkNotAcyclic;
      cert.dead_simplex = sigma;
      cert.required_acyclicity = required;
      cert.degree = *bad;
      cert.group = reduced_homology(living_link, *bad);
      cert.detail = "living link of dead simplex " + l.format(sigma) + " has reduced H_" +
                    std::to_string(*bad) + " = " + cert.group.to_string() + " but must be " +
                    std::to_string(required) + "-acyclic";
      out.in_sigma_z = false;
      out.in_sigma = Decision::No;
      out.certificate = std::move(cert);
      return out;
    }
  }
  return out;
}

// Adds the homotopical part to a homological verdict.
SigmaVerdict finish(SigmaVerdict out, const std::optional<SimpleConnectivity>& living_pi1) {
  if (!out.in_sigma_z) return out;
  if (out.n <= 0) {
    // 0-connected is connected and nonempty, already forced by the empty
    // dead simplex.
    out.in_sigma = Decision::Yes;
    return out;
  }
  // n >= 1: the empty dead simplex forces L* n-acyclic, hence nonempty and
  // connected. Hurewicz reduces n-connectivity to simple connectivity.
  out.living_pi1 = living_pi1;
  out.in_sigma = living_pi1->answer;
  if (living_pi1->answer == Decision::No) {
    SigmaCertificate cert;
    cert.kind = SigmaCertificate::Kind::LivingNotSimplyConnected;
    cert.detail = "L* is not simply connected (" + living_pi1->reason + ")";
    out.certificate = std::move(cert);
  }
  return out;
}

SimpleConnectivity living_simple_connectivity(const Character& phi, std::size_t budget) {
  auto living = dead_living(phi).living;
  if (living.is_empty() || !is_connected(living)) {
    return {Decision::No, "L* is empty or disconnected", 0};
  }
  return try_simply_connected(living, budget);
}

}  // namespace

SigmaVerdict sigma_membership(const Character& phi, int n, std::size_t budget) {
  if (n < 0) throw PreconditionError("sigma_membership: degree n must be >= 0");
  require_flag(phi.complex());
  auto homological = homological_criterion(phi, n);
  if (!homological.in_sigma_z || n <= 0) return finish(std::move(homological), std::nullopt);
  return finish(std::move(homological), living_simple_connectivity(phi, budget));
}

FinitenessReport kernel_finiteness(const Character& phi, int n_max, std::size_t budget) {
  if (n_max < 1) throw PreconditionError("kernel_finiteness: n_max must be >= 1");
  const auto& l = phi.complex();
  require_flag(l);
  int stable_from = l.dimension() + 1;
  int top = std::max(n_max, stable_from);

  FinitenessReport report;
  std::optional<SimpleConnectivity> pi1;
  for (int k = 1; k <= top; ++k) {
    auto homological = homological_criterion(phi, k - 1);
    if (homological.in_sigma_z && k - 1 >= 1 && !pi1) {
      pi1 = living_simple_connectivity(phi, budget);
    }
    auto verdict = finish(std::move(homological), pi1);
    FinitenessRow row;
    row.k = k;
    row.fp = verdict.in_sigma_z;
    row.f = verdict.in_sigma;
    row.stable = k >= stable_from;
    row.certificate = verdict.certificate;
    report.rows.push_back(std::move(row));
  }
  report.stabilized = top >= stable_from;

  // All acyclicity demands are saturated one degree past the dimension.
  auto saturated = homological_criterion(phi, l.dimension() + 1);
  report.type_fp = saturated.in_sigma_z;
  if (!report.type_fp) {
    report.type_f = Decision::No;
    report.type_f_note = "kernel is not of type FP";
  } else {
    if (!pi1) pi1 = living_simple_connectivity(phi, budget);
    report.type_f = pi1->answer;
    report.type_f_promoted = pi1->answer == Decision::Yes;
    report.type_f_note =
        pi1->answer == Decision::Yes
            ? "type F: F_n for every n, promoted to type F because subgroups of a RAAG have "
              "finite-dimensional classifying spaces"
            : "type F undecided: simple connectivity of L* is " + to_string(pi1->answer) + " (" +
                  pi1->reason + ")";
  }
  report.living_pi1 = pi1;
  return report;
}

bool GammaKernelReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.holds; });
}

GammaKernelReport gamma_kernel_type(const Character& phi, VertexId u, VertexId w, int n_max,
                                    std::size_t budget) {
  const auto& l = phi.complex();
  for (VertexId v : {u, w}) {
    if (!l.has_vertex(v)) throw InputError("gamma_kernel_type: unknown vertex id " + std::to_string(v));
  }
  require_flag(l);
  GammaKernelReport out;
  std::size_t m = l.vertices().size();
  out.hypotheses.push_back({"L has at least 3 vertices", m >= 3, std::to_string(m) + " vertices"});
  bool apart = u != w && !l.adjacent(u, w);
  out.hypotheses.push_back({"u and w are not joined by an edge", apart,
                            apart ? l.label(u) + " and " + l.label(w) + " are not adjacent"
                                  : (u == w ? "u and w coincide"
                                            : l.label(u) + " and " + l.label(w) + " are adjacent")});
  auto join_witness = find_join(l);
  std::string join_detail = "complement of the 1-skeleton is connected";
  if (join_witness) {
    join_detail = "L is a non-trivial join of " +
                  l.format(Simplex(join_witness->first)) + " and " +
                  l.format(Simplex(join_witness->second));
  }
  out.hypotheses.push_back({"L is not a non-trivial join", !join_witness, join_detail});
  if (!out.hypotheses_hold()) return out;

  out.report = kernel_finiteness(phi, n_max, budget);
  out.notes.push_back(
      "finiteness type of ker(psi) on the lattice Gamma_L equals that of ker(phi) on A_L, "
      "degree by degree");
  out.notes.push_back(
      "the type FP / type F transfer applies to a torsion-free finite-index subgroup of Gamma_L");
  return out;
}

}  // namespace fibrekit
