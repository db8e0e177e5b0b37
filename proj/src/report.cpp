#include "fibrekit/report.hpp"

#include <sstream>

namespace fibrekit {

using io::Json;

Json Report::to_json() const {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = command;
  out["status"] = status;
  if (!error.empty()) out["error"] = error;
  out["result"] = result;
  out["certificates"] = certificates;
  out["hypotheses"] = hypotheses;
  out["provenance"] = provenance;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << status << "\n";
  if (!error.empty()) os << "error: " << error << "\n";
  for (const auto& line : lines) os << line << "\n";
  if (!hypotheses.empty()) {
    os << "hypotheses:\n";
    for (const auto& h : hypotheses) {
      os << "  [" << (h["holds"].get<bool>() ? "x" : " ") << "] " << h["name"].get<std::string>() << " ("
         << h["detail"].get<std::string>() << ")\n";
    }
  }
  for (const auto& p : provenance) os << "source: " << p << "\n";
  return os.str();
}

Json labels_json(const SimplicialComplex& k, std::span<const VertexId> ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(k.label(v));
  return out;
}

Json homology_json(const HomologyGroup& h) {
  Json out;
  out["free_rank"] = h.free_rank;
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  out["torsion"] = std::move(torsion);
  out["text"] = h.to_string();
  return out;
}

Json sigma_certificate_json(const SigmaCertificate& c, const SimplicialComplex& l) {
  Json out;
  if (c.kind == SigmaCertificate::Kind::LivingLinkNotAcyclic) {
    out["kind"] = "living_link_not_acyclic";
    out["dead_simplex"] = labels_json(l, c.dead_simplex.vertices());
    out["dead_simplex_dimension"] = c.dead_simplex.dimension();
    out["required_acyclicity"] = c.required_acyclicity;
    out["degree"] = c.degree;
    out["group"] = homology_json(c.group);
  } else {
    out["kind"] = "living_not_simply_connected";
  }
  out["detail"] = c.detail;
  return out;
}

std::string sigma_certificate_text(const SigmaCertificate& c, const SimplicialComplex&) {
  return "certificate: " + c.detail;
}

Json simple_connectivity_json(const SimpleConnectivity& s) {
  Json out;
  out["answer"] = to_string(s.answer);
  out["reason"] = s.reason;
  out["steps"] = s.steps;
  return out;
}

Json finiteness_json(const FinitenessReport& r, const SimplicialComplex& l) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["k"] = row.k;
    j["fp"] = row.fp;
    j["f"] = to_string(row.f);
    j["stable"] = row.stable;
    j["certificate"] = row.certificate ? sigma_certificate_json(*row.certificate, l) : Json(nullptr);
    rows.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["stabilized"] = r.stabilized;
  out["type_fp"] = r.type_fp;
  out["type_f"] = to_string(r.type_f);
  out["type_f_promoted"] = r.type_f_promoted;
  out["type_f_note"] = r.type_f_note;
  out["living_pi1"] = r.living_pi1 ? simple_connectivity_json(*r.living_pi1) : Json(nullptr);
  return out;
}

std::vector<std::string> finiteness_text(const FinitenessReport& r, const SimplicialComplex& l) {
  std::vector<std::string> lines;
  lines.push_back("   k  FP_k   F_k      stable");
  for (const auto& row : r.rows) {
    std::ostringstream os;
    os << "  " << (row.k < 10 ? " " : "") << row.k << "  " << (row.fp ? "yes " : "no  ") << "   ";
    std::string f = to_string(row.f);
    os << f << std::string(9 - f.size(), ' ') << (row.stable ? "yes" : "no");
    if (row.certificate) os << "   " << sigma_certificate_text(*row.certificate, l);
    lines.push_back(os.str());
  }
  lines.push_back(std::string("stabilized: ") + (r.stabilized ? "yes" : "no"));
  lines.push_back(std::string("type FP: ") + (r.type_fp ? "yes" : "no"));
  lines.push_back("type F: " + to_string(r.type_f) + (r.type_f_promoted ? " (promoted)" : ""));
  lines.push_back("note: " + r.type_f_note);
  return lines;
}

namespace {

std::string irreducibility_kind(const Irreducibility& i) {
  switch (i.kind) {
    case Irreducibility::Kind::Certified:
      return "certified";
    case Irreducibility::Kind::UpToPower:
      return "up_to_power";
    case Irreducibility::Kind::Fails:
      return "fails";
  }
  return "?";
}

}  // namespace

Json lm_analysis_json(const LMAnalysis& a) {
  Json out;
  out["matrix"] = io::matrix_to_json(a.matrix);
  out["determinant"] = to_string(a.determinant);

  Json order;
  order["finite"] = a.order.finite();
  order["order"] = a.order.finite() ? Json(*a.order.order) : Json(nullptr);
  order["candidates_checked"] = a.order.candidates.size();
  out["order"] = std::move(order);

  Json orth;
  orth["conj_orthogonal"] = a.orthogonality.conj_orthogonal;
  orth["minimal_polynomial"] = a.orthogonality.minimal_polynomial.to_string();
  orth["squarefree"] = a.orthogonality.squarefree;
  orth["unit_circle"] = a.orthogonality.unit_circle;
  orth["reason"] = a.orthogonality.reason;
  out["orthogonality"] = std::move(orth);

  Json irr;
  irr["kind"] = irreducibility_kind(a.irreducibility);
  irr["text"] = a.irreducibility.to_string();
  irr["power"] = a.irreducibility.kind == Irreducibility::Kind::Certified ? Json(nullptr)
                                                                          : Json(a.irreducibility.power);
  irr["factor"] = a.irreducibility.factor ? Json(a.irreducibility.factor->to_string()) : Json(nullptr);
  irr["characteristic_polynomial"] = a.irreducibility.factor
                                         ? Json(a.irreducibility.characteristic_polynomial.to_string())
                                         : Json(nullptr);
  irr["field_note"] = a.irreducibility.field_note;
  out["irreducibility"] = std::move(irr);

  out["hypotheses_hold"] = a.hypotheses_hold;
  Json lattice;
  lattice["hnf_basis_columns"] = io::columns_to_json(a.sublattice.basis());
  lattice["index"] = a.sublattice.index().str();
  lattice["maximal"] = a.sublattice_maximal;
  lattice["maximal_index"] = a.maximal_index.str();
  lattice["presentation_basis_columns"] = io::columns_to_json(a.presentation_basis);
  out["sublattice"] = std::move(lattice);
  out["presentation"] = io::presentation_to_json(a.presentation);
  out["abelianization"] = homology_json(a.abelianization);
  out["hom_rank"] = a.hom_rank;

  Json h1;
  h1["status"] = to_string(a.h1.status);
  h1["hom_rank"] = a.h1.hom_rank;
  h1["quotient_betti"] = a.h1.quotient_betti;
  h1["detail"] = a.h1.detail;
  out["h1_check"] = std::move(h1);

  Json verdict;
  verdict["code"] = verdict_code(a.verdict);
  verdict["text"] = a.verdict_text;
  out["verdict"] = std::move(verdict);
  out["notes"] = a.notes;
  return out;
}

std::vector<std::string> lm_analysis_text(const LMAnalysis& a) {
  std::vector<std::string> lines;
  lines.push_back("A = " + a.matrix.to_string() + ", det " + to_string(a.determinant));
  lines.push_back("order: " + (a.order.finite() ? "finite, " + std::to_string(*a.order.order)
                                                 : std::string("infinite (certified over ") +
                                                       std::to_string(a.order.candidates.size()) +
                                                       " candidate orders)"));
  lines.push_back(std::string("conjugate to orthogonal: ") + (a.orthogonality.conj_orthogonal ? "yes" : "no") +
                  " (" + a.orthogonality.reason + ")");
  lines.push_back("irreducibility: " + a.irreducibility.to_string() + " (" + a.irreducibility.field_note + ")");
  if (a.irreducibility.factor) {
    lines.push_back("  factor " + a.irreducibility.factor->to_string() + " of " +
                    a.irreducibility.characteristic_polynomial.to_string());
  }
  std::string basis;
  for (std::size_t j = 0; j < a.sublattice.dimension(); ++j) {
    auto c = a.sublattice.column(j);
    basis += j ? ", (" : "(";
    for (std::size_t i = 0; i < c.size(); ++i) basis += (i ? "," : "") + c[i].str();
    basis += ")";
  }
  lines.push_back("sublattice L: HNF basis " + basis + ", index " + a.sublattice.index().str() +
                  (a.sublattice_maximal ? " (maximal)" : " (not maximal; maximal index " +
                                                             a.maximal_index.str() + ")"));
  lines.push_back("presentation: " + a.presentation.to_string());
  lines.push_back("abelianization: " + a.abelianization.to_string());
  lines.push_back("hom rank: " + std::to_string(a.hom_rank));
  lines.push_back("H^1 check: " + to_string(a.h1.status) + " (" + a.h1.detail + ")");
  lines.push_back("verdict (" + verdict_code(a.verdict) + "): " + a.verdict_text);
  for (const auto& n : a.notes) lines.push_back("note: " + n);
  return lines;
}

}  // namespace fibrekit
