#pragma once

#include <string>
#include <vector>

#include "fibrekit/cayley.hpp"
#include "fibrekit/homology.hpp"
#include "fibrekit/io.hpp"
#include "fibrekit/lm.hpp"
#include "fibrekit/sigma.hpp"

namespace fibrekit {

inline constexpr int kReportSchemaVersion = 1;

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitPrecondition = 2,
  kExitBudget = 3,
};

/// A command's outcome. JSON bodies are deterministic: no timestamps, keys
/// in insertion order.
struct Report {
  std::string command;
  /// ok | precondition_failure | hypothesis_failure | input_error | budget_exceeded
  std::string status = "ok";
  io::Json result = io::Json::object();
  io::Json certificates = io::Json::array();
  io::Json hypotheses = io::Json::array();
  std::vector<std::string> provenance;
  std::string error;
  /// Human-readable body, one entry per line.
  std::vector<std::string> lines;
  int exit_code = kExitOk;

  io::Json to_json() const;
  std::string to_text() const;
};

io::Json labels_json(const SimplicialComplex& k, std::span<const VertexId> ids);
io::Json homology_json(const HomologyGroup& h);
io::Json sigma_certificate_json(const SigmaCertificate& c, const SimplicialComplex& l);
std::string sigma_certificate_text(const SigmaCertificate& c, const SimplicialComplex& l);
io::Json simple_connectivity_json(const SimpleConnectivity& s);
io::Json finiteness_json(const FinitenessReport& r, const SimplicialComplex& l);
std::vector<std::string> finiteness_text(const FinitenessReport& r, const SimplicialComplex& l);
io::Json lm_analysis_json(const LMAnalysis& a);
std::vector<std::string> lm_analysis_text(const LMAnalysis& a);

}  // namespace fibrekit
