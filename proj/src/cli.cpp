#include "fibrekit/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "fibrekit/cayley.hpp"
#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"
#include "fibrekit/io.hpp"
#include "fibrekit/lm.hpp"
#include "fibrekit/pi1.hpp"
#include "fibrekit/report.hpp"
#include "fibrekit/sigma.hpp"

namespace fibrekit {

namespace {

using io::Json;

const char* kCriterion =
    "living-link criterion for characters of right-angled Artin groups (Bestvina-Brady, "
    "Meier-Meinert-VanWyk, Bux-Gonzalez)";
const char* kHurewicz = "n-connectivity of L* decided as simply connected plus n-acyclic (Hurewicz)";

struct Options {
  std::string format = "text";
  std::string complex_path;
  std::string character_path;
  std::string matrix_path;
  std::string sublattice_path;
  std::string graph_path;
  bool require_flag = false;
  int n = 0;
  int n_max = 3;
  std::size_t budget = kDefaultRewriteBudget;
  std::size_t max_power = kDefaultPowerBound;
  std::size_t radius = 2;
  std::string u, w;
  std::string lo, hi;
};

SimplicialComplex load_complex(const Options& o) { return io::complex_from_json(io::load_json(o.complex_path)); }

Character load_character(const Options& o, const SimplicialComplex& k) {
  if (o.character_path.empty()) return Character::ones(k);
  return io::character_from_json(io::load_json(o.character_path), k);
}

void require_flag(const SimplicialComplex& k) {
  auto check = check_flag(k);
  if (!check.is_flag) {
    throw PreconditionError("complex is not flag: " + k.format(*check.witness) +
                            " is pairwise adjacent but not a simplex");
  }
}

Json hypotheses_json(const std::vector<Hypothesis>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) {
    Json j;
    j["name"] = h.name;
    j["holds"] = h.holds;
    j["detail"] = h.detail;
    out.push_back(std::move(j));
  }
  return out;
}

// ------------------------------------------------------------- complex

Report complex_validate(const Options& o) {
  auto k = load_complex(o);
  Report r;
  r.command = "complex validate";
  auto flag = check_flag(k);
  r.result["vertex_count"] = k.vertices().size();
  r.result["dimension"] = k.dimension();
  r.result["facet_count"] = k.facets().size();
  r.result["flag"] = flag.is_flag;
  r.result["flag_witness"] = flag.witness ? labels_json(k, flag.witness->vertices()) : Json(nullptr);
  r.result["complex"] = io::complex_to_json(k);
  r.lines.push_back(std::to_string(k.vertices().size()) + " vertices, dimension " +
                    std::to_string(k.dimension()) + ", " + std::to_string(k.facets().size()) + " facets");
  r.lines.push_back(std::string("flag: ") + (flag.is_flag ? "yes" : "no"));
  if (flag.witness) {
    Json cert;
    cert["kind"] = "non_flag_witness";
    cert["clique"] = labels_json(k, flag.witness->vertices());
    r.certificates.push_back(std::move(cert));
    r.lines.push_back("witness: " + k.format(*flag.witness) + " is pairwise adjacent but not a simplex");
    if (o.require_flag) {
      r.status = "precondition_failure";
      r.exit_code = kExitPrecondition;
    }
  }
  return r;
}

Report complex_homology(const Options& o) {
  auto k = load_complex(o);
  Report r;
  r.command = "complex homology";
  auto groups = reduced_homology_all(k);
  Json list = Json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    int degree = static_cast<int>(i) - 1;
    Json g = homology_json(groups[i]);
    g["degree"] = degree;
    list.push_back(std::move(g));
    r.lines.push_back("reduced H_" + std::to_string(degree) + " = " + groups[i].to_string());
  }
  r.result["dimension"] = k.dimension();
  r.result["reduced_homology"] = std::move(list);
  r.provenance.push_back("integral simplicial homology of the augmented chain complex via Smith normal form");
  return r;
}

Report complex_girth(const Options& o) {
  auto k = load_complex(o);
  Report r;
  r.command = "complex girth";
  auto g = girth(k);
  r.result["girth"] = g ? Json(*g) : Json(nullptr);
  r.result["infinite"] = !g.has_value();
  r.lines.push_back("girth of the 1-skeleton: " + (g ? std::to_string(*g) : std::string("infinity")));
  return r;
}

Report complex_join(const Options& o) {
  auto k = load_complex(o);
  require_flag(k);
  Report r;
  r.command = "complex join";
  auto witness = find_join(k);
  r.result["is_join"] = witness.has_value();
  if (witness) {
    Json cert;
    cert["kind"] = "join_witness";
    cert["parts"] = Json::array({labels_json(k, witness->first), labels_json(k, witness->second)});
    r.result["parts"] = cert["parts"];
    r.certificates.push_back(std::move(cert));
    r.lines.push_back("L is a non-trivial join of " + k.format(Simplex(witness->first)) + " and " +
                      k.format(Simplex(witness->second)));
  } else {
    r.result["parts"] = nullptr;
    r.lines.push_back("L is not a non-trivial join (complement of the 1-skeleton is connected)");
  }
  return r;
}

// --------------------------------------------------------------- sigma

Report sigma_check(const Options& o) {
  auto k = load_complex(o);
  auto phi = load_character(o, k);
  auto v = sigma_membership(phi, o.n, o.budget);
  auto split = dead_living(phi);
  Report r;
  r.command = "sigma check";
  r.result["n"] = v.n;
  r.result["k"] = v.n + 1;
  r.result["dead_vertices"] = labels_json(k, split.dead.vertices());
  r.result["living_vertices"] = labels_json(k, split.living.vertices());
  r.result["in_sigma_z"] = v.in_sigma_z;
  r.result["in_sigma"] = to_string(v.in_sigma);
  r.result["fp"] = v.in_sigma_z;
  r.result["f"] = to_string(v.in_sigma);
  r.result["dead_simplices_checked"] = v.dead_simplices_checked;
  r.result["living_pi1"] = v.living_pi1 ? simple_connectivity_json(*v.living_pi1) : Json(nullptr);
  std::string k1 = std::to_string(v.n + 1);
  r.lines.push_back("phi in Sigma^" + k1 + "(A_L; Z) (ker phi of type FP_" + k1 +
                    "): " + (v.in_sigma_z ? "yes" : "no"));
  r.lines.push_back("phi in Sigma^" + k1 + "(A_L) (ker phi of type F_" + k1 + "): " + to_string(v.in_sigma));
  r.lines.push_back("dead simplices checked: " + std::to_string(v.dead_simplices_checked));
  if (v.certificate) {
    r.certificates.push_back(sigma_certificate_json(*v.certificate, k));
    r.lines.push_back(sigma_certificate_text(*v.certificate, k));
  }
  if (v.in_sigma == Decision::Unknown) {
    r.lines.push_back("condition: simple connectivity of L* undecided within " + std::to_string(o.budget) +
                      " rewrite steps");
  }
  r.provenance.push_back(kCriterion);
  if (v.living_pi1) r.provenance.push_back(kHurewicz);
  return r;
}

void add_finiteness(Report& r, const FinitenessReport& f, const SimplicialComplex& k) {
  for (const auto& row : f.rows) {
    if (row.certificate) {
      Json cert = sigma_certificate_json(*row.certificate, k);
      cert["k"] = row.k;
      r.certificates.push_back(std::move(cert));
      break;  // rows above the first failure repeat the same obstruction
    }
  }
  for (auto& line : finiteness_text(f, k)) r.lines.push_back(std::move(line));
}

Report kernel_type(const Options& o) {
  auto k = load_complex(o);
  auto phi = load_character(o, k);
  auto f = kernel_finiteness(phi, o.n_max, o.budget);
  Report r;
  r.command = "kernel-type";
  r.result = finiteness_json(f, k);
  add_finiteness(r, f, k);
  r.provenance.push_back(kCriterion);
  r.provenance.push_back(kHurewicz);
  if (f.type_f_promoted) {
    r.provenance.push_back("type F promoted from F_n for all n: subgroups of RAAGs have finite-dimensional "
                           "classifying spaces");
  }
  return r;
}

Report gamma_kernel(const Options& o) {
  auto k = load_complex(o);
  auto phi = load_character(o, k);
  auto g = gamma_kernel_type(phi, k.id_of(o.u), k.id_of(o.w), o.n_max, o.budget);
  Report r;
  r.command = "gamma-kernel-type";
  r.hypotheses = hypotheses_json(g.hypotheses);
  if (!g.hypotheses_hold()) {
    r.status = "hypothesis_failure";
    r.exit_code = kExitPrecondition;
    r.result["report"] = nullptr;
    for (const auto& h : g.hypotheses) {
      if (h.holds) continue;
      Json cert;
      cert["kind"] = "hypothesis_failure";
      cert["hypothesis"] = h.name;
      cert["detail"] = h.detail;
      r.certificates.push_back(std::move(cert));
      r.lines.push_back("hypothesis failed: " + h.name + " (" + h.detail + ")");
    }
    r.lines.push_back("no verdict for ker(psi)");
    return r;
  }
  r.result["report"] = finiteness_json(*g.report, k);
  r.result["notes"] = g.notes;
  r.lines.push_back("finiteness type of ker(psi) <= Gamma_L:");
  add_finiteness(r, *g.report, k);
  for (const auto& n : g.notes) r.lines.push_back("note: " + n);
  r.provenance.push_back(kCriterion);
  r.provenance.push_back("transfer of finiteness properties from ker(phi) <= A_L to ker(psi) <= Gamma_L");
  return r;
}

// ------------------------------------------------------------------ lm

Report lm_analyze_cmd(const Options& o) {
  auto doc = io::load_json(o.matrix_path);
  auto a = io::matrix_from_json(doc);
  std::optional<IntegerMatrix> columns;
  if (doc.contains("basis_columns")) columns = io::columns_from_json(doc, a.size());
  if (!o.sublattice_path.empty()) columns = io::columns_from_json(io::load_json(o.sublattice_path), a.size());
  auto analysis = lm_analyze(a, columns, o.max_power);
  Report r;
  r.command = "lm analyze";
  r.result = lm_analysis_json(analysis);
  r.lines = lm_analysis_text(analysis);
  if (analysis.order.finite()) {
    Json cert;
    cert["kind"] = "finite_order";
    cert["order"] = *analysis.order.order;
    r.certificates.push_back(std::move(cert));
  }
  if (!analysis.orthogonality.conj_orthogonal) {
    Json cert;
    cert["kind"] = "not_conjugate_orthogonal";
    cert["minimal_polynomial"] = analysis.orthogonality.minimal_polynomial.to_string();
    cert["reason"] = analysis.orthogonality.reason;
    r.certificates.push_back(std::move(cert));
  }
  if (analysis.irreducibility.kind == Irreducibility::Kind::Fails) {
    Json cert;
    cert["kind"] = "reducible_power";
    cert["power"] = analysis.irreducibility.power;
    cert["characteristic_polynomial"] = analysis.irreducibility.characteristic_polynomial.to_string();
    cert["factor"] = analysis.irreducibility.factor->to_string();
    r.certificates.push_back(std::move(cert));
  }
  r.provenance.push_back("LM(A,L) is a uniform lattice in Isom(E^n) x Aut(T) when A has infinite order and "
                         "is conjugate in GL_n(R) to an orthogonal matrix");
  if (analysis.hypotheses_hold) {
    r.provenance.push_back("a uniform Isom(E^n) x Aut(T)-lattice virtually algebraically fibres iff it is "
                           "reducible");
    r.provenance.push_back("H^1 of the lattice agrees with H^1 of its quotient graph");
  }
  return r;
}

// ------------------------------------------------------------ construct

Report construct_huang(const Options& o) {
  auto g = io::graph_from_json(io::load_json(o.graph_path));
  auto out = huang_double(g);
  Report r;
  r.command = "construct huang";
  r.result["input_vertices"] = g.vertex_count();
  r.result["input_edges"] = g.edge_count();
  r.result["vertices"] = out.vertex_count();
  r.result["edges"] = out.edge_count();
  r.result["euler_characteristic"] = out.euler_characteristic();
  r.result["rank_pi1"] = rank_pi1(out);
  r.result["graph"] = io::graph_to_json(out);
  r.lines.push_back(std::to_string(out.vertex_count()) + " vertices, " + std::to_string(out.edge_count()) +
                    " edges, Euler characteristic " + std::to_string(out.euler_characteristic()) +
                    ", rank pi_1 " + std::to_string(rank_pi1(out)));
  r.provenance.push_back("vertices to oriented b-labeled 3-cycles, edges to pairs of a-labeled edges");
  return r;
}

Report construct_salvetti(const Options& o) {
  auto k = load_complex(o);
  auto cells = salvetti_cells(k);
  Report r;
  r.command = "construct salvetti";
  r.result["cell_counts"] = cells.counts;
  r.result["euler_characteristic"] = cells.euler_characteristic;
  std::string counts;
  for (std::size_t i = 0; i < cells.counts.size(); ++i) counts += (i ? "," : "") + std::to_string(cells.counts[i]);
  r.lines.push_back("cells by dimension: (" + counts + "), Euler characteristic " +
                    std::to_string(cells.euler_characteristic));
  r.provenance.push_back("Salvetti complex: one vertex and one k-torus per (k-1)-simplex of L");
  return r;
}

Report construct_cover(const Options& o) {
  auto k = load_complex(o);
  auto g = cover_skeleton(k, k.id_of(o.u), k.id_of(o.w), o.radius);
  Report r;
  r.command = "construct cover";
  r.result["radius"] = o.radius;
  r.result["vertices"] = g.vertex_count();
  r.result["edges"] = g.edge_count();
  r.result["center_valence"] = g.valence(0);
  r.result["graph"] = io::graph_to_json(g);
  r.lines.push_back(std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                    " edges, valence at the centre " + std::to_string(g.valence(0)));
  return r;
}

Report construct_ball(const Options& o) {
  auto k = load_complex(o);
  auto ball = cayley_ball(k, o.radius);
  Report r;
  r.command = "construct ball";
  r.result["radius"] = o.radius;
  r.result["vertices"] = ball.elements.size();
  r.result["edges"] = ball.edges.size();
  r.result["squares"] = ball.squares.size();
  Json words = Json::array();
  for (const auto& w : ball.elements) words.push_back(ball.format(w));
  r.result["normal_forms"] = std::move(words);
  r.result["graph"] = io::graph_to_json(ball.graph());
  r.lines.push_back("radius " + std::to_string(o.radius) + ": " + std::to_string(ball.elements.size()) +
                    " vertices, " + std::to_string(ball.edges.size()) + " edges, " +
                    std::to_string(ball.squares.size()) + " squares");
  return r;
}

Report construct_heights(const Options& o) {
  auto k = load_complex(o);
  auto phi = load_character(o, k);
  auto ball = cayley_ball(k, o.radius);
  auto h = height_assignment(ball, phi);
  Report r;
  r.command = "construct heights";
  r.result["radius"] = o.radius;
  Json list = Json::array();
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    Json e;
    e["word"] = ball.format(ball.elements[i]);
    e["height"] = to_string(h.heights[i]);
    list.push_back(std::move(e));
    r.lines.push_back("  " + ball.format(ball.elements[i]) + "  " + to_string(h.heights[i]));
  }
  r.result["heights"] = std::move(list);
  r.result["edges_checked"] = h.edges_checked;
  r.result["squares_checked"] = h.squares_checked;
  r.result["cycles_checked"] = h.cycles_checked;
  r.lines.push_back("path independence verified on " + std::to_string(h.edges_checked) + " edges, " +
                    std::to_string(h.squares_checked) + " squares, " + std::to_string(h.cycles_checked) +
                    " fundamental cycles");
  r.provenance.push_back("height of g = sum of character values along any edge path from 1 to g");
  return r;
}

Report construct_levelset(const Options& o) {
  auto k = load_complex(o);
  auto phi = load_character(o, k);
  auto lo = parse_rational(o.lo);
  auto hi = parse_rational(o.hi);
  auto ball = cayley_ball(k, o.radius);
  auto h = height_assignment(ball, phi);
  auto probe = level_set_probe(ball, h, lo, hi);
  Report r;
  r.command = "construct levelset";
  r.result["radius"] = o.radius;
  r.result["interval"] = Json::array({to_string(lo), to_string(hi)});
  Json words = Json::array();
  for (std::size_t v : probe.vertices) words.push_back(ball.format(ball.elements[v]));
  r.result["vertices"] = std::move(words);
  r.result["edge_count"] = probe.edges.size();
  r.result["square_count"] = probe.squares.size();
  r.result["reduced_h_minus1"] = homology_json(probe.h_minus1);
  r.result["reduced_h0"] = homology_json(probe.h0);
  r.result["reduced_h1"] = homology_json(probe.h1);
  r.result["label"] = probe.label;
  r.lines.push_back(std::to_string(probe.vertices.size()) + " vertices, " + std::to_string(probe.edges.size()) +
                    " edges, " + std::to_string(probe.squares.size()) + " squares");
  r.lines.push_back("reduced H_-1 = " + probe.h_minus1.to_string() + ", H_0 = " + probe.h0.to_string() +
                    ", H_1 = " + probe.h1.to_string());
  r.lines.push_back(probe.label);
  return r;
}

Report error_report(const std::string& command, const std::string& status, const std::string& message,
                    int code) {
  Report r;
  r.command = command;
  r.status = status;
  r.error = message;
  r.exit_code = code;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"fibrekit: finiteness properties of RAAG kernels, Leary-Minasyan lattices and their "
               "constructions"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<Report(const Options&)> handler;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, Report (*fn)(const Options&)) {
    sub->callback([&, name, fn] {
      command = name;
      handler = fn;
    });
  };
  auto complex_opt = [&](CLI::App* sub) { sub->add_option("--complex", o.complex_path, "Complex JSON")->required(); };
  auto character_opt = [&](CLI::App* sub) {
    sub->add_option("--character", o.character_path, "Character JSON (default: 1 on every vertex)");
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Rewrite steps for the simple connectivity prover")
        ->check(CLI::NonNegativeNumber);
  };

  auto* cx = app.add_subcommand("complex", "Simplicial complex queries");
  cx->require_subcommand(1);
  auto* validate = cx->add_subcommand("validate", "Parse and check a complex");
  complex_opt(validate);
  validate->add_flag("--require-flag", o.require_flag, "Exit 2 unless the complex is flag");
  bind(validate, "complex validate", complex_validate);
  auto* homology = cx->add_subcommand("homology", "Reduced integral homology");
  complex_opt(homology);
  bind(homology, "complex homology", complex_homology);
  auto* girth_cmd = cx->add_subcommand("girth", "Girth of the 1-skeleton");
  complex_opt(girth_cmd);
  bind(girth_cmd, "complex girth", complex_girth);
  auto* join_cmd = cx->add_subcommand("join", "Non-trivial join detection (flag complexes)");
  complex_opt(join_cmd);
  bind(join_cmd, "complex join", complex_join);

  auto* sigma = app.add_subcommand("sigma", "Sigma-invariant membership");
  sigma->require_subcommand(1);
  auto* check = sigma->add_subcommand("check", "Living-link criterion at degree n");
  complex_opt(check);
  character_opt(check);
  check->add_option("--n", o.n, "Degree n >= 0 (tests Sigma^{n+1})")->required()->check(CLI::NonNegativeNumber);
  budget_opt(check);
  bind(check, "sigma check", sigma_check);

  auto* kt = app.add_subcommand("kernel-type", "Finiteness type of ker(phi) <= A_L");
  complex_opt(kt);
  character_opt(kt);
  kt->add_option("--n-max", o.n_max, "Largest degree reported")->check(CLI::PositiveNumber);
  budget_opt(kt);
  bind(kt, "kernel-type", kernel_type);

  auto* gk = app.add_subcommand("gamma-kernel-type", "Finiteness type of ker(psi) <= Gamma_L");
  complex_opt(gk);
  character_opt(gk);
  gk->add_option("--u", o.u, "First non-adjacent vertex")->required();
  gk->add_option("--w", o.w, "Second non-adjacent vertex")->required();
  gk->add_option("--n-max", o.n_max, "Largest degree reported")->check(CLI::PositiveNumber);
  budget_opt(gk);
  bind(gk, "gamma-kernel-type", gamma_kernel);

  auto* lm = app.add_subcommand("lm", "Leary-Minasyan lattices");
  lm->require_subcommand(1);
  auto* analyze = lm->add_subcommand("analyze", "Run every gate and the fibring verdict");
  analyze->add_option("--matrix", o.matrix_path, "Matrix JSON")->required();
  analyze->add_option("--sublattice", o.sublattice_path, "Sublattice JSON with basis_columns");
  analyze->add_option("--max-power", o.max_power, "Power bound K")->check(CLI::PositiveNumber);
  bind(analyze, "lm analyze", lm_analyze_cmd);

  auto* cons = app.add_subcommand("construct", "Finite-scale constructions");
  cons->require_subcommand(1);
  auto* huang = cons->add_subcommand("huang", "Labeled 4-valent double of a cubic graph");
  huang->add_option("--graph", o.graph_path, "Graph JSON")->required();
  bind(huang, "construct huang", construct_huang);
  auto* salvetti = cons->add_subcommand("salvetti", "Salvetti complex cell counts");
  complex_opt(salvetti);
  bind(salvetti, "construct salvetti", construct_salvetti);
  auto radius_opt = [&](CLI::App* sub) {
    sub->add_option("--radius", o.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  };
  auto* cover = cons->add_subcommand("cover", "Labeled cover skeleton");
  complex_opt(cover);
  cover->add_option("--u", o.u, "First non-adjacent vertex")->required();
  cover->add_option("--w", o.w, "Second non-adjacent vertex")->required();
  radius_opt(cover);
  bind(cover, "construct cover", construct_cover);
  auto* ball = cons->add_subcommand("ball", "Cayley ball of A_L");
  complex_opt(ball);
  radius_opt(ball);
  bind(ball, "construct ball", construct_ball);
  auto* heights = cons->add_subcommand("heights", "Height function on a Cayley ball");
  complex_opt(heights);
  character_opt(heights);
  radius_opt(heights);
  bind(heights, "construct heights", construct_heights);
  auto* levelset = cons->add_subcommand("levelset", "Level-set probe of the height function");
  complex_opt(levelset);
  character_opt(levelset);
  radius_opt(levelset);
  levelset->add_option("--lo", o.lo, "Lower end (p/q)")->required();
  levelset->add_option("--hi", o.hi, "Upper end (p/q)")->required();
  bind(levelset, "construct levelset", construct_levelset);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (!handler) {
    err << "error: no command given\n";
    return kExitInput;
  }

  auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = handler(o);
  } catch (const InputError& e) {
    report = error_report(command, "input_error", e.what(), kExitInput);
  } catch (const PreconditionError& e) {
    report = error_report(command, "precondition_failure", e.what(), kExitPrecondition);
  } catch (const BudgetExceeded& e) {
    report = error_report(command, "budget_exceeded", e.what(), kExitBudget);
  }
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  if (o.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  if (!report.error.empty()) err << "error: " << report.error << "\n";
  err << "elapsed_ms: " << elapsed.count() << "\n";
  return report.exit_code;
}

}  // namespace fibrekit
