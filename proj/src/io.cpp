#include "fibrekit/io.hpp"

#include <fstream>
#include <set>

#include "fibrekit/errors.hpp"

namespace fibrekit::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw InputError("unknown field \"" + item.key() + "\"");
  }
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

SimplicialComplex complex_from_json(const Json& j) {
  reject_unknown_keys(j, {"vertices", "facets"});
  const auto& vs = field(j, "vertices");
  const auto& fs = field(j, "facets");
  if (!vs.is_array() || !fs.is_array()) throw InputError("\"vertices\" and \"facets\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& v : vs) labels.push_back(string_from_json(v, "vertex label"));
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : fs) {
    if (!f.is_array()) throw InputError("each facet must be an array of labels");
    std::vector<std::string> facet;
    for (const auto& v : f) facet.push_back(string_from_json(v, "vertex label"));
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(std::move(labels), facets);
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out;
  out["vertices"] = k.labels();
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json facet = Json::array();
    for (VertexId v : f.vertices()) facet.push_back(k.label(v));
    facets.push_back(std::move(facet));
  }
  out["facets"] = std::move(facets);
  return out;
}

Character character_from_json(const Json& j, const SimplicialComplex& k) {
  reject_unknown_keys(j, {"values"});
  const auto& values = field(j, "values");
  if (!values.is_object()) throw InputError("\"values\" must be an object");
  std::map<std::string, Rational> parsed;
  for (const auto& item : values.items()) parsed[item.key()] = rational_from_json(item.value());
  return Character::from_labels(k, parsed);
}

Json character_to_json(const Character& phi) {
  Json values = Json::object();
  for (VertexId v : phi.complex().vertices()) values[phi.complex().label(v)] = to_string(phi.value(v));
  Json out;
  out["values"] = std::move(values);
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  reject_unknown_keys(j, {"n", "rows", "basis_columns"});
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw InputError("\"rows\" must be an array");
  std::size_t n = rows.size();
  if (j.contains("n")) {
    auto declared = integer_from_json(j["n"]);
    if (declared != Integer(n)) throw InputError("\"n\" does not match the number of rows");
  }
  if (n == 0) throw InputError("matrix is empty");
  std::vector<Rational> data;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InputError("matrix must be square");
    for (const auto& x : row) data.push_back(rational_from_json(x));
  }
  return RationalMatrix(n, std::move(data));
}

Json matrix_to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = a.size();
  out["rows"] = std::move(rows);
  return out;
}

IntegerMatrix columns_from_json(const Json& j, std::size_t n) {
  const auto& cols = field(j, "basis_columns");
  if (!cols.is_array() || cols.empty()) throw InputError("\"basis_columns\" must be a nonempty array");
  IntegerMatrix m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cols[c].is_array() || cols[c].size() != n) {
      throw InputError("each basis column must have " + std::to_string(n) + " entries");
    }
    for (std::size_t i = 0; i < n; ++i) m(i, c) = integer_from_json(cols[c][i]);
  }
  return m;
}

Json columns_to_json(const IntegerMatrix& columns) {
  Json out = Json::array();
  for (std::size_t c = 0; c < columns.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t i = 0; i < columns.rows(); ++i) col.push_back(columns(i, c).str());
    out.push_back(std::move(col));
  }
  return out;
}

LabeledGraph graph_from_json(const Json& j) {
  reject_unknown_keys(j, {"vertices", "edges"});
  const auto& vs = field(j, "vertices");
  const auto& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("\"vertices\" and \"edges\" must be arrays");
  LabeledGraph g;
  std::map<std::string, std::size_t> id;
  for (const auto& v : vs) {
    auto name = string_from_json(v, "graph vertex");
    if (id.count(name)) throw InputError("duplicate graph vertex \"" + name + "\"");
    id[name] = g.add_vertex(name);
  }
  for (const auto& e : es) {
    reject_unknown_keys(e, {"from", "to", "label"});
    auto endpoint = [&](const char* key) {
      auto name = string_from_json(field(e, key), "edge endpoint");
      auto it = id.find(name);
      if (it == id.end()) throw InputError("edge references unknown vertex \"" + name + "\"");
      return it->second;
    };
    std::string label = e.contains("label") ? string_from_json(e["label"], "edge label") : "";
    g.add_edge(endpoint("from"), endpoint("to"), std::move(label));
  }
  return g;
}

Json graph_to_json(const LabeledGraph& g) {
  Json out;
  out["vertices"] = g.names();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge;
    edge["from"] = g.name(e.from);
    edge["to"] = g.name(e.to);
    edge["label"] = e.label;
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

Json presentation_to_json(const Presentation& p) {
  Json out;
  Json names = Json::array();
  for (std::size_t i = 0; i < p.generators; ++i) names.push_back(p.generator_name(i));
  out["generators"] = std::move(names);
  Json relators = Json::array();
  for (const auto& r : p.relators) relators.push_back(r);
  out["relators"] = std::move(relators);
  out["text"] = p.to_string();
  return out;
}

}  // namespace fibrekit::io
