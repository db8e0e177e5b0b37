#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "fibrekit/complex.hpp"
#include "fibrekit/integer_matrix.hpp"
#include "fibrekit/labeled_graph.hpp"
#include "fibrekit/presentation.hpp"
#include "fibrekit/rational_matrix.hpp"
#include "fibrekit/sigma.hpp"

namespace fibrekit::io {

using Json = nlohmann::ordered_json;

/// Parses a file; InputError on I/O or syntax errors.
Json load_json(const std::string& path);

/// {"vertices": [...], "facets": [[...], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// {"values": {"a": "1", "b": "-2/3", "c": 0}}; integers or "p/q" strings.
Character character_from_json(const Json& j, const SimplicialComplex& k);
Json character_to_json(const Character& phi);

/// {"n": 2, "rows": [["3/5", "-4/5"], ["4/5", "3/5"]]}
RationalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RationalMatrix& a);

/// {"basis_columns": [[2, -1], [1, 2]]} as an n x k column matrix.
IntegerMatrix columns_from_json(const Json& j, std::size_t n);
Json columns_to_json(const IntegerMatrix& columns);

/// {"vertices": [...], "edges": [{"from": "x", "to": "y", "label": "a"}]}
LabeledGraph graph_from_json(const Json& j);
Json graph_to_json(const LabeledGraph& g);

/// {"generators": [...], "relators": [[1, 2, -1, -2], ...], "text": "<...>"}
Json presentation_to_json(const Presentation& p);

/// Exact rational from a JSON integer or string; floats are rejected.
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

}  // namespace fibrekit::io
