#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fibrekit {

using VertexId = std::uint32_t;

/// A simplex as a strictly increasing list of interned vertex ids. The empty
/// simplex (dimension -1) is a valid value.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the ids; throws InputError on duplicates.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;
  Simplex without(std::size_t position) const;
  Simplex united(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

  std::vector<VertexId> vertices_;
};

/// Orders by dimension first, then lexicographically.
struct ByDimensionThenLex {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite abstract simplicial complex stored by its facets.
///
/// Vertex labels form a universe shared by every complex derived from this
/// one (links, full subcomplexes), so vertex ids stay stable across those
/// operations. The vertex set of the complex is the union of its facets;
/// a declared label that lies in no facet is not a vertex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Interns labels in input order and drops dominated facets.
  /// Throws InputError on duplicate labels, unknown labels, empty or
  /// repeated facets.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<std::vector<std::string>>& facets);

  /// Same universe, arbitrary face list; dominated and empty faces removed.
  static SimplicialComplex from_faces(std::vector<std::string> labels,
                                      std::vector<Simplex> faces);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t universe_size() const { return labels_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  VertexId id_of(std::string_view label) const;

  const std::vector<Simplex>& facets() const { return facets_; }
  /// Vertices lying in some facet, increasing.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool has_vertex(VertexId v) const;
  bool is_empty() const { return facets_.empty(); }
  int dimension() const;

  /// Every complex contains the empty simplex.
  bool contains(const Simplex& s) const;
  /// All simplices of the given dimension in lexicographic order;
  /// dimension -1 yields the empty simplex.
  std::vector<Simplex> simplices(int dim) const;
  std::size_t simplex_count(int dim) const;

  /// Sorted neighbour lists of the 1-skeleton, indexed by vertex id.
  std::vector<std::vector<VertexId>> adjacency() const;
  bool adjacent(VertexId a, VertexId b) const;

  std::string format(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  std::vector<VertexId> vertices_;
};

/// Witness that a complex is a non-trivial join: both parts nonempty,
/// disjoint, covering the vertex set, fully adjacent across.
struct JoinWitness {
  std::vector<VertexId> first;
  std::vector<VertexId> second;
};

struct FlagCheck {
  bool is_flag = true;
  /// Minimal (by size, then lexicographically) pairwise adjacent vertex set
  /// that does not span a simplex.
  std::optional<Simplex> witness;
};

FlagCheck check_flag(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);

/// Simplices of K with all vertices in S. Throws PreconditionError when S
/// names a vertex outside V(K).
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> s);

/// Unchecked restriction to a vertex mask over the label universe.
SimplicialComplex restrict_to(const SimplicialComplex& k, const std::vector<bool>& keep);

/// {tau : tau and sigma disjoint, tau u sigma in K}. Throws
/// PreconditionError when sigma is not a simplex of K.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);

/// Join of two complexes over the same universe with disjoint vertex sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Cone over K with a new apex label appended to the universe.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

/// Flag complexes only: a witness iff the complement of the 1-skeleton is
/// disconnected. Throws PreconditionError on non-flag input.
std::optional<JoinWitness> find_join(const SimplicialComplex& k);

/// Shortest cycle length of the 1-skeleton; nullopt for forests.
std::optional<std::size_t> girth(const SimplicialComplex& k);

/// Clique complex of a graph given by edges over a label universe. Isolated
/// vertices are included as 0-simplices.
SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges);

bool is_connected(const SimplicialComplex& k);

namespace examples {
// Small named complexes used by tests, the acceptance suite and the CLI docs.
SimplicialComplex point();
SimplicialComplex sphere0();                 // two points
SimplicialComplex path3();                   // a-b-c
SimplicialComplex cycle(std::size_t n);      // C_n, n >= 4 flag
SimplicialComplex hollow_triangle();
SimplicialComplex simplex(std::size_t n);    // full simplex on n vertices
SimplicialComplex octahedron();
/// Triangulated grid disk with rows x cols vertices, every square split
/// along the same diagonal. Flag and contractible.
SimplicialComplex grid_disk(std::size_t rows, std::size_t cols);
}  // namespace examples

}  // namespace fibrekit
