#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fibrekit {

struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string label;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Finite directed multigraph with named vertices and labeled edges. Loops
/// and parallel edges are allowed; a loop contributes 2 to the valence.
class LabeledGraph {
 public:
  std::size_t add_vertex(std::string name);
  /// Throws InputError for out-of-range endpoints.
  std::size_t add_edge(std::size_t from, std::size_t to, std::string label);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// Throws InputError for an unknown name.
  std::size_t id_of(const std::string& name) const;

  /// Edge indices, increasing.
  std::vector<std::size_t> out_edges(std::size_t v) const;
  std::vector<std::size_t> in_edges(std::size_t v) const;
  std::size_t valence(std::size_t v) const;

  /// Connected as an undirected graph; the empty graph is not connected.
  bool is_connected() const;
  long long euler_characteristic() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<LabeledEdge> edges_;
};

/// Rank of the free fundamental group, E - V + 1. Throws PreconditionError
/// for a disconnected graph.
std::size_t rank_pi1(const LabeledGraph& g);

}  // namespace fibrekit
