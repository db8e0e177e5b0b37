#include "fibrekit/labeled_graph.hpp"

#include "fibrekit/errors.hpp"

namespace fibrekit {

std::size_t LabeledGraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

std::size_t LabeledGraph::add_edge(std::size_t from, std::size_t to, std::string label) {
  if (from >= names_.size() || to >= names_.size()) throw InputError("edge endpoint out of range");
  edges_.push_back({from, to, std::move(label)});
  return edges_.size() - 1;
}

std::size_t LabeledGraph::id_of(const std::string& name) const {
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  throw InputError("unknown graph vertex \"" + name + "\"");
}

std::vector<std::size_t> LabeledGraph::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from == v) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> LabeledGraph::in_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].to == v) out.push_back(e);
  }
  return out;
}

std::size_t LabeledGraph::valence(std::size_t v) const {
  std::size_t count = 0;
  for (const auto& e : edges_) count += (e.from == v) + (e.to == v);
  return count;
}

bool LabeledGraph::is_connected() const {
  if (names_.empty()) return false;
  std::vector<std::size_t> parent(names_.size());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = names_.size();
  for (const auto& e : edges_) {
    std::size_t a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

long long LabeledGraph::euler_characteristic() const {
  return static_cast<long long>(names_.size()) - static_cast<long long>(edges_.size());
}

std::size_t rank_pi1(const LabeledGraph& g) {
  if (!g.is_connected()) throw PreconditionError("rank_pi1: graph is not connected");
  return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace fibrekit
