#include "fibrekit/pi1.hpp"

#include <deque>
#include <set>

#include "fibrekit/errors.hpp"
#include "fibrekit/homology.hpp"

namespace fibrekit {

EdgePathPresentation pi1_presentation(const SimplicialComplex& k) {
  if (k.is_empty()) throw PreconditionError("pi1_presentation: empty complex");
  if (!is_connected(k)) throw PreconditionError("pi1_presentation: complex is disconnected");

  auto adj = k.adjacency();
  EdgePathPresentation out;
  std::vector<bool> seen(k.universe_size(), false);
  std::set<std::pair<VertexId, VertexId>> tree;
  VertexId root = k.vertices().front();
  std::deque<VertexId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : adj[v]) {
      if (seen[u]) continue;
      seen[u] = true;
      tree.insert({std::min(u, v), std::max(u, v)});
      queue.push_back(u);
    }
  }
  out.tree_edges.assign(tree.begin(), tree.end());

  Presentation& p = out.presentation;
  for (const auto& e : k.simplices(1)) {
    std::pair<VertexId, VertexId> key{e[0], e[1]};
    if (tree.count(key)) continue;
    out.generator_of_edge[key] = p.generators++;
    p.names.push_back(k.label(e[0]) + "-" + k.label(e[1]));
  }
  auto letter = [&](VertexId a, VertexId b, bool forward, Word& w) {
    auto it = out.generator_of_edge.find({a, b});
    if (it == out.generator_of_edge.end()) return;
    int x = static_cast<int>(it->second) + 1;
    w.push_back(forward ? x : -x);
  };
  for (const auto& t : k.simplices(2)) {
    Word w;
    letter(t[0], t[1], true, w);
    letter(t[1], t[2], true, w);
    letter(t[0], t[2], false, w);
    p.relators.push_back(free_reduce(w));
  }
  return out;
}

SimpleConnectivity try_simply_connected(const SimplicialComplex& k, std::size_t budget) {
  auto edge_path = pi1_presentation(k);
  SimpleConnectivity out;
  auto h1 = reduced_homology(k, 1);
  if (!h1.trivial()) {
    out.answer = Decision::No;
    out.reason = "H_1 = " + h1.to_string();
    return out;
  }
  auto result = simplify(std::move(edge_path.presentation), budget);
  out.steps = result.steps;
  if (result.trivial) {
    out.answer = Decision::Yes;
    out.reason = "edge-path presentation trivialized";
  } else {
    out.answer = Decision::Unknown;
    out.reason = result.budget_exhausted ? "rewrite budget exhausted"
                                         : "no further simplification applies";
  }
  return out;
}

}  // namespace fibrekit
