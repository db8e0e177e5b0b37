#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"

namespace fibrekit {

LabeledGraph huang_double(const LabeledGraph& g) {
  if (!g.is_connected()) throw PreconditionError("huang_double: input graph is not connected");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) != 3) {
      throw PreconditionError("huang_double: vertex \"" + g.name(v) + "\" has valence " +
                              std::to_string(g.valence(v)) + ", expected 3");
    }
  }
  LabeledGraph out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int port = 0; port < 3; ++port) out.add_vertex(g.name(v) + ":" + std::to_string(port));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t port = 0; port < 3; ++port) out.add_edge(3 * v + port, 3 * v + (port + 1) % 3, "b");
  }
  std::vector<std::size_t> next_port(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    std::size_t p = 3 * e.from + next_port[e.from]++;
    std::size_t q = 3 * e.to + next_port[e.to]++;
    out.add_edge(p, q, "a");
    out.add_edge(q, p, "a");
  }
  return out;
}

}  // namespace fibrekit
