#include <cstdint>
#include <deque>

#include "fibrekit/cayley.hpp"
#include "fibrekit/errors.hpp"

namespace fibrekit {

HeightAssignment height_assignment(const CayleyBall& ball, const Character& phi) {
  if (phi.complex().labels() != ball.complex.labels() ||
      phi.complex().vertices() != ball.complex.vertices()) {
    throw InputError("height_assignment: character is defined on a different complex");
  }
  const auto& generators = ball.complex.vertices();
  auto value = [&](std::size_t g) { return phi.value(generators[g]); };

  std::size_t count = ball.elements.size();
  std::vector<std::vector<std::size_t>> incident(count);
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    incident[ball.edges[e].from].push_back(e);
    incident[ball.edges[e].to].push_back(e);
  }
  HeightAssignment out;
  out.heights.assign(count, 0);
  std::vector<bool> seen(count, false);
  std::vector<bool> tree_edge(ball.edges.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[x]) {
      const auto& edge = ball.edges[e];
      std::size_t y = edge.from == x ? edge.to : edge.from;
      if (seen[y]) continue;
      seen[y] = true;
      tree_edge[e] = true;
      out.heights[y] = out.heights[x] + (edge.from == x ? value(edge.generator) : -value(edge.generator));
      queue.push_back(y);
    }
  }
  for (std::size_t v = 0; v < count; ++v) {
    if (!seen[v]) throw InternalError("height_assignment: ball is not connected");
  }
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    const auto& edge = ball.edges[e];
    if (out.heights[edge.to] - out.heights[edge.from] != value(edge.generator)) {
      throw InternalError("height_assignment: edge " + ball.format(ball.elements[edge.from]) + " -> " +
                          ball.format(ball.elements[edge.to]) + " breaks path independence");
    }
    ++out.edges_checked;
    if (!tree_edge[e]) ++out.cycles_checked;
  }
  for (const auto& sq : ball.squares) {
    Rational sum = 0;
    const int sign[4] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i) sum += sign[i] * value(ball.edges[sq.edge[i]].generator);
    if (sum != 0) throw InternalError("height_assignment: square boundary sum is nonzero");
    ++out.squares_checked;
  }
  return out;
}

LevelSetProbe level_set_probe(const CayleyBall& ball, const HeightAssignment& heights,
                              const Rational& lo, const Rational& hi) {
  if (lo > hi) throw PreconditionError("level_set_probe: empty interval");
  if (heights.heights.size() != ball.elements.size()) {
    throw InputError("level_set_probe: heights do not match the ball");
  }
  LevelSetProbe out;
  std::vector<std::size_t> position(ball.elements.size(), SIZE_MAX);
  for (std::size_t v = 0; v < ball.elements.size(); ++v) {
    const auto& h = heights.heights[v];
    if (h < lo || h > hi) continue;
    position[v] = out.vertices.size();
    out.vertices.push_back(v);
  }
  std::vector<std::size_t> edge_position(ball.edges.size(), SIZE_MAX);
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    if (position[ball.edges[e].from] == SIZE_MAX || position[ball.edges[e].to] == SIZE_MAX) continue;
    edge_position[e] = out.edges.size();
    out.edges.push_back(e);
  }
  for (std::size_t s = 0; s < ball.squares.size(); ++s) {
    bool inside = true;
    for (std::size_t c : ball.squares[s].corner) inside = inside && position[c] != SIZE_MAX;
    if (inside) out.squares.push_back(s);
  }

  ChainComplex chain;
  chain.low_degree = -1;
  chain.ranks = {1, out.vertices.size(), out.edges.size(), out.squares.size()};
  chain.boundaries.emplace_back(0, 1);
  IntegerMatrix d0(1, out.vertices.size());
  for (std::size_t j = 0; j < out.vertices.size(); ++j) d0(0, j) = 1;
  IntegerMatrix d1(out.vertices.size(), out.edges.size());
  for (std::size_t j = 0; j < out.edges.size(); ++j) {
    const auto& e = ball.edges[out.edges[j]];
    d1(position[e.to], j) += 1;
    d1(position[e.from], j) -= 1;
  }
  IntegerMatrix d2(out.edges.size(), out.squares.size());
  for (std::size_t j = 0; j < out.squares.size(); ++j) {
    const auto& sq = ball.squares[out.squares[j]];
    const int sign[4] = {1, 1, -1, -1};
    for (int i = 0; i < 4; ++i) d2(edge_position[sq.edge[i]], j) += sign[i];
  }
  chain.boundaries.push_back(std::move(d0));
  chain.boundaries.push_back(std::move(d1));
  chain.boundaries.push_back(std::move(d2));
  out.h_minus1 = chain.homology(-1);
  out.h0 = chain.homology(0);
  out.h1 = chain.homology(1);
  return out;
}

}  // namespace fibrekit
