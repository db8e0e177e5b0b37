#include <cstdlib>
#include <map>

#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"
#include "fibrekit/numeric.hpp"

namespace fibrekit {

std::size_t max_radius() {
  const char* env = std::getenv("FIBREKIT_MAX_RADIUS");
  if (env == nullptr || *env == '\0') return kDefaultMaxRadius;
  Integer value;
  try {
    value = parse_integer(env);
  } catch (const InputError&) {
    throw InputError(std::string("FIBREKIT_MAX_RADIUS is not an integer: ") + env);
  }
  if (value < 0 || value > 64) throw InputError("FIBREKIT_MAX_RADIUS must lie in [0, 64]");
  return static_cast<std::size_t>(value);
}

void check_radius(std::size_t radius) {
  std::size_t cap = max_radius();
  if (radius > cap) {
    throw BudgetExceeded("radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(cap) +
                         " (set FIBREKIT_MAX_RADIUS to raise it)");
  }
}

LabeledGraph cover_skeleton(const SimplicialComplex& l, VertexId u, VertexId w, std::size_t radius) {
  for (VertexId v : {u, w}) {
    if (!l.has_vertex(v)) throw InputError("cover_skeleton: unknown vertex id " + std::to_string(v));
  }
  if (!is_flag(l)) throw PreconditionError("cover_skeleton: L is not flag");
  if (l.vertices().size() < 3) throw PreconditionError("cover_skeleton: L needs at least 3 vertices");
  if (u == w || l.adjacent(u, w)) throw PreconditionError("cover_skeleton: u and w must be distinct and non-adjacent");
  check_radius(radius);

  // Letters +-1 for u, +-2 for w.
  const std::string names[2] = {l.label(u), l.label(w)};
  auto format = [&](const std::vector<int>& word) {
    if (word.empty()) return std::string("1");
    std::string s;
    for (int x : word) {
      if (!s.empty()) s += " ";
      s += names[std::abs(x) - 1];
      if (x < 0) s += "^-1";
    }
    return s;
  };
  LabeledGraph g;
  std::map<std::vector<int>, std::size_t> id;
  std::vector<std::vector<int>> layer{{}};
  id[{}] = g.add_vertex("1");
  std::vector<std::vector<int>> all{{}};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& word : layer) {
      for (int x : {1, -1, 2, -2}) {
        if (!word.empty() && word.back() == -x) continue;
        auto longer = word;
        longer.push_back(x);
        id[longer] = g.add_vertex(format(longer));
        next.push_back(longer);
        all.push_back(longer);
      }
    }
    layer = std::move(next);
  }
  for (const auto& word : all) {
    for (int x : {1, 2}) {
      auto target = word;
      if (!target.empty() && target.back() == -x) {
        target.pop_back();
      } else {
        target.push_back(x);
      }
      auto it = id.find(target);
      if (it == id.end()) continue;
      g.add_edge(id.at(word), it->second, names[x - 1]);
    }
  }
  for (const auto& word : all) {
    for (VertexId v : l.vertices()) {
      if (v == u || v == w) continue;
      std::size_t self = id.at(word);
      g.add_edge(self, self, l.label(v));
    }
  }
  return g;
}

}  // namespace fibrekit
