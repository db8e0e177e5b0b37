#include "fibrekit/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "fibrekit/errors.hpp"

namespace fibrekit {

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("simplex with repeated vertex");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Simplex Simplex::without(std::size_t position) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != position) out.push_back(vertices_[i]);
  }
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(out));
  return Simplex(Sorted{}, std::move(out));
}

// ------------------------------------------------------ SimplicialComplex

namespace {

// Keeps maximal faces only, in lexicographic order.
std::vector<Simplex> maximal_faces(std::vector<Simplex> faces) {
  std::erase_if(faces, [](const Simplex& s) { return s.empty(); });
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Simplex> kept;
  for (auto& f : faces) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Simplex& g) { return f.is_face_of(g); });
    if (!dominated) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void for_each_subset(std::span<const VertexId> facet, std::size_t size,
                     const std::function<void(std::vector<VertexId>&)>& fn) {
  std::vector<VertexId> current;
  current.reserve(size);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == size) {
      fn(current);
      return;
    }
    std::size_t need = size - current.size();
    for (std::size_t i = start; i + need <= facet.size(); ++i) {
      current.push_back(facet[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                std::vector<Simplex> faces) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (const auto& f : faces) {
    for (VertexId v : f.vertices()) {
      if (v >= k.labels_.size()) throw InputError("face references an unknown vertex id");
    }
  }
  k.facets_ = maximal_faces(std::move(faces));
  std::vector<bool> seen(k.labels_.size(), false);
  for (const auto& f : k.facets_) {
    for (VertexId v : f.vertices()) seen[v] = true;
  }
  for (VertexId v = 0; v < seen.size(); ++v) {
    if (seen[v]) k.vertices_.push_back(v);
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> labels, const std::vector<std::vector<std::string>>& facets) {
  std::unordered_map<std::string, VertexId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<VertexId>(i)).second) {
      throw InputError("duplicate vertex label \"" + labels[i] + "\"");
    }
  }
  std::vector<Simplex> faces;
  faces.reserve(facets.size());
  for (const auto& facet : facets) {
    if (facet.empty()) throw InputError("empty facet");
    std::vector<VertexId> ids;
    for (const auto& name : facet) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("facet references unknown vertex \"" + name + "\"");
      ids.push_back(it->second);
    }
    faces.emplace_back(std::move(ids));
  }
  {
    std::vector<Simplex> sorted = faces;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate facet");
    }
  }
  return from_faces(std::move(labels), std::move(faces));
}

std::optional<VertexId> SimplicialComplex::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId SimplicialComplex::id_of(std::string_view label) const {
  auto id = find(label);
  if (!id) throw InputError("unknown vertex \"" + std::string(label) + "\"");
  return *id;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dimension());
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return s.is_face_of(f); });
}

std::vector<Simplex> SimplicialComplex::simplices(int dim) const {
  if (dim < -1) return {};
  if (dim == -1) return {Simplex{}};
  std::set<Simplex> out;
  auto size = static_cast<std::size_t>(dim + 1);
  for (const auto& f : facets_) {
    if (f.size() < size) continue;
    for_each_subset(f.vertices(), size,
                    [&](std::vector<VertexId>& sub) { out.insert(Simplex(sub)); });
  }
  return {out.begin(), out.end()};
}

std::size_t SimplicialComplex::simplex_count(int dim) const { return simplices(dim).size(); }

std::vector<std::vector<VertexId>> SimplicialComplex::adjacency() const {
  std::vector<std::vector<VertexId>> adj(labels_.size());
  for (const auto& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        adj[f[i]].push_back(f[j]);
        adj[f[j]].push_back(f[i]);
      }
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

bool SimplicialComplex::adjacent(VertexId a, VertexId b) const {
  if (a == b) return false;
  return contains(Simplex{a, b});
}

std::string SimplicialComplex::format(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += labels_.at(s[i]);
  }
  return out + "}";
}

// ------------------------------------------------------------ operations

FlagCheck check_flag(const SimplicialComplex& k) {
  auto adj = k.adjacency();
  // Grow cliques one size at a time. A smallest non-face clique has every
  // proper subset a face, so extending faces only is enough.
  std::vector<Simplex> level = k.simplices(1);
  while (!level.empty()) {
    std::vector<Simplex> next;
    std::optional<Simplex> witness;
    for (const auto& s : level) {
      VertexId last = s[s.size() - 1];
      for (VertexId v : adj[last]) {
        if (v <= last) continue;
        bool clique = std::all_of(s.vertices().begin(), s.vertices().end(), [&](VertexId u) {
          return std::binary_search(adj[u].begin(), adj[u].end(), v);
        });
        if (!clique) continue;
        Simplex grown = s.united(Simplex{v});
        if (!k.contains(grown)) {
          if (!witness || grown < *witness) witness = grown;
        } else {
          next.push_back(std::move(grown));
        }
      }
    }
    if (witness) return {false, witness};
    level = std::move(next);
  }
  return {true, std::nullopt};
}

bool is_flag(const SimplicialComplex& k) { return check_flag(k).is_flag; }

SimplicialComplex restrict_to(const SimplicialComplex& k, const std::vector<bool>& keep) {
  std::vector<Simplex> faces;
  faces.reserve(k.facets().size());
  for (const auto& f : k.facets()) {
    std::vector<VertexId> kept;
    for (VertexId v : f.vertices()) {
      if (v < keep.size() && keep[v]) kept.push_back(v);
    }
    if (!kept.empty()) faces.emplace_back(std::move(kept));
  }
  return SimplicialComplex::from_faces(k.labels(), std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> s) {
  std::vector<bool> keep(k.universe_size(), false);
  for (VertexId v : s) {
    if (!k.has_vertex(v)) {
      throw PreconditionError("full_subcomplex: vertex id " + std::to_string(v) +
                              " is not a vertex of the complex");
    }
    keep[v] = true;
  }
  return restrict_to(k, keep);
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) {
    throw PreconditionError("link: " + k.format(sigma) + " is not a simplex of the complex");
  }
  std::vector<Simplex> faces;
  for (const auto& f : k.facets()) {
    if (sigma.is_face_of(f)) faces.push_back(f.minus(sigma));
  }
  return SimplicialComplex::from_faces(k.labels(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.labels() != b.labels()) throw PreconditionError("join: complexes over different universes");
  for (VertexId v : a.vertices()) {
    if (b.has_vertex(v)) throw PreconditionError("join: vertex sets overlap");
  }
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  std::vector<Simplex> faces;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) faces.push_back(f.united(g));
  }
  return SimplicialComplex::from_faces(a.labels(), std::move(faces));
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
  if (k.find(apex)) throw InputError("cone: apex label already in use");
  auto labels = k.labels();
  labels.push_back(apex);
  auto apex_id = static_cast<VertexId>(labels.size() - 1);
  std::vector<Simplex> faces;
  for (const auto& f : k.facets()) faces.push_back(f.united(Simplex{apex_id}));
  if (faces.empty()) faces.push_back(Simplex{apex_id});
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

std::optional<JoinWitness> find_join(const SimplicialComplex& k) {
  if (!is_flag(k)) throw PreconditionError("join detection requires a flag complex");
  const auto& verts = k.vertices();
  if (verts.size() < 2) return std::nullopt;
  auto adj = k.adjacency();
  std::vector<bool> seen(k.universe_size(), false);
  std::vector<VertexId> component;
  std::deque<VertexId> queue{verts.front()};
  seen[verts.front()] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    component.push_back(v);
    for (VertexId u : verts) {
      if (u == v || seen[u]) continue;
      if (std::binary_search(adj[v].begin(), adj[v].end(), u)) continue;
      seen[u] = true;
      queue.push_back(u);
    }
  }
  if (component.size() == verts.size()) return std::nullopt;
  JoinWitness w;
  std::sort(component.begin(), component.end());
  w.first = component;
  for (VertexId v : verts) {
    if (!seen[v]) w.second.push_back(v);
  }
  return w;
}

std::optional<std::size_t> girth(const SimplicialComplex& k) {
  auto adj = k.adjacency();
  std::optional<std::size_t> best;
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (VertexId root : k.vertices()) {
    std::vector<std::size_t> dist(k.universe_size(), kUnseen);
    std::vector<VertexId> parent(k.universe_size(), root);
    std::deque<VertexId> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : adj[v]) {
        if (dist[u] == kUnseen) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (parent[v] != u) {
          std::size_t len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

SimplicialComplex clique_complex(std::vector<std::string> labels,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::size_t n = labels.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw InputError("clique_complex: bad edge");
    adj[a][b] = adj[b][a] = true;
  }
  // Bron-Kerbosch without pivoting; maximal cliques are the facets.
  std::vector<Simplex> facets;
  std::function<void(std::vector<VertexId>&, std::vector<VertexId>, std::vector<VertexId>)> bk =
      [&](std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x) {
        if (p.empty() && x.empty()) {
          facets.emplace_back(r);
          return;
        }
        while (!p.empty()) {
          VertexId v = p.back();
          std::vector<VertexId> np, nx;
          for (VertexId u : p) {
            if (adj[v][u]) np.push_back(u);
          }
          for (VertexId u : x) {
            if (adj[v][u]) nx.push_back(u);
          }
          r.push_back(v);
          bk(r, np, nx);
          r.pop_back();
          p.pop_back();
          x.push_back(v);
        }
      };
  std::vector<VertexId> r, p;
  for (VertexId v = 0; v < n; ++v) p.push_back(v);
  bk(r, p, {});
  return SimplicialComplex::from_faces(std::move(labels), std::move(facets));
}

bool is_connected(const SimplicialComplex& k) {
  const auto& verts = k.vertices();
  if (verts.empty()) return false;
  auto adj = k.adjacency();
  std::vector<bool> seen(k.universe_size(), false);
  std::deque<VertexId> queue{verts.front()};
  seen[verts.front()] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    ++count;
    for (VertexId u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return count == verts.size();
}

// -------------------------------------------------------------- examples

namespace examples {

namespace {
std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  }
  return out;
}
}  // namespace

SimplicialComplex point() { return SimplicialComplex::from_facets({"a"}, {{"a"}}); }

SimplicialComplex sphere0() { return SimplicialComplex::from_facets({"a", "b"}, {{"a"}, {"b"}}); }

SimplicialComplex path3() {
  return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

SimplicialComplex cycle(std::size_t n) {
  auto labels = letters(n);
  std::vector<std::vector<std::string>> facets;
  for (std::size_t i = 0; i < n; ++i) facets.push_back({labels[i], labels[(i + 1) % n]});
  return SimplicialComplex::from_facets(labels, facets);
}

SimplicialComplex hollow_triangle() { return cycle(3); }

SimplicialComplex simplex(std::size_t n) {
  auto labels = letters(n);
  return SimplicialComplex::from_facets(labels, {labels});
}

SimplicialComplex octahedron() {
  // Opposite pairs (a,b), (c,d), (e,f).
  std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
  std::vector<std::vector<std::string>> facets;
  for (const char* x : {"a", "b"}) {
    for (const char* y : {"c", "d"}) {
      for (const char* z : {"e", "f"}) facets.push_back({x, y, z});
    }
  }
  return SimplicialComplex::from_facets(labels, facets);
}

SimplicialComplex grid_disk(std::size_t rows, std::size_t cols) {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      labels.push_back("p" + std::to_string(r) + "_" + std::to_string(c));
    }
  }
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  std::vector<Simplex> faces;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      faces.push_back(Simplex{id(r, c), id(r + 1, c), id(r + 1, c + 1)});
      faces.push_back(Simplex{id(r, c), id(r, c + 1), id(r + 1, c + 1)});
    }
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

}  // namespace examples

}  // namespace fibrekit
