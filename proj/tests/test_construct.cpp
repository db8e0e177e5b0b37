#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "fibrekit/cayley.hpp"
#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"
#include "helpers.hpp"
#include "huang_check.hpp"
#include "oracle/cubic.hpp"

using namespace fibrekit;

namespace {

LabeledGraph simple_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (auto [a, b] : edges) g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), "e");
  return g;
}

const std::vector<std::pair<int, int>> kK4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const std::vector<std::pair<int, int>> kK33 = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                               {1, 5}, {2, 3}, {2, 4}, {2, 5}};
const std::vector<std::pair<int, int>> kPrism = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5},
                                                 {5, 3}, {0, 3}, {1, 4}, {2, 5}};
const std::vector<std::pair<int, int>> kCube = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                                                {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};

SimplicialComplex complex_from(std::vector<std::string> labels, std::vector<std::vector<std::string>> facets) {
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex edge() { return complex_from({"u", "w"}, {{"u", "w"}}); }

/// Truncated power series over Q.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Ball sizes of A_L from the growth series 1 / p(-2t / (1 + t)), where p
/// is the clique polynomial of the 1-skeleton.
std::vector<Rational> ball_sizes_from_growth_series(const SimplicialComplex& l, std::size_t radius) {
  std::size_t len = radius + 1;
  Series x(len, 0);  // -2t / (1 + t)
  for (std::size_t k = 1; k < len; ++k) x[k] = (k % 2 ? -2 : 2);
  Series p(len, 0), power(len, 0);
  power[0] = 1;
  p[0] = 1;
  for (int d = 0; d <= l.dimension(); ++d) {
    power = series_mul(power, x);
    Rational count = static_cast<long long>(l.simplex_count(d));
    for (std::size_t k = 0; k < len; ++k) p[k] += count * power[k];
  }
  Series inv(len, 0);
  inv[0] = 1 / p[0];
  for (std::size_t k = 1; k < len; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += p[j] * inv[k - j];
    inv[k] = -acc / p[0];
  }
  std::vector<Rational> sizes;
  Rational total = 0;
  for (auto c : inv) sizes.push_back(total += c);
  return sizes;
}

Rational word_height(const RaagNormalForm& nf, const Character& phi, const Word& w) {
  Rational h = 0;
  for (int x : w) {
    Rational v = phi.value(nf.vertex(static_cast<std::size_t>(std::abs(x) - 1)));
    h += x > 0 ? v : Rational(-v);
  }
  return h;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("FIBREKIT_MAX_RADIUS", value, 1); }
  ~EnvGuard() { unsetenv("FIBREKIT_MAX_RADIUS"); }
};

}  // namespace

TEST_CASE("labeled graphs") {
  LabeledGraph tree = simple_graph(3, {{0, 1}, {1, 2}});
  CHECK(rank_pi1(tree) == 0);
  LabeledGraph loop;
  loop.add_vertex("x");
  loop.add_edge(0, 0, "a");
  CHECK(loop.valence(0) == 2);
  CHECK(rank_pi1(loop) == 1);
  CHECK_THROWS_AS(rank_pi1(simple_graph(2, {})), PreconditionError);
  CHECK_FALSE(LabeledGraph{}.is_connected());
  CHECK_THROWS_AS(tree.add_edge(0, 7, "a"), InputError);
  CHECK(tree.id_of("v2") == 2);
  CHECK(tree.out_edges(1) == std::vector<std::size_t>{1});
  CHECK(tree.in_edges(1) == std::vector<std::size_t>{0});
}

TEST_CASE("Huang rewrite examples") {
  auto k4 = simple_graph(4, kK4);
  auto h = huang_double(k4);
  CHECK(h.vertex_count() == 12);
  CHECK(h.edge_count() == 24);
  CHECK(h.euler_characteristic() == -12);
  CHECK(rank_pi1(h) == 13);
  CHECK(testing::huang_violation(k4, h).empty());
  CHECK(h.name(0) == "v0:0");

  LabeledGraph theta = simple_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  auto ht = huang_double(theta);
  CHECK(ht.vertex_count() == 6);
  CHECK(ht.edge_count() == 12);
  CHECK(rank_pi1(ht) == 7);

  auto k33 = simple_graph(6, kK33);
  auto h33 = huang_double(k33);
  CHECK(h33.vertex_count() == 18);
  CHECK(h33.edge_count() == 36);
  CHECK(testing::huang_violation(k33, h33).empty());

  CHECK_THROWS_AS(huang_double(simple_graph(3, {{0, 1}, {1, 2}, {2, 0}})), PreconditionError);
  CHECK_THROWS_AS(huang_double(simple_graph(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}})),
                  PreconditionError);
}

TEST_CASE("Huang rewrite on every connected cubic multigraph with at most 8 vertices") {
  const std::size_t expected_classes[] = {2, 5, 17, 71};
  for (int n = 2; n <= 8; n += 2) {
    auto graphs = oracle::connected_cubic_multigraphs(n);
    CHECK(oracle::unique_connected_cubic_multigraphs(n).size() == expected_classes[n / 2 - 1]);
    for (const auto& m : graphs) {
      auto g = testing::to_labeled(m);
      auto h = huang_double(g);
      auto violation = testing::huang_violation(g, h);
      CHECK_MESSAGE(violation.empty(), violation);
    }
  }
}

TEST_CASE("input automorphisms with rotational port maps lift to the rewrite") {
  for (const auto* edges : {&kK4, &kK33, &kPrism, &kCube}) {
    std::size_t n = 0;
    for (auto [a, b] : *edges) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(a, b)) + 1);
    auto g = simple_graph(n, *edges);
    auto h = huang_double(g);
    // Port of edge k at each endpoint, assigned in edge order.
    std::vector<std::vector<std::size_t>> port(n, std::vector<std::size_t>(edges->size(), 3));
    std::vector<std::size_t> next(n, 0);
    for (std::size_t k = 0; k < edges->size(); ++k) {
      auto [a, b] = (*edges)[k];
      port[static_cast<std::size_t>(a)][k] = next[static_cast<std::size_t>(a)]++;
      port[static_cast<std::size_t>(b)][k] = next[static_cast<std::size_t>(b)]++;
    }
    auto edge_index = [&](std::size_t a, std::size_t b) -> std::size_t {
      for (std::size_t k = 0; k < edges->size(); ++k) {
        auto [x, y] = (*edges)[k];
        if ((x == static_cast<int>(a) && y == static_cast<int>(b)) ||
            (x == static_cast<int>(b) && y == static_cast<int>(a))) {
          return k;
        }
      }
      return edges->size();
    };
    auto sorted_edges = [](std::vector<LabeledEdge> es) {
      std::sort(es.begin(), es.end(), [](const LabeledEdge& x, const LabeledEdge& y) {
        return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
      });
      return es;
    };
    auto original = sorted_edges(h.edges());
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::size_t automorphisms = 0, lifted = 0;
    do {
      std::vector<std::size_t> sigma(edges->size());
      bool automorphism = true;
      for (std::size_t k = 0; k < edges->size() && automorphism; ++k) {
        auto [a, b] = (*edges)[k];
        sigma[k] = edge_index(pi[static_cast<std::size_t>(a)], pi[static_cast<std::size_t>(b)]);
        automorphism = sigma[k] < edges->size();
      }
      if (!automorphism) continue;
      ++automorphisms;
      std::vector<std::size_t> map(3 * n);
      bool rotational = true;
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> local(3);
        for (std::size_t k = 0; k < edges->size(); ++k) {
          if (port[v][k] < 3) {
            local[port[v][k]] = port[pi[v]][sigma[k]];
            map[3 * v + port[v][k]] = 3 * pi[v] + port[pi[v]][sigma[k]];
          }
        }
        rotational = rotational && (local[1] + 3 - local[0]) % 3 == 1 && (local[2] + 3 - local[1]) % 3 == 1;
      }
      std::vector<LabeledEdge> image;
      for (const auto& e : h.edges()) image.push_back({map[e.from], map[e.to], e.label});
      bool preserved = sorted_edges(image) == original;
      CHECK(preserved == rotational);
      if (preserved) ++lifted;
    } while (std::next_permutation(pi.begin(), pi.end()));
    CHECK(automorphisms > 0);
    CHECK(lifted >= 1);  // the identity
  }
}

TEST_CASE("Salvetti cells") {
  auto e = salvetti_cells(edge());
  CHECK(e.counts == std::vector<std::size_t>{1, 2, 1});
  CHECK(e.euler_characteristic == 0);
  auto s0 = salvetti_cells(examples::sphere0());
  CHECK(s0.counts == std::vector<std::size_t>{1, 2, 0});
  CHECK(s0.euler_characteristic == -1);
  auto t3 = salvetti_cells(examples::simplex(3));
  CHECK(t3.counts == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(t3.euler_characteristic == 0);
  CHECK_THROWS_AS(salvetti_cells(examples::hollow_triangle()), PreconditionError);
  std::mt19937 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto l = testing::from_masks(n, testing::clique_masks(n, static_cast<std::uint32_t>(rng())));
    auto cells = salvetti_cells(l);
    long long chi = 0;
    for (std::size_t k = 0; k < cells.counts.size(); ++k) {
      long long c = static_cast<long long>(cells.counts[k]);
      CHECK(c == (k == 0 ? 1 : static_cast<long long>(l.simplex_count(static_cast<int>(k) - 1))));
      chi += k % 2 ? -c : c;
    }
    CHECK(cells.euler_characteristic == chi);
  }
}

TEST_CASE("cover skeleton") {
  auto three = complex_from({"u", "w", "x"}, {{"u"}, {"w"}, {"x"}});
  auto r0 = cover_skeleton(three, 0, 1, 0);
  CHECK(r0.vertex_count() == 1);
  CHECK(r0.edge_count() == 1);
  auto r1 = cover_skeleton(three, 0, 1, 1);
  CHECK(r1.vertex_count() == 5);
  CHECK(r1.edge_count() == 9);
  CHECK(r1.valence(r1.id_of("1")) == 6);
  auto four = complex_from({"u", "w", "x", "y"}, {{"u", "x"}, {"w", "y"}});
  auto m4 = cover_skeleton(four, 0, 1, 0);
  CHECK(m4.edge_count() == 2);
  CHECK(m4.valence(0) == 4);

  auto r3 = cover_skeleton(four, 0, 1, 3);
  CHECK(r3.vertex_count() == 1 + 4 + 12 + 36);
  CHECK(rank_pi1(r3) == r3.vertex_count() * 2);  // tree plus two loops per vertex
  for (std::size_t v = 0; v < r3.vertex_count(); ++v) {
    std::size_t length = r3.name(v) == "1" ? 0 : static_cast<std::size_t>(std::count(r3.name(v).begin(), r3.name(v).end(), ' ')) + 1;
    if (length < 3) CHECK(r3.valence(v) == 4 + 2 * 2);
    else CHECK(r3.valence(v) == 1 + 2 * 2);
  }
  CHECK(r3.id_of("u w^-1") < r3.vertex_count());

  CHECK_THROWS_AS(cover_skeleton(edge(), 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(cover_skeleton(complex_from({"u", "w", "x"}, {{"u", "w"}, {"x"}}), 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(cover_skeleton(three, 0, 0, 1), PreconditionError);
}

TEST_CASE("Cayley ball counts") {
  auto z2 = cayley_ball(edge(), 2);
  CHECK(z2.elements.size() == 13);
  auto f2 = cayley_ball(examples::sphere0(), 2);
  CHECK(f2.elements.size() == 17);
  auto r0 = cayley_ball(examples::octahedron(), 0);
  CHECK(r0.elements.size() == 1);
  CHECK(r0.edges.empty());
  CHECK(z2.squares.size() == 4);
  CHECK(f2.squares.empty());
  CHECK(z2.format(z2.elements[0]) == "1");
  CHECK_THROWS_AS(cayley_ball(examples::hollow_triangle(), 1), PreconditionError);
}

TEST_CASE("Cayley balls match the growth series") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto l = testing::from_masks(n, testing::clique_masks(n, static_cast<std::uint32_t>(rng())));
    std::size_t radius = 3;
    auto expected = ball_sizes_from_growth_series(l, radius);
    auto previous = cayley_ball(l, 0);
    CHECK(expected[0] == 1);
    for (std::size_t r = 1; r <= radius; ++r) {
      auto ball = cayley_ball(l, r);
      CHECK(Rational(static_cast<long long>(ball.elements.size())) == expected[r]);
      // Prefix property.
      REQUIRE(ball.elements.size() >= previous.elements.size());
      for (std::size_t i = 0; i < previous.elements.size(); ++i) CHECK(ball.elements[i] == previous.elements[i]);
      previous = std::move(ball);
    }
  }
}

TEST_CASE("Cayley ball normal forms and edges") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 3;
    auto l = testing::from_masks(n, testing::clique_masks(n, static_cast<std::uint32_t>(rng())));
    RaagNormalForm nf(l);
    auto ball = cayley_ball(l, 3);
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      const auto& w = ball.elements[i];
      CHECK(nf.normalize(w) == w);
      CHECK(w.size() <= 3);
      CHECK(ball.index.at(w) == i);
    }
    for (const auto& e : ball.edges) {
      CHECK(nf.multiply(ball.elements[e.from], static_cast<int>(e.generator) + 1) == ball.elements[e.to]);
    }
    // Every product with a generator that stays in the ball is an edge.
    std::size_t expected_edges = 0;
    for (const auto& w : ball.elements) {
      for (std::size_t g = 0; g < nf.generator_count(); ++g) {
        if (ball.index.count(nf.multiply(w, static_cast<int>(g) + 1))) ++expected_edges;
      }
    }
    CHECK(ball.edges.size() == expected_edges);
    for (const auto& s : ball.squares) {
      CHECK(nf.commute(s.v, s.w));
      CHECK(ball.edges[s.edge[0]].from == s.corner[0]);
      CHECK(ball.edges[s.edge[1]].to == s.corner[2]);
      CHECK(ball.edges[s.edge[2]].to == s.corner[2]);
      CHECK(ball.edges[s.edge[3]].from == s.corner[0]);
    }
  }
  // Commuting letters: u w = w u in Z^2, and the normal form is lex least.
  RaagNormalForm z2(edge());
  CHECK(z2.normalize({2, 1}) == Word{1, 2});
  CHECK(z2.normalize({2, 1, -2}) == Word{1});
  RaagNormalForm f2(examples::sphere0());
  CHECK(f2.normalize({2, 1, -1}) == Word{2});
  CHECK(f2.normalize({2, 1}) == Word{2, 1});
}

TEST_CASE("heights") {
  auto z2 = cayley_ball(edge(), 2);
  auto ones = Character::ones(edge());
  auto h = height_assignment(z2, ones);
  RaagNormalForm nf(edge());
  for (std::size_t i = 0; i < z2.elements.size(); ++i) {
    CHECK(h.heights[i] == word_height(nf, ones, z2.elements[i]));
  }
  CHECK(h.edges_checked == z2.edges.size());
  CHECK(h.squares_checked == z2.squares.size());
  CHECK(h.cycles_checked == z2.edges.size() - z2.elements.size() + 1);

  auto s0 = examples::sphere0();
  auto ball = cayley_ball(s0, 3);
  std::vector<Rational> values(s0.universe_size());
  values[s0.id_of("a")] = 1;
  values[s0.id_of("b")] = -1;
  auto phi = Character(s0, values);
  auto hs = height_assignment(ball, phi);
  Word uwu{1, -2, 1};
  REQUIRE(ball.index.count(uwu));
  CHECK(hs.heights[ball.index.at(uwu)] == 3);
}

TEST_CASE("heights agree with the word-sum oracle") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto l = testing::from_masks(n, testing::clique_masks(n, static_cast<std::uint32_t>(rng())));
    std::vector<Rational> values(n);
    for (auto& v : values) v = Rational(static_cast<long long>(rng() % 7) - 3, static_cast<long long>(rng() % 3) + 1);
    if (std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; })) values[0] = 1;
    Character phi(l, values);
    auto ball = cayley_ball(l, 3);
    auto h = height_assignment(ball, phi);
    RaagNormalForm nf(l);
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      CHECK(h.heights[i] == word_height(nf, phi, ball.elements[i]));
    }
    for (const auto& s : ball.squares) {
      Rational sum = 0;
      for (int k = 0; k < 4; ++k) {
        const auto& e = ball.edges[s.edge[k]];
        Rational step = h.heights[e.to] - h.heights[e.from];
        sum += k < 2 ? step : Rational(-step);
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("level set probes") {
  auto z2 = cayley_ball(edge(), 2);
  auto h = height_assignment(z2, Character::ones(edge()));
  auto line = level_set_probe(z2, h, 0, 0);
  CHECK(line.vertices.size() == 3);
  CHECK(line.edges.empty());
  CHECK(line.h0.free_rank == 2);
  CHECK(line.label == "finite-scale probe; boundary effects uncorrected");

  auto whole = level_set_probe(z2, h, -10, 10);
  CHECK(whole.vertices.size() == 13);
  CHECK(whole.edges.size() == 16);
  CHECK(whole.squares.size() == 4);
  CHECK(whole.h0.trivial());
  CHECK(whole.h1.trivial());
  CHECK(whole.h_minus1.trivial());

  auto none = level_set_probe(z2, h, 100, 100);
  CHECK(none.vertices.empty());
  CHECK(none.h_minus1.free_rank == 1);

  auto band = level_set_probe(z2, h, 0, 1);
  CHECK(band.h0.trivial());

  CHECK_THROWS_AS(level_set_probe(z2, h, 1, 0), PreconditionError);

  auto f2 = cayley_ball(examples::sphere0(), 2);
  auto hf = height_assignment(f2, Character::ones(examples::sphere0()));
  auto tree = level_set_probe(f2, hf, -10, 10);
  CHECK(tree.h0.trivial());
  CHECK(tree.h1.trivial());
}

TEST_CASE("radius cap") {
  CHECK(max_radius() == kDefaultMaxRadius);
  CHECK_THROWS_AS(cayley_ball(edge(), 6), BudgetExceeded);
  {
    EnvGuard env("2");
    CHECK(max_radius() == 2);
    CHECK_NOTHROW(cayley_ball(edge(), 2));
    CHECK_THROWS_AS(cayley_ball(edge(), 3), BudgetExceeded);
    CHECK_THROWS_AS(cover_skeleton(complex_from({"u", "w", "x"}, {{"u"}, {"w"}, {"x"}}), 0, 1, 3), BudgetExceeded);
  }
  {
    EnvGuard env("7");
    CHECK_NOTHROW(check_radius(7));
  }
  {
    EnvGuard env("many");
    CHECK_THROWS_AS(max_radius(), InputError);
  }
  {
    EnvGuard env("65");
    CHECK_THROWS_AS(max_radius(), InputError);
  }
}
