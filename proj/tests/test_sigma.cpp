#include "doctest.h"

#include <random>

#include "fibrekit/errors.hpp"
#include "fibrekit/sigma.hpp"
#include "helpers.hpp"

using namespace fibrekit;

namespace {

Character with_values(const SimplicialComplex& k, std::vector<long long> values) {
  std::vector<Rational> dense(k.universe_size());
  for (std::size_t i = 0; i < values.size(); ++i) dense[i] = values[i];
  return Character(k, dense);
}

bool same_verdict(const SigmaVerdict& a, const SigmaVerdict& b) {
  if (a.in_sigma_z != b.in_sigma_z || a.in_sigma != b.in_sigma) return false;
  if (a.certificate.has_value() != b.certificate.has_value()) return false;
  if (a.certificate) {
    return a.certificate->kind == b.certificate->kind &&
           a.certificate->dead_simplex == b.certificate->dead_simplex &&
           a.certificate->degree == b.certificate->degree && a.certificate->group == b.certificate->group;
  }
  return true;
}

/// Living-link criterion recomputed from the definitions with the
/// bitmask homology oracle: every dead face (and the empty face) must have
/// a living link whose reduced homology vanishes in degrees -1..n-dim-1.
bool oracle_in_sigma_z(std::size_t n_vertices, const std::vector<oracle::Mask>& facets,
                       oracle::Mask dead, int n) {
  auto faces = oracle::all_faces(facets);
  std::vector<oracle::Mask> dead_faces{0};
  for (auto f : faces) {
    if ((f & ~dead) == 0) dead_faces.push_back(f);
  }
  oracle::Mask living = 0;
  for (auto f : faces) living |= f & ~dead;
  (void)n_vertices;
  for (auto sigma : dead_faces) {
    int dim = oracle::popcount(sigma) - 1;
    int required = n - dim - 1;
    if (required < -1) continue;
    std::vector<oracle::Mask> link_faces;
    for (auto f : faces) {
      if ((f & sigma) == 0 && (f & ~living) == 0) {
        if (std::binary_search(faces.begin(), faces.end(), f | sigma)) link_faces.push_back(f);
      }
    }
    auto h = oracle::reduced_homology(link_faces, required);
    for (const auto& g : h) {
      if (g.free_rank != 0 || !g.torsion.empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("characters") {
  auto path = examples::path3();
  CHECK_THROWS_AS(with_values(path, {0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(Character(path, std::vector<Rational>{1, 2}), InputError);
  CHECK_THROWS_AS(Character::from_labels(path, {{"a", 1}, {"b", 2}}), InputError);
  CHECK_THROWS_AS(Character::from_labels(path, {{"a", 1}, {"b", 2}, {"c", 1}, {"z", 1}}), InputError);
}

TEST_CASE("dead and living subcomplexes") {
  auto path = examples::path3();
  auto split = dead_living(with_values(path, {1, 0, 1}));
  CHECK(split.dead.vertices() == std::vector<VertexId>{path.id_of("b")});
  CHECK(split.living.vertices() == std::vector<VertexId>{path.id_of("a"), path.id_of("c")});
  CHECK(split.living.dimension() == 0);

  auto oct = examples::octahedron();
  auto all = dead_living(Character::ones(oct));
  CHECK(all.dead.is_empty());
  CHECK(all.living == oct);

  auto c4 = examples::cycle(4);
  auto cs = dead_living(with_values(c4, {1, 1, 0, 0}));
  CHECK(cs.dead.dimension() == 1);
  CHECK(cs.living.dimension() == 1);
}

TEST_CASE("sigma membership examples") {
  auto s0 = examples::sphere0();
  auto v = sigma_membership(Character::ones(s0), 0);
  CHECK_FALSE(v.in_sigma_z);
  CHECK(v.in_sigma == Decision::No);
  REQUIRE(v.certificate);
  CHECK(v.certificate->dead_simplex.empty());
  CHECK(v.certificate->degree == 0);
  CHECK(v.certificate->group.free_rank == 1);

  auto tri = examples::simplex(3);
  for (int n = 0; n <= 4; ++n) {
    auto t = sigma_membership(with_values(tri, {1, -2, 3}), n);
    CHECK(t.in_sigma_z);
    CHECK(t.in_sigma == Decision::Yes);
  }

  auto path = examples::path3();
  auto p = sigma_membership(with_values(path, {1, 0, 1}), 0);
  CHECK_FALSE(p.in_sigma_z);
  REQUIRE(p.certificate);
  CHECK(p.certificate->dead_simplex.empty());

  CHECK_THROWS_AS(sigma_membership(Character::ones(examples::hollow_triangle()), 0), PreconditionError);
  CHECK_THROWS_AS(sigma_membership(Character::ones(path), -1), PreconditionError);
}

TEST_CASE("a failure certificate at a positive-dimensional dead simplex") {
  // C5 with the consecutive pair a-b dead. The empty simplex and the dead
  // vertices pass at n = 1, the dead edge {a,b} has an empty living link.
  auto c5 = examples::cycle(5);
  auto phi = with_values(c5, {0, 0, 1, 1, 1});
  auto v0 = sigma_membership(phi, 0);
  CHECK(v0.in_sigma_z);
  auto v1 = sigma_membership(phi, 1);
  CHECK_FALSE(v1.in_sigma_z);
  REQUIRE(v1.certificate);
  CHECK(v1.certificate->dead_simplex == Simplex{c5.id_of("a"), c5.id_of("b")});
  CHECK(v1.certificate->degree == -1);

  // Octahedron with a dead vertex a: its living link is the 4-cycle, not
  // 1-acyclic, while the living subcomplex (a cone on that cycle) is.
  auto oct = examples::octahedron();
  std::vector<Rational> values(6, Rational(1));
  values[oct.id_of("a")] = 0;
  auto w = sigma_membership(Character(oct, values), 2);
  CHECK_FALSE(w.in_sigma_z);
  REQUIRE(w.certificate);
  CHECK(w.certificate->dead_simplex == Simplex{oct.id_of("a")});
  CHECK(w.certificate->degree == 1);
}

TEST_CASE("sigma criterion agrees with a direct oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::uint32_t edges = rng() & ((1u << (n * (n - 1) / 2)) - 1);
    auto masks = testing::clique_masks(n, edges);
    auto k = testing::from_masks(n, masks);
    oracle::Mask dead = rng() & ((1u << n) - 1);
    if (dead == (1u << n) - 1) dead &= ~1u;
    std::vector<Rational> values(n);
    for (std::size_t v = 0; v < n; ++v) values[v] = (dead >> v & 1u) ? 0 : 1 + static_cast<int>(rng() % 3);
    Character phi(k, values);
    for (int deg = 0; deg <= 3; ++deg) {
      CHECK(sigma_membership(phi, deg).in_sigma_z == oracle_in_sigma_z(n, masks, dead, deg));
    }
  }
}

TEST_CASE("verdicts depend only on the zero set") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng() % 3;
    std::uint32_t edges = rng() & ((1u << (n * (n - 1) / 2)) - 1);
    auto k = testing::from_masks(n, testing::clique_masks(n, edges));
    std::vector<Rational> values(n), other(n);
    for (std::size_t v = 0; v < n; ++v) {
      bool zero = rng() % 3 == 0;
      values[v] = zero ? Rational(0) : Rational(static_cast<int>(rng() % 5) + 1, static_cast<int>(rng() % 4) + 1);
      other[v] = zero ? Rational(0) : Rational(-static_cast<int>(rng() % 7) - 1, static_cast<int>(rng() % 3) + 1);
    }
    if (std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; })) continue;
    Character phi(k, values);
    Character psi(k, other);
    for (int deg = 0; deg <= 3; ++deg) {
      auto base = sigma_membership(phi, deg);
      CHECK(same_verdict(base, sigma_membership(psi, deg)));
      CHECK(same_verdict(base, sigma_membership(phi.scaled(Rational(-3, 7)), deg)));
    }
  }
}

TEST_CASE("finiteness reports") {
  auto c4 = kernel_finiteness(Character::ones(examples::cycle(4)), 3);
  REQUIRE(c4.rows.size() == 3);
  CHECK(c4.rows[0].fp);
  CHECK(c4.rows[0].f == Decision::Yes);
  CHECK_FALSE(c4.rows[1].fp);
  REQUIRE(c4.rows[1].certificate);
  CHECK(c4.rows[1].certificate->degree == 1);
  CHECK(c4.rows[1].certificate->group.free_rank == 1);
  CHECK_FALSE(c4.type_fp);
  CHECK(c4.type_f == Decision::No);

  auto oct = kernel_finiteness(Character::ones(examples::octahedron()), 2);
  REQUIRE(oct.rows.size() == 3);  // through dim L + 1
  CHECK(oct.rows[1].fp);
  CHECK(oct.rows[1].f == Decision::Yes);
  CHECK_FALSE(oct.rows[2].fp);
  CHECK(oct.rows[2].certificate->degree == 2);
  CHECK(oct.stabilized);

  auto grid = kernel_finiteness(Character::ones(examples::grid_disk(4, 4)), 2);
  CHECK(grid.type_fp);
  CHECK(grid.type_f == Decision::Yes);
  CHECK(grid.type_f_promoted);
}

TEST_CASE("finiteness report invariants") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::uint32_t edges = rng() & ((1u << (n * (n - 1) / 2)) - 1);
    auto k = testing::from_masks(n, testing::clique_masks(n, edges));
    std::vector<Rational> values(n);
    for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<int>(rng() % 3);
    if (std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; })) values[0] = 1;
    auto report = kernel_finiteness(Character(k, values), 4);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const auto& row = report.rows[i];
      if (row.f == Decision::Yes) CHECK(row.fp);
      if (!row.fp) CHECK(row.f == Decision::No);
      if (i + 1 < report.rows.size() && !row.fp) CHECK_FALSE(report.rows[i + 1].fp);
      CHECK(row.stable == (row.k >= k.dimension() + 1));
    }
    CHECK(report.type_fp == report.rows.back().fp);
  }
}

TEST_CASE("gamma kernel hypotheses") {
  auto c5 = examples::cycle(5);
  auto g = gamma_kernel_type(Character::ones(c5), c5.id_of("a"), c5.id_of("c"), 2);
  CHECK(g.hypotheses_hold());
  REQUIRE(g.report);
  CHECK(g.report->rows[0].fp);
  CHECK_FALSE(g.report->rows[1].fp);

  auto path = examples::path3();
  auto p = gamma_kernel_type(Character::ones(path), path.id_of("a"), path.id_of("c"), 2);
  CHECK_FALSE(p.hypotheses_hold());
  CHECK_FALSE(p.report);
  bool join_failed = false;
  for (const auto& h : p.hypotheses) join_failed |= h.name == "L is not a non-trivial join" && !h.holds;
  CHECK(join_failed);

  auto adjacent = gamma_kernel_type(Character::ones(c5), c5.id_of("a"), c5.id_of("b"), 2);
  CHECK_FALSE(adjacent.hypotheses_hold());

  auto grid = examples::grid_disk(4, 4);
  auto gg = gamma_kernel_type(Character::ones(grid), grid.id_of("p0_0"), grid.id_of("p0_2"), 2);
  CHECK(gg.hypotheses_hold());
  REQUIRE(gg.report);
  CHECK(gg.report->type_f == Decision::Yes);
}
