#include "frustra/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace frustra;

namespace {

int count_class(const MolecularGraph& g, BondClass cls) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [&](const Edge& e) { return e.cls == cls; }));
}

void check_adjacency_consistent(const MolecularGraph& g) {
  int degree_sum = 0;
  for (int v = 0; v < g.size(); ++v) {
    degree_sum += g.degree(v);
    for (int w : g.neighbors(v)) {
      CHECK(w != v);
      const auto& back = g.neighbors(w);
      CHECK(std::find(back.begin(), back.end(), v) != back.end());
      CHECK(g.edge_index(v, w) >= 0);
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("C60 has 60 vertices, 90 edges and is 3-regular") {
  const auto g = build_c60();
  CHECK(g.size() == 60);
  CHECK(g.edge_count() == 90);
  for (int v = 0; v < 60; ++v) CHECK(g.degree(v) == 3);
  CHECK(is_connected(g));
  check_adjacency_consistent(g);
}

TEST_CASE("C60 bond classes: 30 double, 60 single, one double per vertex") {
  const auto g = build_c60();
  CHECK(count_class(g, BondClass::Double) == 30);
  CHECK(count_class(g, BondClass::Single) == 60);
  std::vector<int> per_vertex(60, 0);
  for (const Edge& e : g.edges())
    if (e.cls == BondClass::Double) {
      ++per_vertex[e.a];
      ++per_vertex[e.b];
    }
  for (int c : per_vertex) CHECK(c == 1);
}

TEST_CASE("face census") {
  SUBCASE("C60: 12 pentagons, 20 hexagons") {
    const auto census = face_census(build_c60());
    CHECK(census == std::map<int, int>{{5, 12}, {6, 20}});
  }
  SUBCASE("cube") { CHECK(face_census(build_toy("cube")) == std::map<int, int>{{4, 6}}); }
  SUBCASE("tetrahedron") {
    CHECK(face_census(build_toy("tetrahedron")) == std::map<int, int>{{3, 4}});
  }
  SUBCASE("ring has two k-gon faces") {
    CHECK(face_census(build_ring(5)) == std::map<int, int>{{5, 2}});
  }
}

TEST_CASE("double bonds are exactly the hexagon-hexagon fusions") {
  const auto g = build_c60();
  const auto faces = trace_faces(g);
  for (const Edge& e : g.edges()) {
    int hexagons = 0;
    for (const auto& f : faces) {
      const auto n = f.size();
      for (std::size_t k = 0; k < n; ++k) {
        const int u = f[k], v = f[(k + 1) % n];
        if ((u == e.a && v == e.b) || (u == e.b && v == e.a)) hexagons += n == 6 ? 1 : 0;
      }
    }
    CHECK((hexagons == 2) == (e.cls == BondClass::Double));
  }
}

TEST_CASE("face census is invariant under vertex relabelling") {
  const auto g = build_c60();
  std::vector<int> perm(60);
  for (int i = 0; i < 60; ++i) perm[i] = i;
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  Coordinates x(60, 3);
  for (int i = 0; i < 60; ++i) x.row(perm[i]) = g.coordinates().row(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.a], perm[e.b], e.cls});
  const MolecularGraph relabelled(std::move(x), std::move(edges));
  CHECK(face_census(relabelled) == std::map<int, int>{{5, 12}, {6, 20}});
  CHECK_NOTHROW(validate_c60(relabelled));
}

TEST_CASE("C60 edge lengths") {
  SUBCASE("ideal geometry has a single cluster at unit length") {
    for (double len : build_c60(C60Geometry::Ideal).edge_lengths()) CHECK(len == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("Jahn-Teller geometry has two clusters with ratio 1.40/1.45") {
    const auto g = build_c60(C60Geometry::JahnTeller);
    const auto lengths = g.edge_lengths();
    double sum_double = 0.0, sum_single = 0.0;
    std::set<long long> distinct;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      distinct.insert(std::llround(lengths[k] * 1e8));
      (g.edges()[k].cls == BondClass::Double ? sum_double : sum_single) += lengths[k];
    }
    CHECK(distinct.size() == 2);
    const double ratio = (sum_double / 30.0) / (sum_single / 60.0);
    CHECK(std::abs(ratio / (1.40 / 1.45) - 1.0) <= 0.02);
    CHECK(face_census(g) == std::map<int, int>{{5, 12}, {6, 20}});
  }
}

TEST_CASE("vertex numbering is lexicographic in coordinates and reproducible") {
  const auto a = build_c60();
  const auto b = build_c60();
  CHECK(a.coordinates() == b.coordinates());
  for (int i = 0; i + 1 < a.size(); ++i) {
    const auto p = a.coordinates().row(i), q = a.coordinates().row(i + 1);
    const bool ordered = p(0) < q(0) - 1e-9 ||
                         (std::abs(p(0) - q(0)) <= 1e-9 &&
                          (p(1) < q(1) - 1e-9 || (std::abs(p(1) - q(1)) <= 1e-9 && p(2) < q(2))));
    CHECK(ordered);
  }
}

TEST_CASE("toy polyhedra") {
  const auto tet = build_toy("tetrahedron");
  CHECK(tet.size() == 4);
  CHECK(tet.edge_count() == 6);
  const auto cube = build_toy("cube");
  CHECK(cube.size() == 8);
  CHECK(cube.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
  const auto ring = build_toy("ring", 5);
  CHECK(ring.size() == 5);
  CHECK(ring.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(ring.degree(v) == 2);
  for (const auto* g : {&tet, &cube, &ring}) {
    check_adjacency_consistent(*g);
    for (const Edge& e : g->edges()) CHECK(e.cls == BondClass::Uniform);
    for (double len : g->edge_lengths()) CHECK(len == doctest::Approx(1.0));
  }
}

TEST_CASE("toy construction errors") {
  CHECK_THROWS_AS(build_toy("octahedron"), DomainError);
  CHECK_THROWS_AS(build_toy("ring", 2), DomainError);
  CHECK_THROWS_AS(build_ring(0), DomainError);
}

TEST_CASE("graph validation rejects malformed edge lists") {
  Coordinates x = Coordinates::Zero(3, 3);
  CHECK_THROWS_AS(from_edge_list(x, {{0, 0}, {1, 2}}), StructuralError);
  CHECK_THROWS_AS(from_edge_list(x, {{0, 1}, {1, 0}, {1, 2}}), StructuralError);
  CHECK_THROWS_AS(from_edge_list(x, {{0, 1}, {1, 3}}), StructuralError);
  CHECK_THROWS_AS(from_edge_list(x, {{0, 1}}), StructuralError);  // vertex 2 isolated
  CHECK_THROWS_AS(validate_c60(build_toy("cube")), StructuralError);
}

TEST_CASE("face tracing rejects embeddings that are not spheres") {
  // K5 has no planar embedding, so any rotation system has V - E + F != 2.
  Coordinates x(5, 3);
  x << 1, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, 0.2, 0.3, -0.6, -1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  CHECK_THROWS_AS(face_census(from_edge_list(x, pairs)), StructuralError);
}

TEST_CASE("neighbor matrix") {
  SUBCASE("C60 uniform rows sum to 3, symmetric, zero diagonal") {
    const auto m = neighbor_matrix(build_c60());
    CHECK(m.rows() == 60);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < 60; ++i) CHECK(m.row(i).sum() == 3.0);
  }
  SUBCASE("2-vertex path") {
    Coordinates x(2, 3);
    x << 0, 0, 0, 1, 0, 0;
    const auto m = neighbor_matrix(from_edge_list(x, {{0, 1}}));
    Eigen::Matrix2d expected;
    expected << 0, 1, 1, 0;
    CHECK(m == expected);
  }
  SUBCASE("C60 weighted: one double plus two single bonds per row") {
    const auto m = neighbor_matrix(build_c60(), CouplingModel(1.0, 1.0, 1.0, 1.05));
    for (int i = 0; i < 60; ++i) CHECK(m.row(i).sum() == doctest::Approx(3.05).epsilon(1e-14));
  }
  SUBCASE("templated scalar") {
    const auto m = neighbor_matrix<float>(build_toy("tetrahedron"));
    CHECK(m.sum() == 12.0f);
  }
}
