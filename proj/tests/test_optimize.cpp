#include "frustra/optimize.hpp"
#include "frustra/spin.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace frustra;

namespace {

const CouplingModel kUnit = CouplingModel::uniform(1.0, 1.0);

MolecularGraph dimer() {
  Coordinates x(2, 3);
  x << 0, 0, 0, 1, 0, 0;
  return from_edge_list(x, {{0, 1}});
}

OptimizerConfig config(int restarts, std::uint64_t seed = 7) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("C60: best of 20 restarts reaches the spectral bound") {
  const auto g = build_c60();
  const auto r = minimize(g, kUnit, config(20));
  const double bound = 30.0 * -2.618033988749895;
  CHECK(std::abs(r.state.energy - bound) <= 1e-6 * std::abs(bound));
  CHECK(r.certification == Certification::CertifiedGlobal);
  CHECK(r.converged);
  CHECK(r.restarts.size() == 20);
  for (const auto& s : r.restarts) CHECK(s.energy >= r.bound - 1e-9);
}

TEST_CASE("dimer relaxes to antiparallel") {
  const auto r = minimize(dimer(), CouplingModel::uniform(2.0, 1.5), config(3));
  CHECK(r.state.energy == doctest::Approx(-4.5).epsilon(1e-12));
  CHECK(r.state.directions.row(0).dot(r.state.directions.row(1)) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("ring(5) relaxes to the 144 degree spiral") {
  const auto r = minimize(build_ring(5), kUnit, config(10));
  CHECK(r.state.energy == doctest::Approx(5.0 * std::cos(0.8 * std::numbers::pi)).epsilon(1e-9));
  CHECK(r.certification == Certification::CertifiedGlobal);
}

TEST_CASE("optimizer agrees with discretised brute force on small graphs") {
  std::vector<MolecularGraph> graphs{dimer(), build_toy("tetrahedron")};
  for (int k = 3; k <= 6; ++k) graphs.push_back(build_ring(k));
  for (const auto& g : graphs) {
    CAPTURE(g.size());
    const double grid = oracle::coplanar_grid_minimum(g, kUnit);
    const double tol = oracle::grid_resolution(g, kUnit);
    const auto r = minimize(g, kUnit, config(8));
    CHECK(r.state.energy <= grid + 1e-9);
    CHECK(grid - r.state.energy <= tol);
    CHECK(r.state.energy >= spectral_bound(g, kUnit) - 1e-9);
  }
}

TEST_CASE("result is deterministic and independent of thread count") {
  const auto g = build_c60();
  auto cfg = config(6, 3);
  cfg.threads = 1;
  const auto serial = minimize(g, kUnit, cfg);
  cfg.threads = 4;
  const auto parallel = minimize(g, kUnit, cfg);
  CHECK(serial.best_restart == parallel.best_restart);
  CHECK(serial.state.directions == parallel.state.directions);
  CHECK(serial.state.energy == parallel.state.energy);
}

TEST_CASE("optimum energy is rotation invariant") {
  const auto g = build_c60();
  const auto r = minimize(g, kUnit, config(4));
  const Directions rotated = r.state.directions * oracle::random_rotation(5).transpose();
  CHECK(std::abs(energy(g, kUnit, rotated) - r.state.energy) <= 1e-9);
}

TEST_CASE("certification") {
  SUBCASE("cube radial state is only local") {
    const auto g = build_toy("cube");
    Directions d = g.coordinates();
    d.rowwise().normalize();
    const auto cfg = make_configuration(g, kUnit, d);
    CHECK(spectral_bound(g, kUnit) == doctest::Approx(-12.0).epsilon(1e-12));
    CHECK(certify(cfg, g, kUnit) == Certification::LocalOnly);
  }
  SUBCASE("ring(6) antiparallel is global") {
    const auto g = build_ring(6);
    Directions d = Directions::Zero(6, 3);
    for (int i = 0; i < 6; ++i) d(i, 2) = i % 2 ? -1.0 : 1.0;
    CHECK(certify(make_configuration(g, kUnit, d), g, kUnit) == Certification::CertifiedGlobal);
  }
  SUBCASE("no convergence means no certificate") {
    auto cfg = config(2);
    cfg.max_iters = 3;
    const auto r = minimize(build_c60(), kUnit, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.certification == Certification::LocalOnly);
  }
}

TEST_CASE("fixed step schedule converges on a small ring") {
  auto cfg = config(1);
  cfg.schedule = StepSchedule::Fixed;
  cfg.step = 0.1;
  const auto d = descend(build_ring(6), kUnit, random_directions(6, 1), cfg);
  CHECK(d.converged);
  CHECK(d.energy == doctest::Approx(-6.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
  auto cfg = config(0);
  CHECK_THROWS_AS(minimize(build_ring(4), kUnit, cfg), DomainError);
  cfg = config(1);
  cfg.tol_grad = 0.0;
  CHECK_THROWS_AS(minimize(build_ring(4), kUnit, cfg), DomainError);
}
