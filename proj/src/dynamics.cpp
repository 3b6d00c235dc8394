#include "frustra/dynamics.hpp"

#include "frustra/spin.hpp"

#include <algorithm>
#include <cmath>

namespace frustra {

Directions precession_rate(const MolecularGraph& g, const CouplingModel& c, const Directions& n) {
  const Directions h = local_fields(g, c, n);
  Directions rate(n.rows(), 3);
  for (Eigen::Index i = 0; i < n.rows(); ++i) {
    const Eigen::Vector3d ni = n.row(i).transpose();
    const Eigen::Vector3d hi = h.row(i).transpose();
    rate.row(i) = ni.cross(hi).transpose();
  }
  return rate;
}

double stationarity_test(const MolecularGraph& g, const CouplingModel& c, const Directions& n) {
  require_unit_rows(n);
  return precession_rate(g, c, n).rowwise().norm().maxCoeff();
}

namespace {

double max_norm_error(const Directions& n) {
  return (n.rowwise().norm().array() - 1.0).abs().maxCoeff();
}

double max_weighted_degree(const MolecularGraph& g, const CouplingModel& c) {
  double best = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    double sum = 0.0;
    for (int k : g.neighbors(i)) sum += g.weight(i, k, c);
    best = std::max(best, sum);
  }
  return best;
}

// Energy without the unit-vector precondition, so drift is measurable.
double raw_energy(const MolecularGraph& g, const CouplingModel& c, const Directions& n) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += c.weight(e.cls) * n.row(e.a).dot(n.row(e.b));
  return c.scale() * sum;
}

}  // namespace

TrajectoryState integrate(const MolecularGraph& g, const CouplingModel& c, const Directions& initial,
                          const IntegratorConfig& cfg) {
  if (initial.rows() != g.size()) throw DomainError("initial state does not match the graph");
  require_unit_rows(initial);
  if (!(cfg.dt > 0.0)) throw DomainError("dt must be positive");
  if (!(cfg.t_end >= cfg.dt)) throw DomainError("t_end must be at least dt");
  if (cfg.sample_every < 1) throw DomainError("sample_every must be at least 1");
  const double limit = 0.1 / std::max(1.0, max_weighted_degree(g, c));
  if (cfg.dt > limit)
    throw DomainError("dt " + std::to_string(cfg.dt) + " exceeds the stability limit " +
                      std::to_string(limit));

  const auto steps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
  const double e0 = raw_energy(g, c, initial);
  const Eigen::RowVector3d m0 = initial.colwise().sum();

  TrajectoryState tr;
  Directions n = initial;
  auto record = [&](int step) {
    const Eigen::RowVector3d m = n.colwise().sum();
    tr.times.push_back(step * cfg.dt);
    tr.snapshots.push_back(n);
    tr.energy_series.push_back(raw_energy(g, c, n));
    tr.total_moment_series.push_back(m.norm());
    tr.norm_drift_series.push_back(max_norm_error(n));
  };
  record(0);

  // Compensated accumulation of the RK4 increments keeps round-off from
  // masking the truncation error at small dt.
  Directions carry = Directions::Zero(n.rows(), 3);
  const double dt = cfg.dt;
  for (int step = 1; step <= steps; ++step) {
    const Directions k1 = precession_rate(g, c, n);
    const Directions k2 = precession_rate(g, c, n + 0.5 * dt * k1);
    const Directions k3 = precession_rate(g, c, n + 0.5 * dt * k2);
    const Directions k4 = precession_rate(g, c, n + dt * k3);
    const Directions increment = (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4) - carry;
    const Directions next = n + increment;
    carry = (next - n) - increment;
    n = next;
    if (cfg.renormalize) {
      n.rowwise().normalize();
      carry.setZero();
    }

    tr.norm_drift = std::max(tr.norm_drift, max_norm_error(n));
    tr.max_energy_drift = std::max(tr.max_energy_drift, std::abs(raw_energy(g, c, n) - e0));
    tr.max_moment_drift =
        std::max(tr.max_moment_drift, (Eigen::RowVector3d(n.colwise().sum()) - m0).norm());
    tr.max_displacement =
        std::max(tr.max_displacement, (n - initial).rowwise().norm().maxCoeff());
    if (step % cfg.sample_every == 0 || step == steps) record(step);
  }
  tr.steps = steps;
  return tr;
}

}  // namespace frustra
