#pragma once

#include "frustra/coupling.hpp"
#include "frustra/graph.hpp"
#include "frustra/types.hpp"

#include <vector>

namespace frustra {

// Time is measured in units of 1/(J S^2), so the precession equation reads
// dn_i/dt = n_i x h_i with h_i the weighted sum of neighbour directions.

struct IntegratorConfig {
  double t_end = 10.0;
  double dt = 1e-3;
  int sample_every = 100;      // steps between recorded samples
  bool renormalize = false;    // project back to unit length after each step
};

struct TrajectoryState {
  std::vector<double> times;
  std::vector<Directions> snapshots;
  std::vector<double> energy_series;
  std::vector<double> total_moment_series;  // |sum_i n_i|
  std::vector<double> norm_drift_series;    // max_i ||n_i| - 1| at each sample

  // Maxima over every integration step, not just the samples.
  double norm_drift = 0.0;
  double max_energy_drift = 0.0;          // max_t |E(t) - E(0)|
  double max_moment_drift = 0.0;          // max_t |M(t) - M(0)|, vector difference
  double max_displacement = 0.0;          // max_{t,i} |n_i(t) - n_i(0)|
  int steps = 0;
};

/// Classic fourth-order Runge-Kutta on the precession equations.
/// Throws DomainError for non-unit initial rows, dt <= 0, t_end < dt, or
/// dt * max_i sum_k w_ik > 0.1.
TrajectoryState integrate(const MolecularGraph& g, const CouplingModel& c, const Directions& initial,
                          const IntegratorConfig& cfg);

/// Right-hand side n_i x h_i.
Directions precession_rate(const MolecularGraph& g, const CouplingModel& c, const Directions& n);

/// max_i |n_i x h_i|: the instantaneous angular speed of the fastest spin.
double stationarity_test(const MolecularGraph& g, const CouplingModel& c, const Directions& n);

}  // namespace frustra
