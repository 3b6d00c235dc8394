#pragma once

#include "frustra/coupling.hpp"
#include "frustra/graph.hpp"
#include "frustra/spin.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frustra {

enum class StepSchedule { Fixed, Backtracking };

struct OptimizerConfig {
  int restarts = 20;
  int max_iters = 50000;
  double step = 0.2;          // initial step, in units of 1/(J S^2)
  double tol_grad = 1e-10;    // on max_i |projected gradient_i| / (J S^2)
  std::uint64_t seed = 7;
  StepSchedule schedule = StepSchedule::Backtracking;
  int threads = 0;            // 0 = hardware concurrency

  void validate() const;
};

enum class Certification { CertifiedGlobal, LocalOnly };

std::string to_string(Certification c);

struct DescentResult {
  Directions directions;
  double energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct RestartSummary {
  int restart = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct OptimizeResult {
  SpinConfiguration state;
  int best_restart = 0;
  bool converged = false;   // best restart met tol_grad
  Certification certification = Certification::LocalOnly;
  double bound = 0.0;       // spectral lower bound used for certification
  std::vector<RestartSummary> restarts;
};

/// Projected gradient descent on the product of unit spheres from `initial`.
DescentResult descend(const MolecularGraph& g, const CouplingModel& c, const Directions& initial,
                      const OptimizerConfig& cfg);

/// Uniformly random unit vectors, reproducible from (seed, stream).
Directions random_directions(int n, std::uint64_t seed, std::uint64_t stream = 0);

/// Best of cfg.restarts seeded descents, chosen by (energy, restart index).
/// Restarts run concurrently; the result does not depend on scheduling.
/// A run where no restart converges still returns the best state found, with
/// `converged` false and certification LocalOnly.
OptimizeResult minimize(const MolecularGraph& g, const CouplingModel& c, const OptimizerConfig& cfg);

/// CertifiedGlobal iff the energy is within 1e-6 |bound| of the spectral bound.
Certification certify(const SpinConfiguration& config, const MolecularGraph& g,
                      const CouplingModel& c);

}  // namespace frustra
