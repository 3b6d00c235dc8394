#include "frustra/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <thread>

namespace frustra {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw DomainError("restarts must be at least 1");
  if (max_iters < 1) throw DomainError("max_iters must be at least 1");
  if (!(tol_grad > 0.0)) throw DomainError("tol_grad must be positive");
  if (!(step > 0.0)) throw DomainError("step must be positive");
}

std::string to_string(Certification c) {
  return c == Certification::CertifiedGlobal ? "certified_global" : "local_only";
}

namespace {

// Everything below works in reduced units (J S^2 = 1).
double reduced_energy(const MolecularGraph& g, const CouplingModel& c, const Directions& n) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += c.weight(e.cls) * n.row(e.a).dot(n.row(e.b));
  return sum;
}

// Gradient of the reduced energy with the radial part removed.
Directions projected_gradient(const MolecularGraph& g, const CouplingModel& c, const Directions& n) {
  Directions grad = local_fields(g, c, n);
  const VectorX<double> radial = (grad.array() * n.array()).rowwise().sum();
  grad -= (n.array().colwise() * radial.array()).matrix();
  return grad;
}

Directions retract(const Directions& n, const Directions& grad, double alpha) {
  Directions next = n - alpha * grad;
  next.rowwise().normalize();
  return next;
}

}  // namespace

Directions random_directions(int n, std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  Directions d(n, 3);
  for (int i = 0; i < n; ++i) {
    Eigen::RowVector3d v;
    do {
      v << normal(rng), normal(rng), normal(rng);
    } while (v.norm() < 1e-8);
    d.row(i) = v.normalized();
  }
  return d;
}

DescentResult descend(const MolecularGraph& g, const CouplingModel& c, const Directions& initial,
                      const OptimizerConfig& cfg) {
  cfg.validate();
  require_unit_rows(initial);
  constexpr double kArmijo = 1e-4;
  constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();

  DescentResult out;
  Directions n = initial;
  n.rowwise().normalize();
  double e = reduced_energy(g, c, n);
  double alpha = cfg.step;
  Directions grad = projected_gradient(g, c, n);
  double gnorm = grad.rowwise().norm().maxCoeff();

  // Monotone step for the Riemannian gradient: its Lipschitz constant is at
  // most twice the largest weighted degree.
  double max_field = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    double sum = 0.0;
    for (int k : g.neighbors(i)) sum += g.weight(i, k, c);
    max_field = std::max(max_field, sum);
  }
  const double safe_alpha = 1.0 / (2.0 * std::max(max_field, 1e-12));

  int it = 0;
  while (gnorm > cfg.tol_grad && it < cfg.max_iters) {
    ++it;
    const double slope = grad.squaredNorm();
    const double noise = kRoundoff * std::max(1.0, std::abs(e));
    Directions next;
    double e_next = 0.0;
    if (cfg.schedule == StepSchedule::Fixed) {
      next = retract(n, grad, alpha);
      e_next = reduced_energy(g, c, next);
    } else if (safe_alpha * slope < noise) {
      // Energy differences are below round-off here, so Armijo cannot judge
      // the step; fall back to the guaranteed-descent step length.
      next = retract(n, grad, safe_alpha);
      e_next = reduced_energy(g, c, next);
    } else {
      for (;;) {
        next = retract(n, grad, alpha);
        e_next = reduced_energy(g, c, next);
        if (e_next <= e - kArmijo * alpha * slope) break;
        alpha *= 0.5;
        if (alpha < 1e-12) break;
      }
      if (alpha < 1e-12) break;
    }
    n = std::move(next);
    e = e_next;
    grad = projected_gradient(g, c, n);
    gnorm = grad.rowwise().norm().maxCoeff();
    if (cfg.schedule == StepSchedule::Backtracking) alpha = std::min(alpha * 1.5, 1.0);
  }

  out.directions = std::move(n);
  out.energy = c.scale() * e;
  out.grad_norm = gnorm;
  out.iterations = it;
  out.converged = gnorm <= cfg.tol_grad;
  return out;
}

OptimizeResult minimize(const MolecularGraph& g, const CouplingModel& c,
                        const OptimizerConfig& cfg) {
  cfg.validate();
  const auto run = [&](int r) {
    return descend(g, c, random_directions(g.size(), cfg.seed, static_cast<std::uint64_t>(r)), cfg);
  };

  std::vector<DescentResult> results(static_cast<std::size_t>(cfg.restarts));
  const int threads = cfg.threads > 0
                          ? cfg.threads
                          : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  for (int begin = 0; begin < cfg.restarts; begin += threads) {
    const int end = std::min(cfg.restarts, begin + threads);
    std::vector<std::future<DescentResult>> batch;
    for (int r = begin; r < end; ++r) batch.push_back(std::async(std::launch::async, run, r));
    for (int r = begin; r < end; ++r) results[r] = batch[r - begin].get();
  }

  OptimizeResult out;
  int best = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    const auto& d = results[r];
    out.restarts.push_back({r, d.energy, d.grad_norm, d.iterations, d.converged});
    if (d.energy < results[best].energy) best = r;
  }
  out.best_restart = best;
  out.converged = results[best].converged;
  out.state = make_configuration(g, c, std::move(results[best].directions));
  out.bound = spectral_bound(g, c);
  const bool any_converged =
      std::any_of(results.begin(), results.end(), [](const auto& d) { return d.converged; });
  out.certification = any_converged ? certify(out.state, g, c) : Certification::LocalOnly;
  return out;
}

Certification certify(const SpinConfiguration& config, const MolecularGraph& g,
                      const CouplingModel& c) {
  const double bound = spectral_bound(g, c);
  return config.energy <= bound + 1e-6 * std::abs(bound) ? Certification::CertifiedGlobal
                                                         : Certification::LocalOnly;
}

}  // namespace frustra
