#include "frustra/spin.hpp"

#include <algorithm>
#include <numbers>

namespace frustra {

double hypothetical_minimum(const MolecularGraph& g, const CouplingModel& c) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += c.weight(e.cls);
  return -c.scale() * sum;
}

double spectral_bound(const MolecularGraph& g, const CouplingModel& c) {
  const auto es = solve_symmetric(neighbor_matrix(g, c));
  return 0.5 * c.scale() * g.size() * es.eigenvalues(0);
}

SpinConfiguration make_configuration(const MolecularGraph& g, const CouplingModel& c,
                                     Directions dirs) {
  SpinConfiguration out;
  out.energy = energy(g, c, dirs);
  const Directions h = local_fields(g, c, dirs);
  out.lambda_site = (h.array() * dirs.array()).rowwise().sum();
  double residual = 0.0;
  for (Eigen::Index i = 0; i < dirs.rows(); ++i)
    residual = std::max(residual, (h.row(i) - out.lambda_site(i) * dirs.row(i)).norm());
  out.stationarity_residual = residual;
  out.directions = std::move(dirs);
  return out;
}

SpectralGroundState ground_state(const MolecularGraph& g, const CouplingModel& c) {
  const int n = g.size();
  const auto es = solve_symmetric(neighbor_matrix(g, c));
  const auto bottom = lowest_group(es);
  const int m = bottom.multiplicity;
  if (m > 3)
    throw DegeneracyError("bottom eigenspace has multiplicity " + std::to_string(m) +
                          "; it cannot be embedded into three spin components");

  // Row norms of the eigenspace basis must all equal m/N.
  const VectorX<double> profile = bottom.basis.rowwise().squaredNorm();
  const double expected = static_cast<double>(m) / n;
  const double deviation = (profile.array() - expected).abs().maxCoeff();
  if (deviation > 1e-9) {
    const double variance = (profile.array() - profile.mean()).square().mean();
    throw NormProfileError("per-site norms of the bottom eigenspace are not constant (max "
                           "deviation " + std::to_string(deviation) + ", variance " +
                           std::to_string(variance) + ")",
                           deviation, variance);
  }

  Directions dirs = Directions::Zero(n, 3);
  dirs.leftCols(m) = std::sqrt(static_cast<double>(n) / m) * bottom.basis;
  require_unit_rows(dirs, 1e-9);

  SpectralGroundState out;
  out.lambda_min = bottom.value;
  out.multiplicity = m;
  out.norm_profile_deviation = deviation;
  out.energy_without_half = c.scale() * n * bottom.value;
  out.state = make_configuration(g, c, std::move(dirs));

  // Stationarity against the common eigenvalue rather than per-site lambdas.
  const Directions h = local_fields(g, c, out.state.directions);
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    residual = std::max(residual, (h.row(i) - bottom.value * out.state.directions.row(i)).norm());
  out.state.stationarity_residual = residual;
  return out;
}

FrustrationReport frustration_report(const MolecularGraph& g, const CouplingModel& c,
                                     const SpinConfiguration& config) {
  constexpr int kBins = 20;
  const Directions& n = config.directions;
  FrustrationReport r;
  r.dot_histogram.assign(kBins, 0);
  for (const Edge& e : g.edges()) {
    const double d = n.row(e.a).dot(n.row(e.b));
    r.edge_dots.push_back(d);
    const int bin = std::clamp(static_cast<int>((d + 1.0) / 2.0 * kBins), 0, kBins - 1);
    ++r.dot_histogram[bin];
  }

  std::vector<std::vector<int>> faces;
  try {
    faces = trace_faces(g);
  } catch (const StructuralError&) {
    faces.clear();
  }
  std::map<int, std::pair<double, int>> by_size;
  for (auto& f : faces) {
    double sum = 0.0;
    const auto len = f.size();
    for (std::size_t k = 0; k < len; ++k) sum += n.row(f[k]).dot(n.row(f[(k + 1) % len]));
    const double mean = sum / static_cast<double>(len);
    auto& acc = by_size[static_cast<int>(len)];
    acc.first += mean;
    acc.second += 1;
    r.faces.push_back({std::move(f), mean});
  }
  for (const auto& [len, acc] : by_size) r.mean_dot_by_face_size[len] = acc.first / acc.second;

  r.energy = config.energy;
  r.hypothetical_min = hypothetical_minimum(g, c);
  r.gap_ratio = (r.energy - r.hypothetical_min) / std::abs(r.hypothetical_min);
  return r;
}

SublatticeReport sublattice_decomposition(const Directions& dirs, double threshold_degrees) {
  const double cos_threshold = std::cos(threshold_degrees * std::numbers::pi / 180.0);
  SublatticeReport r;
  std::vector<Eigen::Vector3d> seeds;
  for (Eigen::Index i = 0; i < dirs.rows(); ++i) {
    const Eigen::Vector3d d = dirs.row(i).transpose();
    std::size_t k = 0;
    while (k < seeds.size() && seeds[k].dot(d) < cos_threshold) ++k;
    if (k == seeds.size()) {
      seeds.push_back(d);
      r.clusters.emplace_back();
    }
    r.clusters[k].members.push_back(static_cast<int>(i));
    r.clusters[k].net_moment += d;
    r.total_moment += d;
  }
  r.total_moment_norm = r.total_moment.norm();
  return r;
}

}  // namespace frustra
