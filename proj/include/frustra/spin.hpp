#pragma once

#include "frustra/coupling.hpp"
#include "frustra/eigen_solver.hpp"
#include "frustra/graph.hpp"
#include "frustra/types.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace frustra {

/// Unit spin direction per site with derived quantities.
struct SpinConfiguration {
  Directions directions;
  double energy = 0.0;                  // units of energy (J S^2 included)
  double stationarity_residual = 0.0;   // max_i |h_i - lambda_i n_i|
  VectorX<double> lambda_site;          // lambda_i = n_i . h_i
};

/// Result of the eigenvector construction.
struct SpectralGroundState {
  SpinConfiguration state;
  double lambda_min = 0.0;
  int multiplicity = 0;
  // max_i |sum_a u_a(i)^2 - m/N| before scaling
  double norm_profile_deviation = 0.0;
  // J S^2 N lambda_min, the convention without the 1/2 pair prefactor
  double energy_without_half = 0.0;
};

/// Throws DomainError unless every row is a unit vector within `tolerance`.
template <typename Derived>
void require_unit_rows(const Eigen::MatrixBase<Derived>& dirs, double tolerance = 1e-6) {
  for (Eigen::Index i = 0; i < dirs.rows(); ++i) {
    const double len = static_cast<double>(dirs.row(i).norm());
    if (!(std::abs(len - 1.0) <= tolerance))
      throw DomainError("direction " + std::to_string(i) + " is not a unit vector (|n| = " +
                        std::to_string(len) + ")");
  }
}

/// h_i = sum over neighbours k of w_ik n_k.
template <typename Derived>
Rows3<typename Derived::Scalar> local_fields(const MolecularGraph& g, const CouplingModel& c,
                                             const Eigen::MatrixBase<Derived>& dirs) {
  using Scalar = typename Derived::Scalar;
  Rows3<Scalar> h = Rows3<Scalar>::Zero(dirs.rows(), 3);
  for (const Edge& e : g.edges()) {
    const auto w = static_cast<Scalar>(c.weight(e.cls));
    h.row(e.a) += w * dirs.row(e.b);
    h.row(e.b) += w * dirs.row(e.a);
  }
  return h;
}

/// Exchange energy (J S^2 / 2) sum_i sum_{k_i} w n_i . n_{k_i}, evaluated as
/// J S^2 times the sum over bonds. Rows must be unit vectors within 1e-6.
template <typename Derived>
typename Derived::Scalar energy(const MolecularGraph& g, const CouplingModel& c,
                                const Eigen::MatrixBase<Derived>& dirs) {
  using Scalar = typename Derived::Scalar;
  if (dirs.rows() != g.size()) throw DomainError("direction count does not match the graph");
  require_unit_rows(dirs);
  Scalar sum = 0;
  for (const Edge& e : g.edges())
    sum += static_cast<Scalar>(c.weight(e.cls)) * dirs.row(e.a).dot(dirs.row(e.b));
  return static_cast<Scalar>(c.scale()) * sum;
}

/// -(J S^2 / 2) sum_i sum_{k_i} w: every bond perfectly antiparallel.
double hypothetical_minimum(const MolecularGraph& g, const CouplingModel& c);

/// (J S^2 / 2) N lambda_min(L). No unit-vector configuration goes below it.
double spectral_bound(const MolecularGraph& g, const CouplingModel& c);

/// Fill energy, per-site lambda and the residual for the given directions.
SpinConfiguration make_configuration(const MolecularGraph& g, const CouplingModel& c,
                                     Directions dirs);

/// Ground state assembled from the bottom eigenspace of the neighbour matrix.
///
/// With an orthonormal basis u_1..u_m (m <= 3) of that eigenspace, site i
/// gets n_i = sqrt(N/m) (u_1(i), .., u_m(i), 0, ..). This is a field of unit
/// vectors only when sum_a u_a(i)^2 = m/N for every i, which is checked to
/// 1e-9. Throws DegeneracyError if m > 3 and NormProfileError if the row
/// norms are not constant.
SpectralGroundState ground_state(const MolecularGraph& g, const CouplingModel& c);

struct FaceFrustration {
  std::vector<int> vertices;
  double mean_dot = 0.0;
};

struct FrustrationReport {
  std::vector<double> edge_dots;           // in edge order
  std::vector<int> dot_histogram;          // 20 equal bins over [-1, 1]
  std::vector<FaceFrustration> faces;      // empty if the graph has no polyhedral embedding
  std::map<int, double> mean_dot_by_face_size;
  double energy = 0.0;
  double hypothetical_min = 0.0;
  double gap_ratio = 0.0;                  // (E - E_hyp) / |E_hyp|
};

FrustrationReport frustration_report(const MolecularGraph& g, const CouplingModel& c,
                                     const SpinConfiguration& config);

struct Sublattice {
  std::vector<int> members;
  Eigen::Vector3d net_moment = Eigen::Vector3d::Zero();
};

struct SublatticeReport {
  std::vector<Sublattice> clusters;
  Eigen::Vector3d total_moment = Eigen::Vector3d::Zero();
  double total_moment_norm = 0.0;
};

/// Greedy angular clustering: each spin joins the first cluster whose seed
/// direction lies within `threshold_degrees`, otherwise starts a new one.
SublatticeReport sublattice_decomposition(const Directions& dirs, double threshold_degrees = 10.0);

}  // namespace frustra
