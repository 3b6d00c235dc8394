#include "frustra/anisotropy.hpp"

#include <algorithm>
#include <cmath>

namespace frustra {

namespace {

void check_delta(double delta) {
  if (!(std::abs(delta) < 0.5))
    throw DomainError("anisotropy delta " + std::to_string(delta) + " outside (-0.5, 0.5)");
}

constexpr int kBottomDim = 3;

}  // namespace

EigenSystem<double> weighted_spectrum(const MolecularGraph& g, double delta) {
  check_delta(delta);
  return solve_symmetric(neighbor_matrix(g, CouplingModel::with_anisotropy(delta)));
}

AnisotropyPoint state_overlap(const MolecularGraph& g, double delta) {
  check_delta(delta);
  if (g.size() < kBottomDim) throw DomainError("graph too small for a three-dimensional bottom space");
  const auto reference = weighted_spectrum(g, 0.0);
  const auto perturbed = weighted_spectrum(g, delta);

  const MatrixX<double> u0 = reference.eigenvectors.leftCols(kBottomDim);
  const MatrixX<double> u1 = perturbed.eigenvectors.leftCols(kBottomDim);
  const Eigen::JacobiSVD<MatrixX<double>> svd(u0.transpose() * u1);
  const auto cosines = svd.singularValues();

  AnisotropyPoint p;
  p.delta = delta;
  p.lambda_min = perturbed.eigenvalues(0);
  p.splitting = perturbed.eigenvalues(kBottomDim - 1) - perturbed.eigenvalues(0);
  p.overlap = std::clamp(cosines.prod(), 0.0, 1.0);
  p.split = perturbed.groups.front().multiplicity < kBottomDim;
  return p;
}

std::vector<AnisotropyPoint> anisotropy_sweep(const MolecularGraph& g, double from, double to,
                                              int count) {
  if (count < 1) throw DomainError("sweep needs at least one point");
  std::vector<AnisotropyPoint> out;
  for (int k = 0; k < count; ++k) {
    const double delta = count == 1 ? from : from + (to - from) * k / (count - 1);
    out.push_back(state_overlap(g, delta));
  }
  return out;
}

}  // namespace frustra
