#pragma once

#include "frustra/eigen_solver.hpp"
#include "frustra/graph.hpp"

#include <vector>

namespace frustra {

// delta is the relative coupling excess of double bonds over single bonds,
// (J_double - J_single) / J_single. Valid range |delta| < 0.5.

/// Spectrum of the neighbour matrix with double bonds weighted 1 + delta.
EigenSystem<double> weighted_spectrum(const MolecularGraph& g, double delta);

struct AnisotropyPoint {
  double delta = 0.0;
  double lambda_min = 0.0;
  double splitting = 0.0;  // lambda_2 - lambda_0 of the perturbed spectrum
  double overlap = 1.0;    // product of principal-angle cosines, in [0, 1]
  bool split = false;      // perturbed bottom group has multiplicity < 3
};

/// Compares the bottom three-dimensional eigenspace at delta with the one at
/// delta = 0. When the perturbed bottom group is no longer triply degenerate,
/// the three lowest eigenvectors are used and `split` is set.
AnisotropyPoint state_overlap(const MolecularGraph& g, double delta);

/// state_overlap over [from, to] in `count` evenly spaced points.
std::vector<AnisotropyPoint> anisotropy_sweep(const MolecularGraph& g, double from, double to,
                                              int count);

}  // namespace frustra
