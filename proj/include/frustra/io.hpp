#pragma once

#include "frustra/anisotropy.hpp"
#include "frustra/dynamics.hpp"
#include "frustra/graph.hpp"
#include "frustra/spin.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace frustra::io {

// Graph document: {"n", "coords", "edges", "bond_class"}, 0-based indices.
nlohmann::json graph_to_json(const MolecularGraph& g);
MolecularGraph graph_from_json(const nlohmann::json& doc);
MolecularGraph read_graph(const std::filesystem::path& path);

struct SolveSummary {
  double lambda_min = 0.0;
  int multiplicity = 0;
  double energy_half_convention = 0.0;   // (J S^2 / 2) N lambda_min
  double energy_paper_convention = 0.0;  // J S^2 N lambda_min
  double bound = 0.0;                    // spectral lower bound
  double hypothetical_min = 0.0;
  double gap_ratio = 0.0;
  double residual = 0.0;
};

SolveSummary summarize(const MolecularGraph& g, const CouplingModel& c,
                       const SpectralGroundState& gs);
nlohmann::json to_json(const SolveSummary& s);

// Text output. Numbers are written with %.17g so runs
// with equal inputs produce identical bytes.
std::string format_number(double x);

/// `index,x,y,z,nx,ny,nz`
void write_spin_csv(std::ostream& out, const MolecularGraph& g, const Directions& dirs);

/// `t,energy,norm_drift,total_moment`
void write_trajectory_csv(std::ostream& out, const TrajectoryState& tr);

/// `delta,lambda_min,splitting,overlap`
void write_anisotropy_csv(std::ostream& out, const std::vector<AnisotropyPoint>& sweep);

/// Legacy VTK polydata: atoms as points, bonds as lines, spins as a point
/// vector field named "spin".
void write_vtk(std::ostream& out, const MolecularGraph& g, const Directions& dirs);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace frustra::io
