// frustra: classical antiferromagnetic ground states on fullerene-like graphs.
//
// Exit codes: 0 ok, 1 usage error, 2 computation error.

#include "frustra/frustra.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace frustra;

namespace {

struct CommonOptions {
  std::string molecule = "c60";
  int size = 6;
  double j = 1.0;
  double s = 1.0;
  double delta = 0.0;
  std::string geometry = "ideal";
  std::string graph_file;
  std::string out;
  std::string format = "json";
};

struct DynamicsOptions {
  std::string init = "ground";
  double t_end = 10.0;
  double dt = 1e-3;
  int sample_every = 100;
  int snapshot_every = 0;
};

struct OptimizeOptions {
  int restarts = 20;
  int max_iters = 50000;
  int threads = 0;
};

struct AnisotropyOptions {
  double delta = 0.036;
  double from = -0.1;
  double to = 0.1;
  int count = 21;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_delta = true) {
  cmd->add_option("--molecule", o.molecule, "c60, tetrahedron, cube or ring")
      ->check(CLI::IsMember({"c60", "tetrahedron", "cube", "ring"}));
  cmd->add_option("--size", o.size, "ring length")->check(CLI::Range(3, 100000));
  cmd->add_option("--j", o.j, "exchange constant J (> 0)");
  cmd->add_option("--s", o.s, "spin magnitude S (> 0)");
  if (with_delta)
    cmd->add_option("--delta", o.delta, "relative coupling excess of double bonds");
  cmd->add_option("--geometry", o.geometry, "C60 geometry")
      ->check(CLI::IsMember({"ideal", "jahn-teller"}));
  cmd->add_option("--graph", o.graph_file, "read the graph from a JSON document instead");
  cmd->add_option("--out", o.out, "output directory (default $FRUSTRA_OUT or .)");
}

MolecularGraph make_graph(const CommonOptions& o) {
  if (!o.graph_file.empty()) return io::read_graph(o.graph_file);
  if (o.molecule == "c60")
    return build_c60(o.geometry == "ideal" ? C60Geometry::Ideal : C60Geometry::JahnTeller);
  return build_toy(o.molecule, o.size);
}

CouplingModel make_coupling(const CommonOptions& o) {
  return CouplingModel(o.j, o.s, 1.0, 1.0 + o.delta);
}

fs::path out_dir(const CommonOptions& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv("FRUSTRA_OUT"); env != nullptr && *env != '\0') return env;
  return ".";
}

std::string spin_csv(const MolecularGraph& g, const Directions& d) {
  std::ostringstream s;
  io::write_spin_csv(s, g, d);
  return s.str();
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_solve(const CommonOptions& o) {
  const auto g = make_graph(o);
  const auto c = make_coupling(o);
  const auto gs = ground_state(g, c);
  const auto summary = io::to_json(io::summarize(g, c, gs));
  const fs::path dir = out_dir(o);
  io::write_text_file(dir / "spins.csv", spin_csv(g, gs.state.directions));
  io::write_text_file(dir / "summary.json", summary.dump(2) + "\n");
  emit(summary);
  return 0;
}

// Spectral construction, falling back to the optimizer when the bottom
// eigenspace cannot be closed into unit vectors.
SpinConfiguration best_state(const MolecularGraph& g, const CouplingModel& c, std::uint64_t seed) {
  try {
    return ground_state(g, c).state;
  } catch (const DegeneracyError&) {
  } catch (const NormProfileError&) {
  }
  OptimizerConfig cfg;
  cfg.seed = seed;
  return minimize(g, c, cfg).state;
}

int cmd_dynamics(const CommonOptions& o, const DynamicsOptions& d, std::uint64_t seed) {
  const auto g = make_graph(o);
  const auto c = make_coupling(o);
  const Directions init =
      d.init == "ground" ? best_state(g, c, seed).directions : random_directions(g.size(), seed);

  IntegratorConfig cfg;
  cfg.t_end = d.t_end;
  cfg.dt = d.dt;
  cfg.sample_every = d.sample_every;
  const auto tr = integrate(g, c, init, cfg);

  const fs::path dir = out_dir(o);
  std::ostringstream csv;
  io::write_trajectory_csv(csv, tr);
  io::write_text_file(dir / "trajectory.csv", csv.str());
  if (d.snapshot_every > 0) {
    for (std::size_t k = 0; k < tr.snapshots.size(); k += static_cast<std::size_t>(d.snapshot_every)) {
      char name[48];
      std::snprintf(name, sizeof name, "spins_%06zu.csv", k);
      io::write_text_file(dir / "snapshots" / name, spin_csv(g, tr.snapshots[k]));
    }
  }

  const double e0 = tr.energy_series.front();
  const nlohmann::json report = {
      {"init", d.init},
      {"steps", tr.steps},
      {"dt", d.dt},
      {"t_end", d.t_end},
      {"time_unit", "1/(J S^2)"},
      {"initial_stationarity", stationarity_test(g, c, init)},
      {"max_displacement", tr.max_displacement},
      {"stationary", tr.max_displacement <= 1e-7},
      {"energy_initial", e0},
      {"max_energy_drift_relative", e0 == 0.0 ? tr.max_energy_drift : tr.max_energy_drift / std::abs(e0)},
      {"norm_drift", tr.norm_drift},
      {"max_moment_drift", tr.max_moment_drift}};
  emit(report);
  return 0;
}

int cmd_optimize(const CommonOptions& o, const OptimizeOptions& p, std::uint64_t seed) {
  const auto g = make_graph(o);
  const auto c = make_coupling(o);
  OptimizerConfig cfg;
  cfg.restarts = p.restarts;
  cfg.max_iters = p.max_iters;
  cfg.threads = p.threads;
  cfg.seed = seed;
  const auto r = minimize(g, c, cfg);
  const double hyp = hypothetical_minimum(g, c);

  nlohmann::json restarts = nlohmann::json::array();
  for (const auto& s : r.restarts)
    restarts.push_back({{"restart", s.restart},
                        {"energy", s.energy},
                        {"iterations", s.iterations},
                        {"grad_norm", s.grad_norm},
                        {"converged", s.converged}});
  const nlohmann::json report = {{"energy", r.state.energy},
                                 {"bound", r.bound},
                                 {"hypothetical_min", hyp},
                                 {"gap_ratio", (r.state.energy - hyp) / std::abs(hyp)},
                                 {"certification", to_string(r.certification)},
                                 {"converged", r.converged},
                                 {"best_restart", r.best_restart},
                                 {"residual", r.state.stationarity_residual},
                                 {"restarts", restarts}};
  const fs::path dir = out_dir(o);
  io::write_text_file(dir / "optimized_spins.csv", spin_csv(g, r.state.directions));
  io::write_text_file(dir / "optimize.json", report.dump(2) + "\n");
  emit(report);
  return 0;
}

int cmd_anisotropy(const CommonOptions& o, const AnisotropyOptions& a) {
  const auto g = make_graph(o);
  const auto point = state_overlap(g, a.delta);
  const double base = weighted_spectrum(g, 0.0).eigenvalues(0);
  const auto sweep = anisotropy_sweep(g, a.from, a.to, a.count);

  std::ostringstream csv;
  io::write_anisotropy_csv(csv, sweep);
  io::write_text_file(out_dir(o) / "anisotropy_sweep.csv", csv.str());

  emit({{"delta", point.delta},
        {"lambda_min", point.lambda_min},
        {"lambda_min_uniform", base},
        {"shift", point.lambda_min - base},
        {"splitting", point.splitting},
        {"overlap", point.overlap},
        {"split", point.split}});
  return 0;
}

int cmd_export(const CommonOptions& o, std::uint64_t seed) {
  const auto g = make_graph(o);
  const fs::path dir = out_dir(o);
  fs::path written;
  if (o.format == "json") {
    written = dir / "graph.json";
    io::write_text_file(written, io::graph_to_json(g).dump(2) + "\n");
  } else {
    const auto state = best_state(g, make_coupling(o), seed);
    std::ostringstream s;
    if (o.format == "csv") {
      written = dir / "spins.csv";
      io::write_spin_csv(s, g, state.directions);
    } else {
      written = dir / "spins.vtk";
      io::write_vtk(s, g, state.directions);
    }
    io::write_text_file(written, s.str());
  }
  emit({{"format", o.format}, {"path", written.string()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical antiferromagnetic ground states on fullerene-like graphs"};
  app.require_subcommand(1);

  CommonOptions common;
  DynamicsOptions dyn;
  OptimizeOptions opt;
  AnisotropyOptions aniso;
  std::uint64_t seed = 7;

  auto* solve = app.add_subcommand("solve", "spectral ground state and energy summary");
  add_common(solve, common);

  auto* dynamics = app.add_subcommand("dynamics", "integrate the precession equations");
  add_common(dynamics, common);
  dynamics->add_option("--init", dyn.init, "initial state")->check(CLI::IsMember({"ground", "random"}));
  dynamics->add_option("--t-end", dyn.t_end, "end time in units of 1/(J S^2)");
  dynamics->add_option("--dt", dyn.dt, "RK4 step");
  dynamics->add_option("--sample-every", dyn.sample_every, "steps between trajectory rows");
  dynamics->add_option("--snapshot-every", dyn.snapshot_every, "write every k-th sample as a spin CSV");
  dynamics->add_option("--seed", seed, "seed for --init random");

  auto* optimize = app.add_subcommand("optimize", "constrained minimisation with restarts");
  add_common(optimize, common);
  optimize->add_option("--restarts", opt.restarts)->check(CLI::PositiveNumber);
  optimize->add_option("--max-iters", opt.max_iters)->check(CLI::PositiveNumber);
  optimize->add_option("--threads", opt.threads, "0 = hardware concurrency");
  optimize->add_option("--seed", seed);

  auto* anisotropy = app.add_subcommand("anisotropy", "sensitivity to double-bond anisotropy");
  add_common(anisotropy, common, false);
  anisotropy->add_option("--delta", aniso.delta, "anisotropy to report");
  anisotropy->add_option("--sweep-from", aniso.from);
  anisotropy->add_option("--sweep-to", aniso.to);
  anisotropy->add_option("--sweep-count", aniso.count)->check(CLI::PositiveNumber);

  auto* exporter = app.add_subcommand("export", "write graph JSON, spin CSV or VTK");
  add_common(exporter, common);
  exporter->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv", "vtk"}));
  exporter->add_option("--seed", seed, "seed for the optimizer fallback");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return cmd_solve(common);
    if (*dynamics) return cmd_dynamics(common, dyn, seed);
    if (*optimize) return cmd_optimize(common, opt, seed);
    if (*anisotropy) return cmd_anisotropy(common, aniso);
    if (*exporter) return cmd_export(common, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
