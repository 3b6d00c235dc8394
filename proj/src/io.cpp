#include "frustra/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace frustra::io {

nlohmann::json graph_to_json(const MolecularGraph& g) {
  nlohmann::json coords = nlohmann::json::array();
  for (int i = 0; i < g.size(); ++i) {
    const auto& x = g.coordinates();
    coords.push_back({x(i, 0), x(i, 1), x(i, 2)});
  }
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json classes = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.a, e.b});
    classes.push_back(to_string(e.cls));
  }
  return {{"n", g.size()}, {"coords", coords}, {"edges", edges}, {"bond_class", classes}};
}

MolecularGraph graph_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const auto& coords = doc.at("coords");
    const auto& edges = doc.at("edges");
    if (n < 0 || static_cast<int>(coords.size()) != n)
      throw StructuralError("graph document: coords length does not match n");
    Coordinates x(n, 3);
    for (int i = 0; i < n; ++i) {
      const auto& p = coords.at(i);
      if (p.size() != 3) throw StructuralError("graph document: coordinate must have 3 entries");
      for (int k = 0; k < 3; ++k) x(i, k) = p.at(k).get<double>();
    }
    std::vector<Edge> list;
    const bool has_classes = doc.contains("bond_class");
    if (has_classes && doc.at("bond_class").size() != edges.size())
      throw StructuralError("graph document: bond_class length does not match edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges.at(k);
      if (e.size() != 2) throw StructuralError("graph document: edge must have 2 entries");
      const BondClass cls = has_classes
                                ? bond_class_from_string(doc.at("bond_class").at(k).get<std::string>())
                                : BondClass::Uniform;
      list.push_back({e.at(0).get<int>(), e.at(1).get<int>(), cls});
    }
    return MolecularGraph(std::move(x), std::move(list));
  } catch (const nlohmann::json::exception& ex) {
    throw StructuralError(std::string("graph document: ") + ex.what());
  }
}

MolecularGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw StructuralError(path.string() + ": " + ex.what());
  }
  return graph_from_json(doc);
}

SolveSummary summarize(const MolecularGraph& g, const CouplingModel& c,
                       const SpectralGroundState& gs) {
  SolveSummary s;
  s.lambda_min = gs.lambda_min;
  s.multiplicity = gs.multiplicity;
  s.energy_half_convention = gs.state.energy;
  s.energy_paper_convention = gs.energy_without_half;
  s.bound = 0.5 * c.scale() * g.size() * gs.lambda_min;
  s.hypothetical_min = hypothetical_minimum(g, c);
  s.gap_ratio = (s.energy_half_convention - s.hypothetical_min) / std::abs(s.hypothetical_min);
  s.residual = gs.state.stationarity_residual;
  return s;
}

nlohmann::json to_json(const SolveSummary& s) {
  return {{"lambda_min", s.lambda_min},
          {"multiplicity", s.multiplicity},
          {"energy", s.energy_half_convention},
          {"energy_half_convention", s.energy_half_convention},
          {"energy_paper_convention", s.energy_paper_convention},
          {"bound", s.bound},
          {"hypothetical_min", s.hypothetical_min},
          {"gap_ratio", s.gap_ratio},
          {"residual", s.residual}};
}

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_spin_csv(std::ostream& out, const MolecularGraph& g, const Directions& dirs) {
  if (dirs.rows() != g.size()) throw DomainError("direction count does not match the graph");
  out << "index,x,y,z,nx,ny,nz\n";
  const auto& x = g.coordinates();
  for (int i = 0; i < g.size(); ++i) {
    out << i;
    for (int k = 0; k < 3; ++k) out << ',' << format_number(x(i, k));
    for (int k = 0; k < 3; ++k) out << ',' << format_number(dirs(i, k));
    out << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const TrajectoryState& tr) {
  out << "t,energy,norm_drift,total_moment\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    out << format_number(tr.times[k]) << ',' << format_number(tr.energy_series[k]) << ','
        << format_number(tr.norm_drift_series[k]) << ','
        << format_number(tr.total_moment_series[k]) << '\n';
  }
}

void write_anisotropy_csv(std::ostream& out, const std::vector<AnisotropyPoint>& sweep) {
  out << "delta,lambda_min,splitting,overlap\n";
  for (const auto& p : sweep) {
    out << format_number(p.delta) << ',' << format_number(p.lambda_min) << ','
        << format_number(p.splitting) << ',' << format_number(p.overlap) << '\n';
  }
}

void write_vtk(std::ostream& out, const MolecularGraph& g, const Directions& dirs) {
  if (dirs.rows() != g.size()) throw DomainError("direction count does not match the graph");
  const auto& x = g.coordinates();
  out << "# vtk DataFile Version 3.0\n"
      << "spin directions\n"
      << "ASCII\n"
      << "DATASET POLYDATA\n"
      << "POINTS " << g.size() << " double\n";
  for (int i = 0; i < g.size(); ++i)
    out << format_number(x(i, 0)) << ' ' << format_number(x(i, 1)) << ' '
        << format_number(x(i, 2)) << '\n';
  out << "LINES " << g.edge_count() << ' ' << 3 * g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "2 " << e.a << ' ' << e.b << '\n';
  out << "POINT_DATA " << g.size() << '\n' << "VECTORS spin double\n";
  for (int i = 0; i < g.size(); ++i)
    out << format_number(dirs(i, 0)) << ' ' << format_number(dirs(i, 1)) << ' '
        << format_number(dirs(i, 2)) << '\n';
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace frustra::io
