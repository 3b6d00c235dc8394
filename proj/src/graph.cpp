#include "frustra/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>

namespace frustra {

std::string to_string(BondClass cls) {
  switch (cls) {
    case BondClass::Single: return "single";
    case BondClass::Double: return "double";
    case BondClass::Uniform: return "uniform";
  }
  return "uniform";
}

BondClass bond_class_from_string(const std::string& name) {
  if (name == "single") return BondClass::Single;
  if (name == "double") return BondClass::Double;
  if (name == "uniform") return BondClass::Uniform;
  throw DomainError("unknown bond class '" + name + "'");
}

MolecularGraph::MolecularGraph(Coordinates coords, std::vector<Edge> edges)
    : coords_(std::move(coords)), edges_(std::move(edges)) {
  const int n = size();
  neighbors_.assign(n, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    Edge& e = edges_[k];
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n)
      throw StructuralError("edge index out of range");
    if (e.a == e.b) throw StructuralError("self-loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!edge_lookup_.emplace(std::make_pair(e.a, e.b), static_cast<int>(k)).second)
      throw StructuralError("duplicate edge {" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                            "}");
    neighbors_[e.a].push_back(e.b);
    neighbors_[e.b].push_back(e.a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  if (!is_connected(*this)) throw StructuralError("graph is not connected");
}

int MolecularGraph::max_degree() const {
  int d = 0;
  for (const auto& nb : neighbors_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

int MolecularGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = edge_lookup_.find({u, v});
  return it == edge_lookup_.end() ? -1 : it->second;
}

double MolecularGraph::weight(int u, int v, const CouplingModel& c) const {
  const int k = edge_index(u, v);
  return k < 0 ? 0.0 : c.weight(edges_[k].cls);
}

std::vector<double> MolecularGraph::edge_lengths() const {
  std::vector<double> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back((coords_.row(e.a) - coords_.row(e.b)).norm());
  return out;
}

bool is_connected(const MolecularGraph& g) {
  const int n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int reached = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == n;
}

namespace {

constexpr double kCoordTie = 1e-9;

bool coord_less(const Eigen::RowVector3d& p, const Eigen::RowVector3d& q) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(p(k) - q(k)) > kCoordTie) return p(k) < q(k);
  }
  return false;
}

Coordinates sorted_lexicographically(const std::vector<Eigen::RowVector3d>& points) {
  std::vector<Eigen::RowVector3d> pts = points;
  std::sort(pts.begin(), pts.end(), coord_less);
  Coordinates out(static_cast<Eigen::Index>(pts.size()), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

// Bonds are all pairs closer than 1.2 x the minimum inter-vertex distance.
std::vector<Edge> detect_bonds(const Coordinates& coords) {
  const auto n = coords.rows();
  double dmin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      dmin = std::min(dmin, (coords.row(i) - coords.row(j)).norm());
  const double cutoff = 1.2 * dmin;
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if ((coords.row(i) - coords.row(j)).norm() <= cutoff)
        edges.push_back({static_cast<int>(i), static_cast<int>(j), BondClass::Uniform});
  return edges;
}

std::vector<Eigen::RowVector3d> icosahedron_vertices() {
  const double phi = std::numbers::phi;
  std::vector<Eigen::RowVector3d> v;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      v.emplace_back(0.0, a, b);
      v.emplace_back(a, b, 0.0);
      v.emplace_back(b, 0.0, a);
    }
  }
  return v;
}

// Ratio of hexagon-hexagon to pentagon bond length in the distorted geometry.
constexpr double kJahnTellerRatio = 1.40 / 1.45;

// Cuts every icosahedron edge at fraction t from each end. Pentagon bonds have
// length 2t, hexagon-hexagon bonds 2(1 - 2t); output is scaled to unit
// pentagon bonds.
std::vector<Eigen::RowVector3d> truncated_icosahedron(double t) {
  const auto ico = icosahedron_vertices();
  std::vector<Eigen::RowVector3d> pts;
  for (std::size_t i = 0; i < ico.size(); ++i) {
    for (std::size_t j = 0; j < ico.size(); ++j) {
      if (i == j) continue;
      if (std::abs((ico[i] - ico[j]).norm() - 2.0) > 1e-9) continue;
      pts.push_back((ico[i] + t * (ico[j] - ico[i])) / (2.0 * t));
    }
  }
  return pts;
}

// Unit tangent frame at a vertex whose outward normal is `normal`.
std::pair<Eigen::Vector3d, Eigen::Vector3d> tangent_frame(const Eigen::Vector3d& normal) {
  const Eigen::Vector3d helper =
      std::abs(normal.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  Eigen::Vector3d e1 = (helper - helper.dot(normal) * normal).normalized();
  Eigen::Vector3d e2 = normal.cross(e1);
  return {e1, e2};
}

// Dart id: 2 * edge index + (0 if traversed a->b, 1 if b->a).
int dart_id(const MolecularGraph& g, int from, int to) {
  const int k = g.edge_index(from, to);
  return 2 * k + (from < to ? 0 : 1);
}

struct FaceTracing {
  std::vector<std::vector<int>> faces;
  std::vector<int> dart_face;
};

FaceTracing trace(const MolecularGraph& g) {
  const int n = g.size();
  const Coordinates& x = g.coordinates();
  const Eigen::RowVector3d centroid = x.colwise().mean();

  // Neighbours of every vertex in counter-clockwise order seen from outside.
  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    const Eigen::Vector3d radial = (x.row(v) - centroid).transpose();
    if (radial.norm() < 1e-12)
      throw StructuralError("vertex at the centroid; embedding is not polyhedral");
    const auto [e1, e2] = tangent_frame(radial.normalized());
    std::vector<std::pair<double, int>> by_angle;
    for (int w : g.neighbors(v)) {
      const Eigen::Vector3d d = (x.row(w) - x.row(v)).transpose();
      by_angle.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), w);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, w] : by_angle) rotation[v].push_back(w);
  }

  FaceTracing out;
  out.dart_face.assign(2 * static_cast<std::size_t>(g.edge_count()), -1);
  for (const Edge& e : g.edges()) {
    for (auto [u0, v0] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      if (out.dart_face[dart_id(g, u0, v0)] >= 0) continue;
      const int face = static_cast<int>(out.faces.size());
      std::vector<int> cycle;
      int u = u0;
      int v = v0;
      while (out.dart_face[dart_id(g, u, v)] < 0) {
        out.dart_face[dart_id(g, u, v)] = face;
        cycle.push_back(u);
        const auto& rot = rotation[v];
        const auto pos = std::find(rot.begin(), rot.end(), u) - rot.begin();
        const int w = rot[(pos + 1) % rot.size()];
        u = v;
        v = w;
      }
      if (u != u0 || v != v0) throw StructuralError("inconsistent rotation system");
      out.faces.push_back(std::move(cycle));
    }
  }

  const int euler = g.size() - g.edge_count() + static_cast<int>(out.faces.size());
  if (euler != 2)
    throw StructuralError("embedding is not polyhedral (V - E + F = " + std::to_string(euler) +
                          ")");
  return out;
}

}  // namespace

std::vector<std::vector<int>> trace_faces(const MolecularGraph& g) { return trace(g).faces; }

std::map<int, int> face_census(const MolecularGraph& g) {
  std::map<int, int> census;
  for (const auto& f : trace_faces(g)) ++census[static_cast<int>(f.size())];
  return census;
}

void validate_c60(const MolecularGraph& g) {
  if (g.size() != 60) throw StructuralError("C60 must have 60 vertices");
  if (g.edge_count() != 90) throw StructuralError("C60 must have 90 edges");
  std::vector<int> doubles(60, 0);
  int n_double = 0;
  for (const Edge& e : g.edges()) {
    if (e.cls == BondClass::Double) {
      ++n_double;
      ++doubles[e.a];
      ++doubles[e.b];
    }
  }
  for (int v = 0; v < 60; ++v) {
    if (g.degree(v) != 3)
      throw StructuralError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)));
    if (doubles[v] != 1)
      throw StructuralError("vertex " + std::to_string(v) + " touches " +
                            std::to_string(doubles[v]) + " double bonds");
  }
  if (n_double != 30) throw StructuralError("C60 must have 30 double bonds");
}

MolecularGraph build_c60(C60Geometry geometry) {
  const double t = geometry == C60Geometry::Ideal ? 1.0 / 3.0 : 1.0 / (2.0 + kJahnTellerRatio);
  Coordinates coords = sorted_lexicographically(truncated_icosahedron(t));
  MolecularGraph plain(coords, detect_bonds(coords));
  for (int v = 0; v < plain.size(); ++v) {
    if (plain.degree(v) != 3)
      throw StructuralError("C60 construction: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(plain.degree(v)));
  }

  const FaceTracing ft = trace(plain);
  std::vector<Edge> edges = plain.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& left = ft.faces[ft.dart_face[2 * k]];
    const auto& right = ft.faces[ft.dart_face[2 * k + 1]];
    edges[k].cls =
        (left.size() == 6 && right.size() == 6) ? BondClass::Double : BondClass::Single;
  }
  MolecularGraph g(std::move(coords), std::move(edges));
  validate_c60(g);
  return g;
}

MolecularGraph build_ring(int k) {
  if (k < 3) throw DomainError("ring size must be at least 3");
  const double radius = 0.5 / std::sin(std::numbers::pi / k);
  Coordinates coords(k, 3);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * i / k;
    coords.row(i) << radius * std::cos(a), radius * std::sin(a), 0.0;
    pairs.emplace_back(i, (i + 1) % k);
  }
  return from_edge_list(std::move(coords), pairs);
}

MolecularGraph build_toy(const std::string& name, int size) {
  if (name == "tetrahedron") {
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    Coordinates coords(4, 3);
    coords << s, s, s, s, -s, -s, -s, s, -s, -s, -s, s;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
    return from_edge_list(std::move(coords), pairs);
  }
  if (name == "cube") {
    std::vector<Eigen::RowVector3d> pts;
    for (double x : {-0.5, 0.5})
      for (double y : {-0.5, 0.5})
        for (double z : {-0.5, 0.5}) pts.emplace_back(x, y, z);
    Coordinates coords = sorted_lexicographically(pts);
    auto edges = detect_bonds(coords);
    return MolecularGraph(std::move(coords), std::move(edges));
  }
  if (name == "ring") return build_ring(size);
  throw DomainError("unknown toy molecule '" + name + "'");
}

MolecularGraph from_edge_list(Coordinates coords, const std::vector<std::pair<int, int>>& pairs,
                              BondClass cls) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b, cls});
  return MolecularGraph(std::move(coords), std::move(edges));
}

}  // namespace frustra
