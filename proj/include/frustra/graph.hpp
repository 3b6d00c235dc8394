#pragma once

#include "frustra/coupling.hpp"
#include "frustra/types.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frustra {

struct Edge {
  int a = 0;  // a < b
  int b = 0;
  BondClass cls = BondClass::Uniform;
};

/// Undirected nearest-neighbour graph with an embedding in R^3.
///
/// Construction validates the edge list (no self loops, no duplicates, indices
/// in range) and connectivity; neighbour lists are sorted ascending.
class MolecularGraph {
 public:
  MolecularGraph(Coordinates coords, std::vector<Edge> edges);

  int size() const { return static_cast<int>(coords_.rows()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Coordinates& coordinates() const { return coords_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int vertex) const { return neighbors_.at(vertex); }
  int degree(int vertex) const { return static_cast<int>(neighbors_.at(vertex).size()); }
  int max_degree() const;

  // Index into edges() for {u, v}, or -1.
  int edge_index(int u, int v) const;

  // Coupling multiplier of the bond {u, v}; 0 if not bonded.
  double weight(int u, int v, const CouplingModel& c) const;

  std::vector<double> edge_lengths() const;

 private:
  Coordinates coords_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::map<std::pair<int, int>, int> edge_lookup_;
};

enum class C60Geometry {
  Ideal,       // all bonds of equal length
  JahnTeller,  // hexagon-hexagon bonds 1.40, pentagon bonds 1.45
};

/// Truncated icosahedron. Vertices are ordered lexicographically by
/// coordinate; bonds shared by two hexagons are tagged Double, the rest Single.
/// Throws StructuralError if the constructed graph fails any C60 invariant.
MolecularGraph build_c60(C60Geometry geometry = C60Geometry::Ideal);

/// "tetrahedron", "cube" or "ring". `size` is the ring length (>= 3) and is
/// ignored for the other shapes.
MolecularGraph build_toy(const std::string& name, int size = 0);

MolecularGraph build_ring(int k);

/// Assemble a graph from an explicit edge list, detecting nothing.
MolecularGraph from_edge_list(Coordinates coords, const std::vector<std::pair<int, int>>& pairs,
                              BondClass cls = BondClass::Uniform);

/// Faces traced through the rotation system induced by the embedding.
/// Throws StructuralError when the result is not a sphere (V - E + F != 2).
std::vector<std::vector<int>> trace_faces(const MolecularGraph& g);

/// Face count keyed by face size.
std::map<int, int> face_census(const MolecularGraph& g);

/// Checks the C60 invariants: 60 vertices, 90 edges, 3-regular, 30 double
/// bonds with exactly one per vertex. Throws StructuralError on failure.
void validate_c60(const MolecularGraph& g);

bool is_connected(const MolecularGraph& g);

/// Weighted adjacency: entry (i, j) is the coupling multiplier of bond {i, j}.
template <typename Scalar = double>
MatrixX<Scalar> neighbor_matrix(const MolecularGraph& g, const CouplingModel& c = {}) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(g.size(), g.size());
  for (const Edge& e : g.edges()) {
    const auto w = static_cast<Scalar>(c.weight(e.cls));
    m(e.a, e.b) = w;
    m(e.b, e.a) = w;
  }
  return m;
}

}  // namespace frustra
