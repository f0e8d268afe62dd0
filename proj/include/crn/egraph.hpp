#pragma once

#include <map>
#include <string>
#include <vector>

#include "crn/linalg.hpp"

namespace crn {

struct Edge {
  int src;
  int tgt;
};

// Finite directed graph with vertices embedded in Q^n. Vertices are
// deduplicated by coordinates; edges are unique ordered pairs and never
// have a zero displacement.
class EGraph {
 public:
  explicit EGraph(int dimension);

  int dimension() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Returns the index of the vertex with these coordinates, inserting it if
  // new. A label is attached only if the vertex had none.
  int add_vertex(RatVec coords, std::string label = "");
  int find_vertex(const RatVec& coords) const;  // -1 when absent

  void add_edge(int src, int tgt);

  const RatVec& vertex(int i) const { return vertices_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  RatVec edge_vector(int e) const;  // target minus source

  // Distinct source coordinates, lexicographically sorted.
  std::vector<RatVec> source_vertices() const;

  bool is_reversible() const;
  bool is_weakly_reversible() const;  // every edge inside a directed cycle

  Subspace stoichiometric_subspace() const;  // span of edge vectors

  // Coordinate-exact equality up to vertex reindexing.
  static bool same_network(const EGraph& a, const EGraph& b);

 private:
  int dim_;
  std::vector<RatVec> vertices_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::map<RatVec, int> index_;
  std::map<std::pair<int, int>, bool> edge_set_;
};

}  // namespace crn
