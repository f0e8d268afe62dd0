#include "crn/egraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace crn {

EGraph::EGraph(int dimension) : dim_(dimension) {
  if (dimension < 1) throw std::invalid_argument("EGraph: dimension must be >= 1");
}

int EGraph::add_vertex(RatVec coords, std::string label) {
  if (static_cast<int>(coords.size()) != dim_) throw std::invalid_argument("add_vertex: dimension mismatch");
  auto it = index_.find(coords);
  if (it != index_.end()) {
    if (labels_[it->second].empty() && !label.empty()) labels_[it->second] = std::move(label);
    return it->second;
  }
  int id = vertex_count();
  index_.emplace(coords, id);
  vertices_.push_back(std::move(coords));
  labels_.push_back(std::move(label));
  return id;
}

int EGraph::find_vertex(const RatVec& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

void EGraph::add_edge(int src, int tgt) {
  if (src < 0 || src >= vertex_count() || tgt < 0 || tgt >= vertex_count())
    throw std::invalid_argument("add_edge: vertex index out of range");
  if (src == tgt) throw std::invalid_argument("add_edge: zero edge vector");
  if (edge_set_.count({src, tgt})) throw std::invalid_argument("add_edge: duplicate edge");
  edge_set_.emplace(std::make_pair(src, tgt), true);
  edges_.push_back({src, tgt});
}

RatVec EGraph::edge_vector(int e) const {
  const Edge& ed = edges_.at(e);
  return vsub(vertices_[ed.tgt], vertices_[ed.src]);
}

std::vector<RatVec> EGraph::source_vertices() const {
  std::set<RatVec> s;
  for (const auto& e : edges_) s.insert(vertices_[e.src]);
  return {s.begin(), s.end()};
}

bool EGraph::is_reversible() const {
  for (const auto& e : edges_)
    if (!edge_set_.count({e.tgt, e.src})) return false;
  return true;
}

bool EGraph::is_weakly_reversible() const {
  // Tarjan SCC; an edge is in a directed cycle iff both ends share a component.
  int n = vertex_count();
  std::vector<std::vector<int>> out(n);
  for (const auto& e : edges_) out[e.src].push_back(e.tgt);
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> strongconnect = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : out[v]) {
      if (idx[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (idx[v] < 0) strongconnect(v);
  for (const auto& e : edges_)
    if (comp[e.src] != comp[e.tgt]) return false;
  return true;
}

Subspace EGraph::stoichiometric_subspace() const {
  RatMat vecs;
  for (int e = 0; e < edge_count(); ++e) vecs.push_back(edge_vector(e));
  return Subspace(dim_, vecs);
}

bool EGraph::same_network(const EGraph& a, const EGraph& b) {
  if (a.dim_ != b.dim_) return false;
  std::multiset<RatVec> va(a.vertices_.begin(), a.vertices_.end());
  std::multiset<RatVec> vb(b.vertices_.begin(), b.vertices_.end());
  if (va != vb) return false;
  auto edge_coords = [](const EGraph& g) {
    std::multiset<std::pair<RatVec, RatVec>> s;
    for (const auto& e : g.edges_) s.insert({g.vertices_[e.src], g.vertices_[e.tgt]});
    return s;
  };
  return edge_coords(a) == edge_coords(b);
}

}  // namespace crn
