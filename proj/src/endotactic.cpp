#include "crn/endotactic.hpp"

namespace crn {

DirectionCheck check_direction(const EGraph& g, const RatVec& w) {
  if (static_cast<int>(w.size()) != g.dimension())
    throw std::invalid_argument("check_direction: dimension mismatch");
  DirectionCheck res;
  bool have_min = false;
  Rat min_level = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (dot(w, g.edge_vector(e)) < 0) {
      res.bad_edges.push_back(e);
      Rat lvl = dot(w, g.vertex(g.edges()[e].src));
      if (!have_min || lvl < min_level) {
        min_level = lvl;
        have_min = true;
      }
    }
  }
  if (!have_min) return res;
  for (int e = 0; e < g.edge_count(); ++e)
    if (dot(w, g.edge_vector(e)) > 0 && dot(w, g.vertex(g.edges()[e].src)) < min_level)
      res.good_witnesses.push_back(e);
  res.ok = !res.good_witnesses.empty();
  if (!res.ok)
    for (int e : res.bad_edges)
      if (dot(w, g.vertex(g.edges()[e].src)) == min_level) {
        res.violating_edge = e;
        break;
      }
  return res;
}

namespace {

// Directions where edge i is bad and no edge answers it: for every j,
// either j does not ascend or j's source is not below i's. The region is a
// union-free intersection once each j is split into those two branches.
bool bad_region_dfs(const EGraph& g, int i, size_t j, const RatMat& master, RatMat& closed,
                    const RatVec& rep, RatVec& witness) {
  int n = g.dimension();
  if (j == static_cast<size_t>(g.edge_count())) {
    witness = rep;
    return true;
  }
  const RatVec& si = g.vertex(g.edges()[i].src);
  const RatVec& sj = g.vertex(g.edges()[j].src);
  RatVec not_good(n), not_below(n);
  RatVec ej = g.edge_vector(static_cast<int>(j));
  for (int d = 0; d < n; ++d) {
    not_good[d] = -ej[d];        // w . (t_j - s_j) <= 0
    not_below[d] = sj[d] - si[d];  // w . s_j >= w . s_i
  }
  if (is_zero(not_below))  // shared source: "not below" always holds
    return bad_region_dfs(g, i, j + 1, master, closed, rep, witness);
  for (const RatVec& row : {not_good, not_below}) {
    closed.push_back(row);
    if (dot(row, rep) >= 0) {
      if (bad_region_dfs(g, i, j + 1, master, closed, rep, witness)) {
        closed.pop_back();
        return true;
      }
    } else {
      InteriorPoint ip = lp_relative_interior(n, {}, master, closed);
      if (ip.feasible && bad_region_dfs(g, i, j + 1, master, closed, ip.x, witness)) {
        closed.pop_back();
        return true;
      }
    }
    closed.pop_back();
  }
  return false;
}

}  // namespace

EndotacticResult is_endotactic(const EGraph& g) {
  int n = g.dimension();
  for (int i = 0; i < g.edge_count(); ++i) {
    RatVec ei = g.edge_vector(i);
    RatVec master_row(n);
    for (int d = 0; d < n; ++d) master_row[d] = -ei[d];  // w . (t_i - s_i) < 0
    RatMat master{master_row};
    InteriorPoint ip = lp_relative_interior(n, {}, master);
    if (!ip.feasible) continue;  // cannot happen: edge vectors are nonzero
    RatMat closed;
    RatVec witness;
    if (bad_region_dfs(g, i, 0, master, closed, ip.x, witness))
      return {false, primitive(witness, false), i};
  }
  return {true, {}, -1};
}

EndotacticResult is_endotactic_exhaustive(const EGraph& g) {
  RatMat normals;
  for (int e = 0; e < g.edge_count(); ++e) normals.push_back(g.edge_vector(e));
  std::vector<RatVec> sources = g.source_vertices();
  for (size_t a = 0; a < sources.size(); ++a)
    for (size_t b = a + 1; b < sources.size(); ++b) {
      RatVec d = vsub(sources[a], sources[b]);
      if (!is_zero(d)) normals.push_back(std::move(d));
    }
  for (const FanFace& face : enumerate_faces(g.dimension(), normals)) {
    if (is_zero(face.rep)) continue;
    DirectionCheck check = check_direction(g, face.rep);
    if (!check.ok) return {false, primitive(face.rep, false), check.violating_edge};
  }
  return {true, {}, -1};
}

}  // namespace crn
