#pragma once

#include "crn/egraph.hpp"
#include "crn/fan.hpp"

namespace crn {

// Verdict of the directional test for one w: an edge is "bad" when it points
// strictly against w, "good" when it points strictly along w. The graph
// passes at w iff either no edge is bad, or some good edge starts strictly
// below every bad edge's source level w . s.
struct DirectionCheck {
  bool ok = true;
  std::vector<int> bad_edges;       // indices with w . (t - s) < 0
  std::vector<int> good_witnesses;  // good edges starting below the bad minimum
  int violating_edge = -1;          // first bad edge at the minimum level, when not ok
};

DirectionCheck check_direction(const EGraph& g, const RatVec& w);

struct EndotacticResult {
  bool endotactic = true;
  RatVec witness;           // a failing direction when not endotactic
  int violating_edge = -1;  // an edge that is bad at the witness and unanswered
};

// Decision by searching, for each candidate edge e, the region of directions
// where e is bad and no edge is a qualifying good response. Nonempty region
// => witness. Equivalent to checking every direction.
EndotacticResult is_endotactic(const EGraph& g);

// Reference decision: test one representative of every face of the
// arrangement generated by the edge vectors and the source differences.
// The verdict is constant on each face, so this is exhaustive.
EndotacticResult is_endotactic_exhaustive(const EGraph& g);

}  // namespace crn
