#pragma once

#include "crn/linalg.hpp"
#include "crn/lp.hpp"

namespace crn {

// Sign pattern over an ordered list of normals; entries in {-1, 0, +1}.
// Its region is {x : sign(n_h . x) agrees, with 0 meaning n_h . x = 0}.
using SignVec = std::vector<int>;

// cone(generators) + span(lineality).
struct GeneratedCone {
  RatMat generators;
  RatMat lineality;
};

// Polar of the region of sigma: {x : a.x >= 0, b.x = 0} has polar
// cone{-a} + span{b}.
GeneratedCone chamber_polar(const SignVec& sigma, const RatMat& normals);

// Exact membership: v in cone(generators) + span(lineality)?
bool cone_member(const RatVec& v, const GeneratedCone& cone);

// Tolerant membership for floating-point v: accepts iff some cone point is
// within tau * (1 + |v|_inf) of v in the max norm. v is quantized to the
// 2^-64 grid and the test is then exact, so the predicate is deterministic.
bool cone_member(const std::vector<double>& v, const GeneratedCone& cone, double tau);

// Max-norm distance of quantized v from the cone (0 when inside).
double cone_distance(const std::vector<double>& v, const GeneratedCone& cone);

// Euclidean distance from X to the region of sigma, by cyclic projection
// (Dykstra) onto the halfspaces/hyperplanes. Exact 0 when X already
// satisfies every constraint. Throws on non-convergence.
double distance_to_region(const std::vector<double>& X, const SignVec& sigma,
                          const std::vector<std::vector<double>>& normals);

struct InteriorPoint {
  bool feasible = false;
  RatVec x;  // |x|_inf <= 1; strict inequalities hold with maximal min slack
};

// Relative-interior representative: x with eq.x = 0, s.x > 0 for every
// strict row, c.x >= 0 for every closed row. Infeasible iff no such x.
// With no strict rows the zero vector is returned (feasible).
InteriorPoint lp_relative_interior(int dim, const RatMat& equalities, const RatMat& stricts,
                                   const RatMat& closed = {});

}  // namespace crn
