#pragma once

#include "crn/geometry.hpp"

namespace crn {

struct DegenerateSources : std::runtime_error {
  DegenerateSources() : std::runtime_error("source vertices span a zero-dimensional space") {}
};

// Complete polyhedral fan generated by a central hyperplane arrangement.
// Chambers are the closures of the full-support sign regions; every cone
// contains lineality = span(normals)^perp.
struct Fan {
  int dim = 0;
  RatMat normals;                              // primitive, sign-canonical, sorted
  std::vector<SignVec> chambers;               // lex order, +1 before -1
  Subspace span;                               // of the normals
  Subspace lineality;                          // orthogonal complement
  std::vector<std::vector<double>> normals_d;  // cached for distance work
};

Fan fan_from_normals(int dim, const RatMat& raw_normals);

// Arrangement of the pairwise source differences.
Fan build_fan(int dim, const std::vector<RatVec>& sources);

// Primitive directions of the one-dimensional cones, both orientations,
// computed inside span(normals) and mapped back. Throws DegenerateSources
// when the span is trivial.
std::vector<RatVec> fan_rays(const Fan& fan);

struct FanFace {
  SignVec sign;
  RatVec rep;  // relative-interior point; zero only for the origin face
};

// Every nonempty sign region, including those with zero entries.
std::vector<FanFace> enumerate_faces(int dim, const RatMat& normals);

struct ConesWithinResult {
  std::vector<int> qualifying;  // chamber indices with distance <= delta
  SignVec meet;                 // common sign where all agree, 0 elsewhere
};

// The meet describes P = intersection of the qualifying chambers.
ConesWithinResult cones_within(const Fan& fan, const std::vector<double>& X, double delta);

}  // namespace crn
