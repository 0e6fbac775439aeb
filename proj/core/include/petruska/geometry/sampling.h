#ifndef PETRUSKA_GEOMETRY_SAMPLING_H_
#define PETRUSKA_GEOMETRY_SAMPLING_H_

#include <array>
#include <random>

#include "petruska/geometry/convex.h"

// Seeded random instances for the property suites. All coordinates are
// exact; only the choices come from the generator.
namespace petruska::geom {

// Three bodies forming a hole: pairwise intersecting, no common point.
struct HoleInstance {
  std::array<ConvexBody, 3> bodies;  // A, B, C
};

// Bodies hug the sides of a random fat triangle, so A∩B sits near one
// corner, B∩C near the next, C∩A near the last. Retries until the hole
// condition holds exactly.
HoleInstance random_hole(std::mt19937_64& rng);

// Random point of the body as a convex combination of its extreme points.
Point random_point_in(const ConvexBody& body, std::mt19937_64& rng);

// Hull of one random point from each pairwise intersection plus a few
// noise points from the bounding box. Is a lid by construction.
ConvexBody random_lid(const HoleInstance& hole, std::mt19937_64& rng);

}  // namespace petruska::geom

#endif  // PETRUSKA_GEOMETRY_SAMPLING_H_
