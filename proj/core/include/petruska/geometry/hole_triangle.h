#ifndef PETRUSKA_GEOMETRY_HOLE_TRIANGLE_H_
#define PETRUSKA_GEOMETRY_HOLE_TRIANGLE_H_

#include "petruska/geometry/convex.h"

namespace petruska::geom {

// Extreme points of the closed hole surrounded by three bodies.
struct HoleTriangle {
  Point p_star;  // in A ∩ B
  Point q_star;  // in B ∩ C
  Point r_star;  // in C ∩ A
  // Number of distinct extreme points of the closed hole. Three for every
  // hole met so far; kept so callers can flag a collapsed triangle.
  int extreme_points = 3;

  bool degenerate() const { return extreme_points < 3; }
};

// Requires A∩B, B∩C, C∩A non-empty and A∩B∩C empty, otherwise throws
// petruska::Error("not a hole"). Every convex set meeting the three pairwise
// intersections contains the returned points.
HoleTriangle hole_triangle(const ConvexBody& a, const ConvexBody& b,
                           const ConvexBody& c);

}  // namespace petruska::geom

#endif  // PETRUSKA_GEOMETRY_HOLE_TRIANGLE_H_
