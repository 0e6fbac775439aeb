#ifndef PETRUSKA_CONSTRUCTIONS_CONSTRUCTIONS_H_
#define PETRUSKA_CONSTRUCTIONS_CONSTRUCTIONS_H_

#include <vector>

#include "petruska/constructions/family.h"

namespace petruska::constructions {

// Vertices of a regular m-gon pinned exactly on the unit circle: vertex i at
// angle 90 + 360 i / m degrees, via the rational parametrisation with
// t = tan(angle / 2) rounded to a multiple of 1e-6. Points on a circle are
// in strictly convex position, so the combinatorics is exact.
std::vector<Point> regular_polygon(int m);

// Nine bodies, each the hull of the twelve pinned witness points whose
// label contains its index.
ConvexFamily nine_sets();

// Over the regular k-gon: bodies 0..k-1 are the hulls missing vertex i,
// bodies k..2k-1 the hulls of ceil(k/2) consecutive vertices from vertex i.
// Witnesses are the vertices. Requires k >= 3.
ConvexFamily polygon_construction(int k);

// polygon_construction(k) plus a second hull missing vertex 0, a second hull
// missing vertex 1, and the segment between vertices 0 and 1. k in {5, 7}.
ConvexFamily extended_polygon(int k);

// Segments on P=(0,0), Q=(1,2), R=(2,0): ceil(w/2) copies of PR, then
// floor(w/2) copies each of PQ and RQ, then the point Q when w is odd.
// Witnesses P, Q, R. Requires omega >= 2.
ConvexFamily triangle_construction(int omega);

// Over the regular (2k-1)-gon: body 0 is the hull of the edge midpoints,
// body i (1..2k-1) the hull of k consecutive vertices from vertex i-1.
// Witnesses are the vertices, then the midpoints. Requires k >= 2.
ConvexFamily two_k(int k);

}  // namespace petruska::constructions

#endif  // PETRUSKA_CONSTRUCTIONS_CONSTRUCTIONS_H_
