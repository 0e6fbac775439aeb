#ifndef PETRUSKA_GEOMETRY_CONVEX_H_
#define PETRUSKA_GEOMETRY_CONVEX_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "petruska/geometry/rational.h"

namespace petruska::geom {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic: x first, then y.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point make_point(long x, long y);
Point midpoint(const Point& a, const Point& b);

// Twice the signed area of triangle (o, a, b); positive for a left turn.
Rat orient(const Point& o, const Point& a, const Point& b);

// Closed half-plane {p : a*p.x + b*p.y <= c}.
struct HalfPlane {
  Rat a;
  Rat b;
  Rat c;

  // Throws petruska::Error when (a, b) == (0, 0).
  static HalfPlane make(Rat a, Rat b, Rat c);

  // c - (a x + b y): non-negative exactly on the half-plane.
  Rat slack(const Point& p) const { return c - (a * p.x + b * p.y); }
  bool contains(const Point& p) const { return sgn(slack(p)) >= 0; }
};

// Compact convex polygon, possibly degenerate (a point or a segment), stored
// with both representations. Immutable after construction.
class ConvexBody {
 public:
  // conv(points). Throws petruska::Error("empty point set") on empty input.
  static ConvexBody hull(std::span<const Point> points);

  const std::vector<Point>& generators() const { return generators_; }
  // Extreme points, counter-clockwise from the lexicographically least.
  const std::vector<Point>& ring() const { return ring_; }
  int dim() const { return dim_; }
  // Half-planes whose intersection is exactly the body. A point is pinned
  // by four; a segment gets two line half-planes plus two caps.
  const std::vector<HalfPlane>& hrep() const { return hrep_; }

  bool contains(const Point& p) const;

  friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
    return a.ring_ == b.ring_;
  }

 private:
  ConvexBody() = default;

  std::vector<Point> generators_;
  std::vector<Point> ring_;
  int dim_ = 0;
  std::vector<HalfPlane> hrep_;
};

inline ConvexBody hull(std::span<const Point> points) {
  return ConvexBody::hull(points);
}

inline bool contains_point(const ConvexBody& body, const Point& p) {
  return body.contains(p);
}

enum class FeasibilityStatus { kInfeasible, kFeasible, kUnbounded };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::kInfeasible;
  std::optional<Point> witness;  // optimizer when an objective was given
  std::optional<Rat> optimum;    // set only for a bounded objective

  bool feasible() const { return status != FeasibilityStatus::kInfeasible; }
};

// Linear form (ca, cb) to maximize.
using Objective2 = std::pair<Rat, Rat>;

FeasibilityResult feasible(std::span<const HalfPlane> constraints,
                           const std::optional<Objective2>& objective = {});

// A point common to all bodies, or nullopt if the intersection is empty.
std::optional<Point> intersect_nonempty(std::span<const ConvexBody> bodies);
std::optional<Point> intersect_nonempty(
    std::span<const ConvexBody* const> bodies);

// The common intersection as a body, computed by exact polygon clipping.
std::optional<ConvexBody> intersection(
    std::span<const ConvexBody* const> bodies);
std::optional<ConvexBody> intersection(std::span<const ConvexBody> bodies);

// body ∩ h, or nullopt when empty.
std::optional<ConvexBody> clip(const ConvexBody& body, const HalfPlane& h);

struct UnionCoverage {
  bool covered = false;
  // On failure: a point of the cell lying in neither body.
  std::optional<Point> witness;
};

// Decides cell ⊆ x ∪ y exactly.
UnionCoverage cell_in_union_of_two(const ConvexBody& cell, const ConvexBody& x,
                                   const ConvexBody& y);

int coverage_count(std::span<const ConvexBody> family, const Point& p);

}  // namespace petruska::geom

#endif  // PETRUSKA_GEOMETRY_CONVEX_H_
