#include "petruska/geometry/convex.h"

#include <algorithm>

#include "petruska/error.h"
#include "petruska/geometry/lp.h"

namespace petruska::geom {

Point make_point(long x, long y) { return Point{Rat(x), Rat(y)}; }

Point midpoint(const Point& a, const Point& b) {
  return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
}

Rat orient(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

HalfPlane HalfPlane::make(Rat a, Rat b, Rat c) {
  if (sgn(a) == 0 && sgn(b) == 0) {
    throw Error("half-plane normal must be non-zero");
  }
  return HalfPlane{std::move(a), std::move(b), std::move(c)};
}

ConvexBody ConvexBody::hull(std::span<const Point> points) {
  if (points.empty()) throw Error("empty point set");
  ConvexBody body;
  body.generators_.assign(points.begin(), points.end());

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) {
    body.ring_ = pts;
  } else {
    // Andrew's monotone chain; collinear points are dropped.
    std::vector<Point> chain;
    chain.reserve(2 * pts.size());
    for (const Point& p : pts) {
      while (chain.size() >= 2 &&
             sgn(orient(chain[chain.size() - 2], chain.back(), p)) <= 0) {
        chain.pop_back();
      }
      chain.push_back(p);
    }
    const std::size_t lower = chain.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
      while (chain.size() >= lower &&
             sgn(orient(chain[chain.size() - 2], chain.back(), *it)) <= 0) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
    chain.pop_back();
    if (chain.size() < 3) {
      body.ring_ = {pts.front(), pts.back()};
    } else {
      body.ring_ = std::move(chain);
    }
  }

  const auto& r = body.ring_;
  body.dim_ = r.size() >= 3 ? 2 : static_cast<int>(r.size()) - 1;
  if (body.dim_ == 0) {
    const Point& p = r[0];
    body.hrep_ = {HalfPlane{1, 0, p.x}, HalfPlane{-1, 0, -p.x},
                  HalfPlane{0, 1, p.y}, HalfPlane{0, -1, -p.y}};
  } else if (body.dim_ == 1) {
    const Point& p = r[0];
    const Point& q = r[1];
    Rat dx = q.x - p.x;
    Rat dy = q.y - p.y;
    Rat line = dy * p.x - dx * p.y;
    body.hrep_ = {HalfPlane{dy, -dx, line}, HalfPlane{-dy, dx, -line},
                  HalfPlane{dx, dy, dx * q.x + dy * q.y},
                  HalfPlane{-dx, -dy, -(dx * p.x + dy * p.y)}};
  } else {
    body.hrep_.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& p = r[i];
      const Point& q = r[(i + 1) % r.size()];
      Rat a = q.y - p.y;
      Rat b = p.x - q.x;
      Rat c = a * p.x + b * p.y;
      body.hrep_.push_back(HalfPlane{std::move(a), std::move(b), std::move(c)});
    }
  }
  return body;
}

bool ConvexBody::contains(const Point& p) const {
  return std::all_of(hrep_.begin(), hrep_.end(),
                     [&](const HalfPlane& h) { return h.contains(p); });
}

FeasibilityResult feasible(std::span<const HalfPlane> constraints,
                           const std::optional<Objective2>& objective) {
  std::vector<LinearConstraint> rows;
  rows.reserve(constraints.size());
  for (const HalfPlane& h : constraints) rows.push_back({{h.a, h.b}, h.c});
  std::vector<Rat> obj;
  if (objective) obj = {objective->first, objective->second};
  LpSolution sol = solve_lp(rows, 2, obj);

  FeasibilityResult out;
  switch (sol.status) {
    case LpStatus::kInfeasible:
      return out;
    case LpStatus::kUnbounded:
      out.status = FeasibilityStatus::kUnbounded;
      break;
    case LpStatus::kOptimal:
      out.status = FeasibilityStatus::kFeasible;
      if (objective) out.optimum = sol.value;
      break;
  }
  out.witness = Point{sol.point[0], sol.point[1]};
  return out;
}

std::optional<Point> intersect_nonempty(
    std::span<const ConvexBody* const> bodies) {
  std::vector<HalfPlane> all;
  for (const ConvexBody* b : bodies) {
    all.insert(all.end(), b->hrep().begin(), b->hrep().end());
  }
  FeasibilityResult r = feasible(all);
  if (!r.feasible()) return std::nullopt;
  return r.witness;
}

std::optional<Point> intersect_nonempty(std::span<const ConvexBody> bodies) {
  std::vector<const ConvexBody*> ptrs;
  for (const ConvexBody& b : bodies) ptrs.push_back(&b);
  return intersect_nonempty(std::span<const ConvexBody* const>(ptrs));
}

namespace {

// One Sutherland-Hodgman step; the ring may be degenerate (1 or 2 points).
std::vector<Point> clip_ring(const std::vector<Point>& ring, const HalfPlane& h) {
  std::vector<Point> out;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = ring[i];
    const Point& nxt = ring[(i + 1) % n];
    Rat sc = h.slack(cur);
    Rat sn = h.slack(nxt);
    if (sgn(sc) >= 0) out.push_back(cur);
    if ((sgn(sc) > 0 && sgn(sn) < 0) || (sgn(sc) < 0 && sgn(sn) > 0)) {
      Rat t = sc / (sc - sn);
      out.push_back(Point{cur.x + t * (nxt.x - cur.x),
                          cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

}  // namespace

std::optional<ConvexBody> intersection(
    std::span<const ConvexBody* const> bodies) {
  if (bodies.empty()) throw Error("intersection of an empty list");
  std::vector<Point> ring = bodies[0]->ring();
  for (std::size_t k = 1; k < bodies.size(); ++k) {
    for (const HalfPlane& h : bodies[k]->hrep()) {
      ring = clip_ring(ring, h);
      if (ring.empty()) return std::nullopt;
    }
    ring = ConvexBody::hull(ring).ring();
  }
  return ConvexBody::hull(ring);
}

std::optional<ConvexBody> intersection(std::span<const ConvexBody> bodies) {
  std::vector<const ConvexBody*> ptrs;
  for (const ConvexBody& b : bodies) ptrs.push_back(&b);
  return intersection(std::span<const ConvexBody* const>(ptrs));
}

std::optional<ConvexBody> clip(const ConvexBody& body, const HalfPlane& h) {
  std::vector<Point> ring = clip_ring(body.ring(), h);
  if (ring.empty()) return std::nullopt;
  return ConvexBody::hull(ring);
}

UnionCoverage cell_in_union_of_two(const ConvexBody& cell, const ConvexBody& x,
                                   const ConvexBody& y) {
  // The complement of a body is the union of its open outer half-planes, so
  // the cell escapes x ∪ y iff some pair (h of x, g of y) admits a cell
  // point with positive outer slack against both.
  for (const Point& v : cell.ring()) {
    if (!x.contains(v) && !y.contains(v)) return UnionCoverage{false, v};
  }
  std::vector<LinearConstraint> rows;
  for (const HalfPlane& h : cell.hrep()) rows.push_back({{h.a, h.b, 0}, h.c});
  const std::size_t base = rows.size();
  rows.resize(base + 2);
  const std::vector<Rat> objective = {0, 0, 1};
  for (const HalfPlane& h : x.hrep()) {
    // t <= a p - c   <=>   -a p + t <= -c
    rows[base] = {{-h.a, -h.b, 1}, -h.c};
    for (const HalfPlane& g : y.hrep()) {
      rows[base + 1] = {{-g.a, -g.b, 1}, -g.c};
      LpSolution sol = solve_lp(rows, 3, objective);
      if (sol.status == LpStatus::kInfeasible) {
        throw InvariantError("cell-coverage program infeasible (empty cell)");
      }
      if (sol.status == LpStatus::kUnbounded || sgn(sol.value) > 0) {
        return UnionCoverage{false, Point{sol.point[0], sol.point[1]}};
      }
    }
  }
  return UnionCoverage{true, std::nullopt};
}

int coverage_count(std::span<const ConvexBody> family, const Point& p) {
  return static_cast<int>(std::count_if(
      family.begin(), family.end(),
      [&](const ConvexBody& b) { return b.contains(p); }));
}

}  // namespace petruska::geom
