#include "petruska/geometry/sampling.h"

#include "petruska/error.h"

namespace petruska::geom {
namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Point jitter(const Point& p, long r, std::mt19937_64& rng) {
  return Point{p.x + uniform(rng, -r, r), p.y + uniform(rng, -r, r)};
}

// Body along side (u, v) of a triangle with centroid g (scaled by 3).
ConvexBody side_body(const Point& u, const Point& v, const Point& g3,
                     std::mt19937_64& rng) {
  std::vector<Point> pts = {u, v};
  for (int i = 0, m = static_cast<int>(uniform(rng, 1, 3)); i < m; ++i) {
    pts.push_back(jitter(u, 25, rng));
    pts.push_back(jitter(v, 25, rng));
  }
  // Bulge outward, away from the centroid, at a few points along the side.
  for (int i = 0, m = static_cast<int>(uniform(rng, 1, 3)); i < m; ++i) {
    const Rat s = make_rat(uniform(rng, 1, 9), 10);
    const Point on{u.x + s * (v.x - u.x), u.y + s * (v.y - u.y)};
    const Rat push = make_rat(uniform(rng, 0, 40), 100);
    pts.push_back(Point{on.x + push * (3 * on.x - g3.x) / 3, on.y + push * (3 * on.y - g3.y) / 3});
  }
  // A slight inward bulge keeps the hole from being a plain triangle.
  const Rat s = make_rat(uniform(rng, 2, 8), 10);
  const Point on{u.x + s * (v.x - u.x), u.y + s * (v.y - u.y)};
  const Rat pull = make_rat(uniform(rng, 0, 8), 100);
  pts.push_back(Point{on.x - pull * (3 * on.x - g3.x) / 3, on.y - pull * (3 * on.y - g3.y) / 3});
  return ConvexBody::hull(pts);
}

}  // namespace

HoleInstance random_hole(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Point p{uniform(rng, 0, 1000), uniform(rng, 0, 1000)};
    const Point q{uniform(rng, 0, 1000), uniform(rng, 0, 1000)};
    const Point r{uniform(rng, 0, 1000), uniform(rng, 0, 1000)};
    if (abs(orient(p, q, r)) < 200000) continue;
    const Point g3{p.x + q.x + r.x, p.y + q.y + r.y};
    HoleInstance h{{side_body(p, r, g3, rng), side_body(p, q, g3, rng),
                    side_body(q, r, g3, rng)}};
    const auto& [a, b, c] = h.bodies;
    const ConvexBody* ab[] = {&a, &b};
    const ConvexBody* bc[] = {&b, &c};
    const ConvexBody* ca[] = {&c, &a};
    const ConvexBody* abc[] = {&a, &b, &c};
    if (intersect_nonempty(ab) && intersect_nonempty(bc) && intersect_nonempty(ca) &&
        !intersect_nonempty(abc)) {
      return h;
    }
  }
  throw InvariantError("random_hole: no hole after 10000 attempts");
}

Point random_point_in(const ConvexBody& body, std::mt19937_64& rng) {
  Rat total = 0, x = 0, y = 0;
  for (const Point& v : body.ring()) {
    const long w = uniform(rng, 1, 100);
    total += w;
    x += w * v.x;
    y += w * v.y;
  }
  return Point{x / total, y / total};
}

ConvexBody random_lid(const HoleInstance& hole, std::mt19937_64& rng) {
  const auto& [a, b, c] = hole.bodies;
  std::vector<Point> pts;
  const ConvexBody* pairs[3][2] = {{&a, &b}, {&b, &c}, {&c, &a}};
  for (auto& pair : pairs) {
    const auto cell = intersection(std::span<const ConvexBody* const>(pair, 2));
    if (!cell) throw Error("not a hole");
    pts.push_back(random_point_in(*cell, rng));
  }
  for (int i = 0, m = static_cast<int>(uniform(rng, 0, 3)); i < m; ++i) {
    pts.push_back(Point{uniform(rng, -200, 1200), uniform(rng, -200, 1200)});
  }
  return ConvexBody::hull(pts);
}

}  // namespace petruska::geom
