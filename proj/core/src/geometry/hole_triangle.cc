#include "petruska/geometry/hole_triangle.h"

#include <array>
#include <optional>
#include <vector>

#include "petruska/error.h"

namespace petruska::geom {
namespace {

HalfPlane reversed(const HalfPlane& h) { return HalfPlane{-h.a, -h.b, -h.c}; }

// Splits each piece P into the full-dimensional parts of P \ body, using
// P \ body = ⋃_i P ∩ h_1 ∩ … ∩ h_{i-1} ∩ {outside h_i}. Lower-dimensional
// parts are dropped: the hole is open, so they lie in the closure of the rest.
std::vector<ConvexBody> subtract(const std::vector<ConvexBody>& pieces,
                                 const ConvexBody& body) {
  std::vector<ConvexBody> out;
  for (const ConvexBody& piece : pieces) {
    std::optional<ConvexBody> inside = piece;
    for (const HalfPlane& h : body.hrep()) {
      if (!inside) break;
      std::optional<ConvexBody> outside = clip(*inside, reversed(h));
      if (outside && outside->dim() == 2) out.push_back(std::move(*outside));
      inside = clip(*inside, h);
      if (inside && inside->dim() < 2) inside.reset();
    }
  }
  return out;
}

}  // namespace

HoleTriangle hole_triangle(const ConvexBody& a, const ConvexBody& b,
                           const ConvexBody& c) {
  const ConvexBody* ab[] = {&a, &b};
  const ConvexBody* bc[] = {&b, &c};
  const ConvexBody* ca[] = {&c, &a};
  const ConvexBody* abc[] = {&a, &b, &c};
  std::optional<Point> p0 = intersect_nonempty(ab);
  std::optional<Point> q0 = intersect_nonempty(bc);
  std::optional<Point> r0 = intersect_nonempty(ca);
  if (!p0 || !q0 || !r0 || intersect_nonempty(abc)) throw Error("not a hole");

  // The sides of conv(p0, q0, r0) lie in B, C and A respectively, so the
  // bounded complement component cannot cross them; by the KKM lemma the
  // triangle is non-degenerate and is not covered by A ∪ B ∪ C.
  const Point corners[] = {*p0, *q0, *r0};
  std::vector<ConvexBody> pieces = {ConvexBody::hull(corners)};
  if (pieces[0].dim() != 2) {
    throw InvariantError("hole triangle: degenerate witness triangle");
  }
  pieces = subtract(pieces, a);
  pieces = subtract(pieces, b);
  pieces = subtract(pieces, c);
  if (pieces.empty()) throw InvariantError("hole triangle: empty hole");

  std::vector<Point> all;
  for (const ConvexBody& piece : pieces) {
    all.insert(all.end(), piece.ring().begin(), piece.ring().end());
  }
  const ConvexBody closure = ConvexBody::hull(all);
  const auto& ring = closure.ring();
  if (ring.size() > 3) {
    throw InvariantError("hole triangle: closed hole has more than 3 extreme "
                         "points");
  }

  std::array<std::optional<Point>, 3> slots;
  const std::array<std::pair<const ConvexBody*, const ConvexBody*>, 3> pairs = {
      {{&a, &b}, {&b, &c}, {&c, &a}}};
  for (const Point& v : ring) {
    int hits = 0;
    for (std::size_t s = 0; s < 3; ++s) {
      if (pairs[s].first->contains(v) && pairs[s].second->contains(v)) {
        if (slots[s] && !(*slots[s] == v)) {
          throw InvariantError("hole triangle: two corners in one pairwise "
                               "intersection");
        }
        slots[s] = v;
        ++hits;
      }
    }
    if (hits == 0) {
      throw InvariantError("hole triangle: corner outside every pairwise "
                           "intersection");
    }
  }
  for (const auto& slot : slots) {
    if (!slot) throw InvariantError("hole triangle: missing corner");
  }
  return HoleTriangle{*slots[0], *slots[1], *slots[2],
                      static_cast<int>(ring.size())};
}

}  // namespace petruska::geom
