#include "petruska/constructions/constructions.h"

#include <cmath>
#include <numbers>

#include "petruska/error.h"

namespace petruska::constructions {

using geom::make_point;
using geom::parse_rat;
using geom::Rat;

std::vector<Point> regular_polygon(int m) {
  if (m < 3) throw Error("a polygon needs at least 3 vertices");
  std::vector<Point> out;
  for (int i = 0; i < m; ++i) {
    const double deg = 90.0 + 360.0 * i / m;
    const double phi = std::atan2(std::sin(deg * std::numbers::pi / 180),
                                  std::cos(deg * std::numbers::pi / 180));
    if (std::abs(std::abs(phi) - std::numbers::pi) < 1e-9) {
      out.push_back(make_point(-1, 0));
      continue;
    }
    const Rat t = geom::round_to_denominator(std::tan(phi / 2), 1000000);
    const Rat d = 1 + t * t;
    out.push_back(Point{(1 - t * t) / d, 2 * t / d});
  }
  return out;
}

namespace {

struct PinnedPoint {
  const char* label;
  const char* x_num;
  const char* x_den;
  const char* y_num;
  const char* y_den;
};

// Produced by scripts/derive_nine_sets.py.
constexpr PinnedPoint kNineSetsPoints[] = {
    {"01456", "0", "1", "5", "1"},
    {"01356", "-11769452188845", "4353890437769", "18313630000000", "4353890437769"},
    {"01236", "-25164660811845", "5532932162369", "11492315000000", "5532932162369"},
    {"02356", "-972457431289645", "196491486257929", "-139818270000000", "196491486257929"},
    {"23567", "-120865598805", "31985619761", "-104730625000", "31985619761"},
    {"02357", "-245149747605", "174029949521", "-834902500000", "174029949521"},
    {"02578", "2198057573595", "1560388485281", "-7485910000000", "1560388485281"},
    {"02478", "4304425868195", "1139114826361", "-3729810000000", "1139114826361"},
    {"04578", "4974423732795", "1005115253441", "-715210000000", "1005115253441"},
    {"14578", "4763388268155", "1047322346369", "2175370000000", "1047322346369"},
    {"01458", "3509196131595", "1298160773681", "5460410000000", "1298160773681"},
    {"13468", "15132420642597393425", "5652049779216512823557689",
     "50237429589569321100000000", "5652049779216512823557689"},
};

std::vector<int> range_label(int begin, int end) {
  std::vector<int> out;
  for (int i = begin; i < end; ++i) out.push_back(i);
  return out;
}

}  // namespace

ConvexFamily nine_sets() {
  std::vector<Point> points;
  std::vector<Witness> witnesses;
  std::vector<std::vector<int>> bodies(9);
  int p = 0;
  for (const PinnedPoint& pp : kNineSetsPoints) {
    points.push_back(Point{parse_rat(pp.x_num, pp.x_den), parse_rat(pp.y_num, pp.y_den)});
    Witness w{p, {}};
    for (const char* c = pp.label; *c; ++c) {
      w.label.push_back(*c - '0');
      bodies[*c - '0'].push_back(p);
    }
    witnesses.push_back(std::move(w));
    ++p;
  }
  return ConvexFamily("nine-sets", std::move(points), std::move(bodies),
                      std::move(witnesses));
}

ConvexFamily polygon_construction(int k) {
  if (k < 3) throw Error("polygon construction needs k ≥ 3");
  const int c = (k + 1) / 2;
  std::vector<std::vector<int>> bodies;
  for (int i = 0; i < k; ++i) {
    std::vector<int> b;
    for (int j = 0; j < k; ++j) {
      if (j != i) b.push_back(j);
    }
    bodies.push_back(std::move(b));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<int> b;
    for (int t = 0; t < c; ++t) b.push_back((i + t) % k);
    bodies.push_back(std::move(b));
  }
  std::vector<Witness> witnesses;
  for (int j = 0; j < k; ++j) {
    Witness w{j, {}};
    for (int i = 0; i < k; ++i) {
      if (i != j) w.label.push_back(i);
    }
    for (int t = 0; t < c; ++t) w.label.push_back(k + (j - t + k) % k);
    witnesses.push_back(std::move(w));
  }
  return ConvexFamily("polygon", regular_polygon(k), std::move(bodies),
                      std::move(witnesses),
                      {{"k", k}, {"omega", k - 1 + c}});
}

ConvexFamily extended_polygon(int k) {
  if (k != 5 && k != 7) throw Error("extension defined for k∈{5,7}");
  const ConvexFamily base = polygon_construction(k);
  std::vector<std::vector<int>> bodies = base.body_points();
  bodies.push_back(base.body_points()[0]);  // missing vertex 0
  bodies.push_back(base.body_points()[1]);  // missing vertex 1
  bodies.push_back({0, 1});
  const int n = static_cast<int>(base.size());
  std::vector<Witness> witnesses = base.witnesses();
  for (Witness& w : witnesses) {
    if (w.point != 0) w.label.push_back(n);
    if (w.point != 1) w.label.push_back(n + 1);
    if (w.point == 0 || w.point == 1) w.label.push_back(n + 2);
  }
  const long omega = base.parameters().at("omega") + 2;
  return ConvexFamily("extended-polygon", base.points(), std::move(bodies),
                      std::move(witnesses), {{"k", k}, {"omega", omega}});
}

ConvexFamily triangle_construction(int omega) {
  if (omega < 2) throw Error("triangle construction needs omega ≥ 2");
  // Points: P = 0, Q = 1, R = 2.
  std::vector<Point> points = {make_point(0, 0), make_point(1, 2), make_point(2, 0)};
  const int up = (omega + 1) / 2, down = omega / 2;
  std::vector<std::vector<int>> bodies;
  for (int i = 0; i < up; ++i) bodies.push_back({0, 2});
  for (int i = 0; i < down; ++i) bodies.push_back({0, 1});
  for (int i = 0; i < down; ++i) bodies.push_back({2, 1});
  if (omega % 2 == 1) bodies.push_back({1});
  const int pr = 0, pq = up, rq = up + down, q = up + 2 * down;
  std::vector<Witness> witnesses = {
      {0, range_label(pr, pq)}, {1, range_label(pq, q + omega % 2)},
      {2, range_label(pr, pq)}};
  for (int i = pq; i < rq; ++i) witnesses[0].label.push_back(i);
  for (int i = rq; i < q; ++i) witnesses[2].label.push_back(i);
  return ConvexFamily("triangle", std::move(points), std::move(bodies),
                      std::move(witnesses), {{"omega", omega}});
}

ConvexFamily two_k(int k) {
  if (k < 2) throw Error("two-k construction needs k ≥ 2");
  const int m = 2 * k - 1;
  std::vector<Point> points = regular_polygon(m);
  for (int j = 0; j < m; ++j) points.push_back(geom::midpoint(points[j], points[(j + 1) % m]));
  std::vector<std::vector<int>> bodies;
  bodies.push_back(range_label(m, 2 * m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> b;
    for (int t = 0; t < k; ++t) b.push_back((i + t) % m);
    bodies.push_back(std::move(b));
  }
  std::vector<Witness> witnesses;
  for (int j = 0; j < m; ++j) {
    Witness w{j, {}};
    for (int t = 0; t < k; ++t) w.label.push_back(1 + (j - t + m) % m);
    witnesses.push_back(std::move(w));
  }
  for (int j = 0; j < m; ++j) {
    // Midpoint of vertices j, j+1: in M0 and in the k-1 runs covering both.
    Witness w{m + j, {0}};
    for (int t = 0; t < k - 1; ++t) w.label.push_back(1 + (j - t + m) % m);
    witnesses.push_back(std::move(w));
  }
  return ConvexFamily("two-k", std::move(points), std::move(bodies),
                      std::move(witnesses), {{"k", k}});
}

}  // namespace petruska::constructions
