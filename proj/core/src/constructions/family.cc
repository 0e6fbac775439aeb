#include "petruska/constructions/family.h"

#include <algorithm>

#include "petruska/error.h"

namespace petruska::constructions {

ConvexFamily::ConvexFamily(std::string name, std::vector<Point> points,
                           std::vector<std::vector<int>> body_points,
                           std::vector<Witness> witnesses,
                           std::map<std::string, long> parameters)
    : name_(std::move(name)),
      parameters_(std::move(parameters)),
      points_(std::move(points)),
      body_points_(std::move(body_points)),
      witnesses_(std::move(witnesses)) {
  const int np = static_cast<int>(points_.size());
  for (const auto& idx : body_points_) {
    if (idx.empty()) throw Error("body with no points");
    std::vector<Point> gens;
    for (int p : idx) {
      if (p < 0 || p >= np) throw Error("body point index out of range");
      gens.push_back(points_[p]);
    }
    bodies_.push_back(ConvexBody::hull(gens));
  }
  const int nb = static_cast<int>(bodies_.size());
  for (Witness& w : witnesses_) {
    if (w.point < 0 || w.point >= np) throw Error("witness point index out of range");
    std::sort(w.label.begin(), w.label.end());
    for (int b : w.label) {
      if (b < 0 || b >= nb) throw Error("witness label body index out of range");
    }
    std::vector<int> actual;
    for (int b = 0; b < nb; ++b) {
      if (bodies_[b].contains(points_[w.point])) actual.push_back(b);
    }
    if (actual != w.label) {
      throw Error("witness " + std::to_string(w.point) +
                  " label disagrees with exact containment");
    }
  }
}

rb::RedBlueClique compute_nerve(const ConvexFamily& family) {
  const int n = static_cast<int>(family.size());
  if (n < 3) throw Error("nerve needs at least three bodies");
  const auto& b = family.bodies();
  rb::TripleSet blue(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const ConvexBody* three[] = {&b[i], &b[j], &b[k]};
        if (!geom::intersect_nonempty(three)) blue.insert(rb::Triple{i, j, k});
      }
  return rb::RedBlueClique(n, std::move(blue));
}

namespace {

void descend(const ConvexFamily& family, int max_size, std::vector<int>& subset,
             const ConvexBody& cell,
             const std::function<bool(const std::vector<int>&, const ConvexBody&)>& visit) {
  if (static_cast<int>(subset.size()) == max_size) return;
  const int n = static_cast<int>(family.size());
  for (int j = subset.back() + 1; j < n; ++j) {
    const ConvexBody* pair[] = {&cell, &family.bodies()[j]};
    std::optional<ConvexBody> next = geom::intersection(pair);
    if (!next) continue;
    subset.push_back(j);
    if (visit(subset, *next)) descend(family, max_size, subset, *next, visit);
    subset.pop_back();
  }
}

}  // namespace

void for_each_intersecting_subset(
    const ConvexFamily& family, int max_size,
    const std::function<bool(const std::vector<int>&, const ConvexBody&)>& visit) {
  std::vector<int> subset;
  for (int i = 0; i < static_cast<int>(family.size()) && max_size > 0; ++i) {
    subset = {i};
    const ConvexBody& body = family.bodies()[i];
    if (visit(subset, body)) descend(family, max_size, subset, body, visit);
  }
}

}  // namespace petruska::constructions
