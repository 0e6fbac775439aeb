#ifndef PETRUSKA_CONSTRUCTIONS_FAMILY_H_
#define PETRUSKA_CONSTRUCTIONS_FAMILY_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "petruska/geometry/convex.h"
#include "petruska/redblue/clique.h"

namespace petruska::constructions {

using geom::ConvexBody;
using geom::Point;

struct Witness {
  int point = 0;           // index into ConvexFamily::points()
  std::vector<int> label;  // sorted indices of the bodies containing it
};

// Indexed family of convex bodies, each the hull of some of the shared
// points. Repeated bodies are distinct members.
class ConvexFamily {
 public:
  // Throws petruska::Error when an index is out of range, a body has no
  // points, or a witness label disagrees with exact containment.
  ConvexFamily(std::string name, std::vector<Point> points,
               std::vector<std::vector<int>> body_points,
               std::vector<Witness> witnesses,
               std::map<std::string, long> parameters = {});

  const std::string& name() const { return name_; }
  const std::map<std::string, long>& parameters() const { return parameters_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::vector<int>>& body_points() const { return body_points_; }
  const std::vector<ConvexBody>& bodies() const { return bodies_; }
  std::size_t size() const { return bodies_.size(); }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const Point& witness_point(std::size_t w) const {
    return points_[witnesses_[w].point];
  }

 private:
  std::string name_;
  std::map<std::string, long> parameters_;
  std::vector<Point> points_;
  std::vector<std::vector<int>> body_points_;
  std::vector<ConvexBody> bodies_;
  std::vector<Witness> witnesses_;
};

// Triple {i, j, k} is red iff the three bodies share a point. Needs at least
// three bodies.
rb::RedBlueClique compute_nerve(const ConvexFamily& family);

// Visits, in lexicographic order, every subset of at most max_size bodies
// with non-empty common intersection, together with that intersection.
// Returning false from visit skips the supersets of that subset.
void for_each_intersecting_subset(
    const ConvexFamily& family, int max_size,
    const std::function<bool(const std::vector<int>&, const ConvexBody&)>& visit);

}  // namespace petruska::constructions

#endif  // PETRUSKA_CONSTRUCTIONS_FAMILY_H_
