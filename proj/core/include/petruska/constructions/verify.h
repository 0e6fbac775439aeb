#ifndef PETRUSKA_CONSTRUCTIONS_VERIFY_H_
#define PETRUSKA_CONSTRUCTIONS_VERIFY_H_

#include <optional>
#include <vector>

#include "petruska/constructions/family.h"
#include "petruska/redblue/clique.h"

namespace petruska::constructions {

struct PairEscape {
  int x;
  int y;
  // Index of a witness outside both bodies, or -1 when there is none.
  int witness;
};

struct VerificationReport {
  int k = 0;
  // (a) no k+1 bodies share a point
  bool max_cover_ok = false;
  std::optional<std::vector<int>> offending_subset;
  std::optional<Point> offending_point;
  // (b) every witness lies in at least k bodies
  bool witnesses_covered = false;
  std::vector<int> undercovered_witnesses;
  // (c) every pair of bodies misses some witness
  bool pair_coverage_fails = false;
  std::vector<PairEscape> pairs;
  // No body lies in every k-subset with a common point.
  bool single_transversal_absent = false;
  rb::FVector fvector;

  bool passed() const { return max_cover_ok && witnesses_covered && pair_coverage_fails; }
};

VerificationReport verify_counterexample(const ConvexFamily& family, int k);

// Throws petruska::Error("omega is not the maximum") if some omega+1 bodies
// share a point. True iff no body belongs to every omega-subset with a
// common point (false when there is no such subset).
bool verify_no_single_transversal(const ConvexFamily& family, int omega);

struct RegionCoverageReport {
  int k = 0;
  // Non-empty intersections of k bodies; together they form the k-covered
  // region.
  std::size_t cells = 0;
  std::size_t point_cells = 0;
  std::size_t segment_cells = 0;
  std::size_t area_cells = 0;
  // For each pair x < y, a point of the region lying in neither body.
  struct Escape {
    int x;
    int y;
    std::optional<Point> witness;
  };
  std::vector<Escape> pairs;
  bool every_pair_escapes = false;
};

// Throws petruska::Error when some k+1 bodies share a point.
RegionCoverageReport region_coverage(const ConvexFamily& family, int k);

inline bool verify_k_covered_region_pair_uncoverable(const ConvexFamily& family, int k) {
  return region_coverage(family, k).every_pair_escapes;
}

}  // namespace petruska::constructions

#endif  // PETRUSKA_CONSTRUCTIONS_VERIFY_H_
