#include "petruska/constructions/verify.h"

#include "petruska/error.h"

namespace petruska::constructions {
namespace {

struct SubsetScan {
  std::optional<std::vector<int>> too_large;
  std::optional<Point> too_large_point;
  std::vector<std::vector<int>> top;  // size-k subsets with a common point
  std::vector<ConvexBody> cells;
};

SubsetScan scan(const ConvexFamily& family, int k) {
  SubsetScan s;
  for_each_intersecting_subset(
      family, k + 1, [&](const std::vector<int>& subset, const ConvexBody& cell) {
        if (static_cast<int>(subset.size()) == k + 1) {
          if (!s.too_large) {
            s.too_large = subset;
            s.too_large_point = cell.ring().front();
          }
          return false;
        }
        if (static_cast<int>(subset.size()) == k) {
          s.top.push_back(subset);
          s.cells.push_back(cell);
        }
        return true;
      });
  return s;
}

bool no_common_member(const std::vector<std::vector<int>>& subsets, std::size_t n) {
  if (subsets.empty()) return false;
  std::vector<int> hits(n, 0);
  for (const auto& s : subsets)
    for (int b : s) ++hits[b];
  for (int h : hits) {
    if (h == static_cast<int>(subsets.size())) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_counterexample(const ConvexFamily& family, int k) {
  if (k < 1) throw Error("k must be positive");
  if (family.witnesses().empty()) throw Error("family has no witnesses");
  VerificationReport r;
  r.k = k;
  SubsetScan s = scan(family, k);
  r.max_cover_ok = !s.too_large;
  r.offending_subset = s.too_large;
  r.offending_point = s.too_large_point;
  r.single_transversal_absent = r.max_cover_ok && no_common_member(s.top, family.size());

  const auto& bodies = family.bodies();
  std::vector<int> covered;  // witnesses that are k-covered
  for (std::size_t w = 0; w < family.witnesses().size(); ++w) {
    if (geom::coverage_count(bodies, family.witness_point(w)) >= k) {
      covered.push_back(static_cast<int>(w));
    } else {
      r.undercovered_witnesses.push_back(static_cast<int>(w));
    }
  }
  r.witnesses_covered = r.undercovered_witnesses.empty();

  r.pair_coverage_fails = true;
  const int n = static_cast<int>(family.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      PairEscape e{x, y, -1};
      for (int w : covered) {
        const Point& p = family.witness_point(w);
        if (!bodies[x].contains(p) && !bodies[y].contains(p)) {
          e.witness = w;
          break;
        }
      }
      if (e.witness < 0) r.pair_coverage_fails = false;
      r.pairs.push_back(e);
    }
  }

  if (n >= 3) {
    r.fvector = rb::f_vector(compute_nerve(family));
  } else {
    r.fvector.entries = {static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(n * (n - 1) / 2)};
  }
  return r;
}

bool verify_no_single_transversal(const ConvexFamily& family, int omega) {
  if (omega < 1) throw Error("omega must be positive");
  SubsetScan s = scan(family, omega);
  if (s.too_large) throw Error("omega is not the maximum");
  return no_common_member(s.top, family.size());
}

RegionCoverageReport region_coverage(const ConvexFamily& family, int k) {
  if (k < 1) throw Error("k must be positive");
  SubsetScan s = scan(family, k);
  if (s.too_large) {
    throw Error("precondition violated: some " + std::to_string(k + 1) +
                " bodies share a point");
  }
  RegionCoverageReport r;
  r.k = k;
  r.cells = s.cells.size();
  for (const ConvexBody& c : s.cells) {
    if (c.dim() == 0) ++r.point_cells;
    else if (c.dim() == 1) ++r.segment_cells;
    else ++r.area_cells;
  }
  r.every_pair_escapes = true;
  const auto& bodies = family.bodies();
  const int n = static_cast<int>(family.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      RegionCoverageReport::Escape e{x, y, std::nullopt};
      for (const ConvexBody& cell : s.cells) {
        geom::UnionCoverage u = geom::cell_in_union_of_two(cell, bodies[x], bodies[y]);
        if (!u.covered) {
          e.witness = u.witness;
          break;
        }
      }
      if (!e.witness) r.every_pair_escapes = false;
      r.pairs.push_back(std::move(e));
    }
  }
  return r;
}

}  // namespace petruska::constructions
