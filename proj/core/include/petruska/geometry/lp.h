#ifndef PETRUSKA_GEOMETRY_LP_H_
#define PETRUSKA_GEOMETRY_LP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "petruska/geometry/rational.h"

namespace petruska::geom {

// coeffs · x <= rhs
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
};

enum class LpStatus { kInfeasible, kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  // A feasible point (the optimizer when status is kOptimal). Empty when
  // infeasible. For kUnbounded it is some feasible point.
  std::vector<Rat> point;
  // Optimum value; zero for pure feasibility queries.
  Rat value;
};

// Exact linear program over free variables:
//   maximize objective · x  subject to  A x <= b.
// An empty objective makes it a pure feasibility query. Solved with a
// two-phase dictionary simplex under Bland's rule, entirely in Rat.
LpSolution solve_lp(std::span<const LinearConstraint> constraints,
                    std::size_t num_vars,
                    std::span<const Rat> objective = {});

}  // namespace petruska::geom

#endif  // PETRUSKA_GEOMETRY_LP_H_
