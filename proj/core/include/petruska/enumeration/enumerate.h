#ifndef PETRUSKA_ENUMERATION_ENUMERATE_H_
#define PETRUSKA_ENUMERATION_ENUMERATE_H_

#include <cstdint>
#include <vector>

#include "petruska/redblue/hypergraph.h"

namespace petruska::enumeration {

struct EnumerationReport {
  int n = 0;
  // Canonical representatives, ordered by (edge count, canonical bits).
  std::vector<rb::Hypergraph3> classes;
  int with_k4 = 0;
  int without_k4 = 0;
  // Distinct isomorphism classes of partial hypergraphs generated.
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_pruned = 0;
  double wall_seconds = 0;
};

// Whether adding t to the edges creates a blue C3 (three pairwise meeting
// edges on five vertices with no common vertex).
bool creates_c3(const std::vector<rb::VertexSet>& edges, rb::VertexSet t);
bool is_c3_free(const rb::Hypergraph3& h);

// All isomorphism classes of C3-free 3-uniform hypergraphs on n vertices
// with transversal number at least 3. Edges are added one at a time and
// every level is reduced to canonical forms; a branch is cut when adding
// every remaining C3-compatible triple still leaves τ < 3. The result does
// not depend on `threads`. Requires 3 <= n <= 10.
EnumerationReport enumerate_tau3_c3_free(int n = 7, int threads = 1);

}  // namespace petruska::enumeration

#endif  // PETRUSKA_ENUMERATION_ENUMERATE_H_
