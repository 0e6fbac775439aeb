#ifndef PETRUSKA_REDBLUE_HYPERGRAPH_H_
#define PETRUSKA_REDBLUE_HYPERGRAPH_H_

#include <string>
#include <vector>

#include "petruska/redblue/triple.h"

namespace petruska::rb {

// 3-uniform hypergraph on [0, n).
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  // Throws petruska::Error when n is outside [3, 64] or an edge leaves [0, n).
  // Duplicate edges collapse.
  Hypergraph3(int n, const std::vector<Triple>& edges);
  Hypergraph3(int n, TripleSet edges);

  int n() const { return n_; }
  const TripleSet& edge_set() const { return edges_; }
  // Edges in lexicographic order.
  const std::vector<Triple>& edges() const { return list_; }
  std::size_t edge_count() const { return list_.size(); }
  bool has_edge(const Triple& t) const { return edges_.contains(t); }
  std::vector<int> degrees() const;
  // Relabels vertex v as perm[v].
  Hypergraph3 relabeled(const std::vector<int>& perm) const;
  Hypergraph3 with_edge(const Triple& t) const;

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  TripleSet edges_;
  std::vector<Triple> list_;
};

// Transversal number: the least |T| with T meeting every edge.
int tau(const Hypergraph3& h);
// Whether some set of at most `size` vertices meets every edge.
bool has_transversal_of_size(const Hypergraph3& h, int size);

// Vertex 4-sets all four of whose triples are edges, in lexicographic order.
std::vector<VertexSet> k4_subsets(const Hypergraph3& h);

__extension__ typedef unsigned __int128 Bits128;

// Canonical labeling up to isomorphism, as the least edge bitset (rank order,
// bit r = triple of rank r) over all relabelings that list vertices by
// non-increasing degree. 120 bits cover n <= 10.
struct CanonicalForm {
  int n = 0;
  Bits128 bits = 0;

  std::string hex() const;  // lowercase, no leading zeros
  Hypergraph3 hypergraph() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n < b.n || (a.n == b.n && a.bits < b.bits);
  }
};

// Throws petruska::Error("canonicalForm limited to n ≤ 10") for n > 10.
CanonicalForm canonical_form(const Hypergraph3& h);

inline bool isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
  return a.n() == b.n() && canonical_form(a) == canonical_form(b);
}

}  // namespace petruska::rb

#endif  // PETRUSKA_REDBLUE_HYPERGRAPH_H_
