#ifndef PETRUSKA_REDBLUE_CLIQUE_H_
#define PETRUSKA_REDBLUE_CLIQUE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "petruska/redblue/hypergraph.h"
#include "petruska/redblue/triple.h"

namespace petruska::rb {

// 2-colouring of all triples of [0, n); red is the complement of blue.
class RedBlueClique {
 public:
  // Throws petruska::Error unless 3 <= n <= 64.
  RedBlueClique(int n, TripleSet blue);
  static RedBlueClique from_blue(const Hypergraph3& blue);
  static RedBlueClique from_blue(int n, const std::vector<Triple>& blue);
  static RedBlueClique all_red(int n);

  int n() const { return n_; }
  const TripleSet& blue_set() const { return blue_; }
  const Hypergraph3& blue() const { return blue_graph_; }
  bool is_blue(const Triple& t) const { return blue_.contains(t); }
  bool is_red(const Triple& t) const { return !blue_.contains(t); }
  // Vertices v with {u, w, v} red.
  VertexSet red_link(int u, int w) const { return red_link_[u * n_ + w]; }
  VertexSet all_vertices() const {
    return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1;
  }

  friend bool operator==(const RedBlueClique& a, const RedBlueClique& b) {
    return a.n_ == b.n_ && a.blue_ == b.blue_;
  }

 private:
  int n_;
  TripleSet blue_;
  Hypergraph3 blue_graph_;
  std::vector<VertexSet> red_link_;
};

// Vertex sets of the given size all of whose triples are red, in
// lexicographic order of their sorted vertex lists. Throws for size < 3.
std::vector<VertexSet> red_cliques(const RedBlueClique& rb, int size);

// Largest s with a red clique on s vertices (2 when every triple is blue).
int clique_number(const RedBlueClique& rb);

// First pair {u, w} (lexicographic) meeting every red clique of the given
// size. Throws for clique_size < 3.
std::optional<std::pair<int, int>> find_pair_transversal(const RedBlueClique& rb,
                                                         int clique_size);
bool is_transversal(const RedBlueClique& rb, VertexSet t, int clique_size);

// Face counts of the red clique complex: every vertex and pair is a face, and
// a larger vertex set is a face iff all its triples are red.
struct FVector {
  std::vector<std::uint64_t> entries;

  std::uint64_t at(std::size_t k) const {
    return k < entries.size() ? entries[k] : 0;
  }
  std::string to_string() const;  // "(7,21,28,7)"

  // Trailing zeros are not significant.
  friend bool operator==(const FVector& a, const FVector& b);
};

FVector f_vector(const RedBlueClique& rb);

}  // namespace petruska::rb

#endif  // PETRUSKA_REDBLUE_CLIQUE_H_
