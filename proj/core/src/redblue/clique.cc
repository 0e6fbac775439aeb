#include "petruska/redblue/clique.h"

#include <bit>
#include <functional>

#include "petruska/error.h"

namespace petruska::rb {

RedBlueClique::RedBlueClique(int n, TripleSet blue)
    : n_(n), blue_(std::move(blue)) {
  if (n < 3 || n > kMaxVertices) throw Error("red/blue clique needs 3 ≤ n ≤ 64");
  if (blue_.n() != n) throw Error("triple set sized for a different n");
  blue_graph_ = Hypergraph3(n, blue_);
  red_link_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      VertexSet link = 0;
      for (int v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (!blue_.contains(Triple::make(u, w, v))) link |= bit(v);
      }
      red_link_[u * n + w] = link;
      red_link_[w * n + u] = link;
    }
  }
}

RedBlueClique RedBlueClique::from_blue(const Hypergraph3& blue) {
  return RedBlueClique(blue.n(), blue.edge_set());
}

RedBlueClique RedBlueClique::from_blue(int n, const std::vector<Triple>& blue) {
  return from_blue(Hypergraph3(n, blue));
}

RedBlueClique RedBlueClique::all_red(int n) { return RedBlueClique(n, TripleSet(n)); }

namespace {

VertexSet above(int v) { return v >= 63 ? 0 : ~((VertexSet{2} << v) - 1); }

// Visits every red clique (including singletons and pairs) in lexicographic
// order; `visit` returns false to skip the subtree.
void walk(const RedBlueClique& rb, VertexSet clique, VertexSet cand,
          const std::function<bool(VertexSet)>& visit) {
  for (VertexSet rest = cand; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    VertexSet next = cand & above(v);
    for (VertexSet c = clique; c; c &= c - 1) {
      next &= rb.red_link(std::countr_zero(c), v);
    }
    const VertexSet grown = clique | bit(v);
    if (visit(grown)) walk(rb, grown, next, visit);
  }
}

}  // namespace

std::vector<VertexSet> red_cliques(const RedBlueClique& rb, int size) {
  if (size < 3) throw Error("clique size must be at least 3");
  std::vector<VertexSet> out;
  walk(rb, 0, rb.all_vertices(), [&](VertexSet c) {
    const int s = std::popcount(c);
    if (s == size) out.push_back(c);
    return s < size;
  });
  return out;
}

int clique_number(const RedBlueClique& rb) {
  int best = 0;
  walk(rb, 0, rb.all_vertices(), [&](VertexSet c) {
    best = std::max(best, std::popcount(c));
    return true;
  });
  return best;
}

bool is_transversal(const RedBlueClique& rb, VertexSet t, int clique_size) {
  for (VertexSet c : red_cliques(rb, clique_size)) {
    if (!(c & t)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_pair_transversal(const RedBlueClique& rb,
                                                         int clique_size) {
  const std::vector<VertexSet> cliques = red_cliques(rb, clique_size);
  for (int u = 0; u < rb.n(); ++u) {
    for (int w = u + 1; w < rb.n(); ++w) {
      const VertexSet t = bit(u) | bit(w);
      bool hits = true;
      for (VertexSet c : cliques) {
        if (!(c & t)) {
          hits = false;
          break;
        }
      }
      if (hits) return std::make_pair(u, w);
    }
  }
  return std::nullopt;
}

std::string FVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries[k]);
  }
  return out + ")";
}

bool operator==(const FVector& a, const FVector& b) {
  const std::size_t len = std::max(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (a.at(k) != b.at(k)) return false;
  }
  return true;
}

FVector f_vector(const RedBlueClique& rb) {
  FVector f;
  walk(rb, 0, rb.all_vertices(), [&](VertexSet c) {
    const std::size_t s = std::popcount(c);
    if (f.entries.size() < s) f.entries.resize(s, 0);
    ++f.entries[s - 1];
    return true;
  });
  return f;
}

}  // namespace petruska::rb
