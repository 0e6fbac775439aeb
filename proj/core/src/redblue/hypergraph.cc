#include "petruska/redblue/hypergraph.h"

#include <algorithm>
#include <array>
#include <numeric>

#include "petruska/error.h"

namespace petruska::rb {

Hypergraph3::Hypergraph3(int n, const std::vector<Triple>& edges)
    : n_(n), edges_(n) {
  if (n < 3 || n > kMaxVertices) throw Error("vertex count must be between 3 and 64");
  for (const Triple& t : edges) {
    if (t.i < 0 || !(t.i < t.j && t.j < t.k)) throw Error("malformed triple");
    if (t.k >= n) throw Error("edge vertex out of range");
    edges_.insert(t);
  }
  list_ = edges_.to_vector();
  std::sort(list_.begin(), list_.end());
}

Hypergraph3::Hypergraph3(int n, TripleSet edges) : n_(n), edges_(std::move(edges)) {
  if (n < 3 || n > kMaxVertices) throw Error("vertex count must be between 3 and 64");
  if (edges_.n() != n) throw Error("triple set sized for a different n");
  list_ = edges_.to_vector();
  std::sort(list_.begin(), list_.end());
}

std::vector<int> Hypergraph3::degrees() const {
  std::vector<int> d(n_, 0);
  for (const Triple& t : list_) {
    ++d[t.i];
    ++d[t.j];
    ++d[t.k];
  }
  return d;
}

Hypergraph3 Hypergraph3::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size mismatch");
  std::vector<Triple> out;
  out.reserve(list_.size());
  for (const Triple& t : list_) out.push_back(Triple::make(perm[t.i], perm[t.j], perm[t.k]));
  return Hypergraph3(n_, out);
}

Hypergraph3 Hypergraph3::with_edge(const Triple& t) const {
  std::vector<Triple> out = list_;
  out.push_back(t);
  return Hypergraph3(n_, out);
}

namespace {

bool cover(const std::vector<VertexSet>& edges, VertexSet chosen, int budget) {
  for (VertexSet e : edges) {
    if (e & chosen) continue;
    if (budget == 0) return false;
    // Some vertex of this uncovered edge must be in the transversal.
    for (VertexSet rest = e; rest; rest &= rest - 1) {
      if (cover(edges, chosen | (rest & -rest), budget - 1)) return true;
    }
    return false;
  }
  return true;
}

std::vector<VertexSet> edge_masks(const Hypergraph3& h) {
  std::vector<VertexSet> m;
  m.reserve(h.edge_count());
  for (const Triple& t : h.edges()) m.push_back(t.mask());
  return m;
}

}  // namespace

bool has_transversal_of_size(const Hypergraph3& h, int size) {
  return size >= 0 && cover(edge_masks(h), 0, size);
}

int tau(const Hypergraph3& h) {
  const auto masks = edge_masks(h);
  int s = 0;
  while (!cover(masks, 0, s)) ++s;
  return s;
}

std::vector<VertexSet> k4_subsets(const Hypergraph3& h) {
  std::vector<VertexSet> out;
  const int n = h.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!h.has_edge(Triple{a, b, c})) continue;
        for (int d = c + 1; d < n; ++d) {
          if (h.has_edge(Triple{a, b, d}) && h.has_edge(Triple{a, c, d}) &&
              h.has_edge(Triple{b, c, d})) {
            out.push_back(bit(a) | bit(b) | bit(c) | bit(d));
          }
        }
      }
  return out;
}

std::string CanonicalForm::hex() const {
  if (bits == 0) return "0";
  std::string out;
  Bits128 v = bits;
  while (v) {
    out.push_back("0123456789abcdef"[static_cast<int>(v & 15)]);
    v >>= 4;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Hypergraph3 CanonicalForm::hypergraph() const {
  TripleSet s(n);
  for (std::size_t r = 0; r < s.capacity(); ++r) {
    if ((bits >> r) & 1) s.set(r);
  }
  return Hypergraph3(n, std::move(s));
}

namespace {

constexpr int kCanonMax = 10;

struct RankTable {
  std::array<std::uint8_t, kCanonMax * kCanonMax * kCanonMax> rank{};
  RankTable() {
    for (int a = 0; a < kCanonMax; ++a)
      for (int b = 0; b < kCanonMax; ++b)
        for (int c = 0; c < kCanonMax; ++c) {
          if (a == b || b == c || a == c) continue;
          rank[(a * kCanonMax + b) * kCanonMax + c] =
              static_cast<std::uint8_t>(Triple::make(a, b, c).index());
        }
  }
  int operator()(int a, int b, int c) const {
    return rank[(a * kCanonMax + b) * kCanonMax + c];
  }
};

const RankTable& rank_table() {
  static const RankTable table;
  return table;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph3& h) {
  const int n = h.n();
  if (n > kCanonMax) throw Error("canonicalForm limited to n ≤ 10");
  const RankTable& rank = rank_table();
  const std::vector<int> deg = h.degrees();

  // Vertices ordered by non-increasing degree; only relabelings that keep
  // this order are tried, which is an isomorphism-invariant restriction.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) into order
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && deg[order[e]] == deg[order[s]]) ++e;
    groups.emplace_back(s, e);
    s = e;
  }

  std::vector<int> label(n);
  Bits128 best = ~static_cast<Bits128>(0);
  const auto& edges = h.edges();
  for (;;) {
    for (int p = 0; p < n; ++p) label[order[p]] = p;
    Bits128 mask = 0;
    for (const Triple& t : edges) {
      mask |= static_cast<Bits128>(1) << rank(label[t.i], label[t.j], label[t.k]);
    }
    best = std::min(best, mask);

    // Odometer over the per-group permutations.
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [s, e] = groups[g];
      if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
    }
    if (g == groups.size()) break;
  }
  return CanonicalForm{n, edges.empty() ? 0 : best};
}

}  // namespace petruska::rb
