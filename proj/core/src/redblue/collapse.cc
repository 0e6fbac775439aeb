#include <algorithm>
#include <bit>
#include <cstdio>
#include <set>
#include <vector>

#include "petruska/redblue/certificate.h"

namespace petruska::rb {
namespace {

using Facets = std::vector<VertexSet>;

// Maximal faces of the red clique complex.
Facets facets_of(const RedBlueClique& rb) {
  Facets out;
  const int n = rb.n();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (rb.red_link(u, w) == 0) out.push_back(bit(u) | bit(w));
    }
  }
  for (int size = 3;; ++size) {
    std::vector<VertexSet> level = red_cliques(rb, size);
    if (level.empty()) break;
    for (VertexSet c : level) {
      VertexSet ext = ~VertexSet{0};
      for (VertexSet x = c; x; x &= x - 1) {
        const int u = std::countr_zero(x);
        for (VertexSet y = x & (x - 1); y; y &= y - 1) {
          ext &= rb.red_link(u, std::countr_zero(y));
        }
      }
      if ((ext & ~c) == 0) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Collapser {
 public:
  bool run(const Facets& state) {
    if (state.empty()) return true;
    if (failed_.count(state)) return false;
    for (std::size_t m = 0; m < state.size(); ++m) {
      const VertexSet facet = state[m];
      // Singletons first, then pairs.
      for (int size = 1; size <= 2; ++size) {
        for (VertexSet sigma : small_subsets(facet, size)) {
          if (!free_in(state, m, sigma)) continue;
          if (run(collapse(state, m, sigma))) return true;
        }
      }
    }
    failed_.insert(state);
    return false;
  }

 private:
  static std::vector<VertexSet> small_subsets(VertexSet facet, int size) {
    std::vector<VertexSet> out;
    for (VertexSet x = facet; x; x &= x - 1) {
      const VertexSet a = x & -x;
      if (size == 1) {
        out.push_back(a);
        continue;
      }
      for (VertexSet y = x & (x - 1); y; y &= y - 1) out.push_back(a | (y & -y));
    }
    return out;
  }

  static bool free_in(const Facets& state, std::size_t m, VertexSet sigma) {
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (i != m && (state[i] & sigma) == sigma) return false;
    }
    return true;
  }

  // Removes every face between sigma and its facet; what survives of the
  // facet is the family of facet∖{v}, v in sigma.
  static Facets collapse(const Facets& state, std::size_t m, VertexSet sigma) {
    Facets next;
    next.reserve(state.size() + 2);
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (i != m) next.push_back(state[i]);
    }
    const VertexSet facet = state[m];
    const std::size_t others = next.size();
    for (VertexSet x = sigma; x; x &= x - 1) {
      const VertexSet face = facet & ~(x & -x);
      if (face == 0) continue;
      bool covered = false;
      for (std::size_t i = 0; i < others && !covered; ++i) {
        covered = (next[i] & face) == face;
      }
      if (!covered) next.push_back(face);
    }
    std::sort(next.begin(), next.end());
    return next;
  }

  std::set<Facets> failed_;
};

}  // namespace

bool is_two_collapsible(const RedBlueClique& rb) {
  Collapser c;
  return c.run(facets_of(rb));
}

std::string complex_fingerprint(const RedBlueClique& rb) {
  const Facets f = facets_of(rb);
  // FNV-1a over the sorted facet masks.
  std::uint64_t h = 1469598103934665603ull;
  for (VertexSet s : f) {
    for (int b = 0; b < 8; ++b) {
      h ^= (s >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "n%d-f%zu-%016llx", rb.n(), f.size(),
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace petruska::rb
