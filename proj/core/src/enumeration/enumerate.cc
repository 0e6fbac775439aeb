#include "petruska/enumeration/enumerate.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <thread>

#include "petruska/error.h"

namespace petruska::enumeration {

using rb::Bits128;
using rb::CanonicalForm;
using rb::Hypergraph3;
using rb::Triple;
using rb::VertexSet;

bool creates_c3(const std::vector<VertexSet>& edges, VertexSet t) {
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (!(edges[a] & t)) continue;
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const VertexSet x = edges[a], y = edges[b];
      if ((x & y) && (y & t) && !(x & y & t) && std::popcount(x | y | t) == 5) {
        return true;
      }
    }
  }
  return false;
}

bool is_c3_free(const Hypergraph3& h) {
  std::vector<VertexSet> seen;
  for (const Triple& t : h.edges()) {
    if (creates_c3(seen, t.mask())) return false;
    seen.push_back(t.mask());
  }
  return true;
}

namespace {

bool coverable(const std::vector<VertexSet>& edges, VertexSet chosen, int budget) {
  for (VertexSet e : edges) {
    if (e & chosen) continue;
    if (budget == 0) return false;
    for (VertexSet rest = e; rest; rest &= rest - 1) {
      if (coverable(edges, chosen | (rest & -rest), budget - 1)) return true;
    }
    return false;
  }
  return true;
}

struct Child {
  Bits128 canon;
  bool alive;
  bool operator<(const Child& o) const { return canon < o.canon; }
  bool operator==(const Child& o) const { return canon == o.canon; }
};

}  // namespace

EnumerationReport enumerate_tau3_c3_free(int n, int threads) {
  if (n < 3 || n > 10) throw Error("enumeration supports 3 ≤ n ≤ 10");
  const auto start = std::chrono::steady_clock::now();
  threads = std::max(1, threads);

  const std::size_t triple_count = rb::choose3(n);
  std::vector<VertexSet> triple_mask(triple_count);
  for (std::size_t r = 0; r < triple_count; ++r) {
    triple_mask[r] = Triple::from_index(r).mask();
  }

  EnumerationReport report;
  report.n = n;
  std::set<Bits128> seen = {0};
  std::vector<Bits128> frontier = {0};
  std::vector<Bits128> found;

  auto expand = [&](std::size_t begin, std::size_t stride, std::vector<Child>& out) {
    for (std::size_t f = begin; f < frontier.size(); f += stride) {
      const Bits128 node = frontier[f];
      std::vector<VertexSet> masks;
      for (std::size_t r = 0; r < triple_count; ++r) {
        if ((node >> r) & 1) masks.push_back(triple_mask[r]);
      }
      for (std::size_t r = 0; r < triple_count; ++r) {
        if ((node >> r) & 1) continue;
        if (creates_c3(masks, triple_mask[r])) continue;
        const Bits128 child_bits = node | (static_cast<Bits128>(1) << r);
        const Bits128 canon = rb::canonical_form(CanonicalForm{n, child_bits}.hypergraph()).bits;
        if (seen.count(canon)) continue;

        // Upper closure: the child plus every triple that is individually
        // C3-compatible with it. τ is monotone, so τ < 3 here kills the branch.
        std::vector<VertexSet> child = masks;
        child.push_back(triple_mask[r]);
        std::vector<VertexSet> closure = child;
        for (std::size_t s = 0; s < triple_count; ++s) {
          if ((child_bits >> s) & 1) continue;
          if (!creates_c3(child, triple_mask[s])) closure.push_back(triple_mask[s]);
        }
        out.push_back(Child{canon, !coverable(closure, 0, 2)});
      }
    }
  };

  while (!frontier.empty()) {
    std::vector<std::vector<Child>> parts(threads);
    if (threads == 1) {
      expand(0, 1, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back(expand, static_cast<std::size_t>(t),
                          static_cast<std::size_t>(threads), std::ref(parts[t]));
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Child> children;
    for (auto& p : parts) children.insert(children.end(), p.begin(), p.end());
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());

    std::vector<Bits128> next;
    for (const Child& c : children) {
      seen.insert(c.canon);
      ++report.nodes_visited;
      if (!c.alive) {
        ++report.nodes_pruned;
        continue;
      }
      next.push_back(c.canon);
      std::vector<VertexSet> masks;
      for (std::size_t r = 0; r < triple_count; ++r) {
        if ((c.canon >> r) & 1) masks.push_back(triple_mask[r]);
      }
      if (!coverable(masks, 0, 2)) found.push_back(c.canon);
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<int, Bits128>> order;
  for (Bits128 b : found) {
    const int edges = std::popcount(static_cast<std::uint64_t>(b)) +
                      std::popcount(static_cast<std::uint64_t>(b >> 64));
    order.emplace_back(edges, b);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [edges, b] : order) {
    Hypergraph3 h = CanonicalForm{n, b}.hypergraph();
    if (rb::tau(h) < 3) throw InvariantError("enumeration kept a class with τ < 3");
    if (rb::k4_subsets(h).empty()) {
      ++report.without_k4;
    } else {
      ++report.with_k4;
    }
    report.classes.push_back(std::move(h));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace petruska::enumeration
