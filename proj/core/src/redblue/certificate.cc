#include "petruska/redblue/certificate.h"

#include <algorithm>
#include <bit>

#include "petruska/error.h"

namespace petruska::rb {

std::string_view certificate_tag(const Certificate& c) {
  struct {
    std::string_view operator()(const Transversal&) const { return "Transversal"; }
    std::string_view operator()(const BlueC3&) const { return "BlueC3"; }
    std::string_view operator()(const BlueCircularCycle&) const {
      return "BlueCircularCycle";
    }
    std::string_view operator()(const H2Violation&) const { return "H2Violation"; }
    std::string_view operator()(const H1Violation&) const { return "H1Violation"; }
    std::string_view operator()(const NotTwoCollapsible&) const {
      return "NotTwoCollapsible";
    }
    std::string_view operator()(const Unresolved&) const { return "Unresolved"; }
  } tag;
  return std::visit(tag, c);
}

std::string describe(const Certificate& c) {
  std::string tag(certificate_tag(c));
  if (auto* t = std::get_if<Transversal>(&c)) {
    return tag + " {" + std::to_string(t->u) + "," + std::to_string(t->w) + "}";
  }
  if (auto* b = std::get_if<BlueC3>(&c)) {
    return tag + " " + b->edges[0].to_string() + " " + b->edges[1].to_string() +
           " " + b->edges[2].to_string();
  }
  if (auto* r = std::get_if<BlueCircularCycle>(&c)) {
    std::string s = tag + " k=" + std::to_string(r->k) + " ring";
    for (int v : r->ring) s += " " + std::to_string(v);
    return s;
  }
  if (auto* h = std::get_if<H2Violation>(&c)) {
    return tag + " e=" + h->e.to_string() + " e'=" + h->e_prime.to_string() +
           " c=" + std::to_string(h->shared);
  }
  if (auto* h = std::get_if<H1Violation>(&c)) {
    return tag + " e=" + h->e.to_string() + " e'=" + h->e_prime.to_string();
  }
  if (auto* x = std::get_if<NotTwoCollapsible>(&c)) {
    return tag + " " + x->fingerprint;
  }
  return tag;
}

bool is_blue_c3(const RedBlueClique& rb, const BlueC3& c) {
  const auto& [a, b, d] = c.edges;
  for (const Triple& t : c.edges) {
    if (t.k >= rb.n() || !rb.is_blue(t)) return false;
  }
  const VertexSet ma = a.mask(), mb = b.mask(), md = d.mask();
  return (ma & mb) && (mb & md) && (ma & md) && !(ma & mb & md) &&
         std::popcount(ma | mb | md) == 5;
}

bool is_induced_blue_c3(const RedBlueClique& rb, const BlueC3& c) {
  if (!is_blue_c3(rb, c)) return false;
  const VertexSet span = c.edges[0].mask() | c.edges[1].mask() | c.edges[2].mask();
  int blue = 0;
  for (const Triple& t : rb.blue().edges()) {
    if ((t.mask() & ~span) == 0) ++blue;
  }
  return blue == 3;
}

std::optional<BlueC3> detect_blue_c3(const RedBlueClique& rb, bool induced) {
  // Intersection sizes of a C3 sum to 4 with no common vertex, so two of its
  // edges share a pair {s1,s2}: edges {s1,s2,x}, {s1,s2,y}, {x,y,z}, z new.
  const auto& edges = rb.blue().edges();
  std::optional<BlueC3> best;
  for (std::size_t p = 0; p < edges.size(); ++p) {
    for (std::size_t q = p + 1; q < edges.size(); ++q) {
      const VertexSet shared = edges[p].mask() & edges[q].mask();
      if (std::popcount(shared) != 2) continue;
      const int x = std::countr_zero(edges[p].mask() & ~shared);
      const int y = std::countr_zero(edges[q].mask() & ~shared);
      const VertexSet used = edges[p].mask() | edges[q].mask();
      for (int z = 0; z < rb.n(); ++z) {
        if (used & bit(z)) continue;
        const Triple third = Triple::make(x, y, z);
        if (!rb.is_blue(third)) continue;
        BlueC3 cand{{edges[p], edges[q], third}};
        std::sort(cand.edges.begin(), cand.edges.end());
        if (induced && !is_induced_blue_c3(rb, cand)) continue;
        if (!best || cand.edges < best->edges) best = cand;
      }
    }
  }
  return best;
}

bool is_blue_circular_cycle(const RedBlueClique& rb, const BlueCircularCycle& c) {
  const int k = c.k;
  if (k < 6 || static_cast<int>(c.ring.size()) != k) return false;
  VertexSet span = 0;
  for (int v : c.ring) {
    if (v < 0 || v >= rb.n() || (span & bit(v))) return false;
    span |= bit(v);
  }
  std::vector<Triple> consecutive;
  for (int i = 0; i < k; ++i) {
    Triple t = Triple::make(c.ring[i], c.ring[(i + 1) % k], c.ring[(i + 2) % k]);
    if (!rb.is_blue(t)) return false;
    consecutive.push_back(t);
  }
  for (const Triple& t : rb.blue().edges()) {
    if ((t.mask() & span) != t.mask()) continue;
    if (std::find(consecutive.begin(), consecutive.end(), t) == consecutive.end()) {
      return false;
    }
  }
  return true;
}

namespace {

struct CycleSearch {
  const RedBlueClique& rb;
  int k;
  std::vector<int> path;
  VertexSet used = 0;

  bool blue(int a, int b, int c) const { return rb.is_blue(Triple::make(a, b, c)); }

  // Every triple among path vertices must be red, except consecutive ones
  // and the two that close the ring.
  bool admissible(int v) const {
    const int m = static_cast<int>(path.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (!blue(path[a], path[b], v)) continue;
        const bool consecutive = a == m - 2 && b == m - 1;
        const bool closing = m == k - 1 && a == 0 && (b == k - 2 || b == 1);
        if (!consecutive && !closing) return false;
      }
    }
    if (m >= 2 && !blue(path[m - 2], path[m - 1], v)) return false;
    if (m == k - 1) {
      if (!blue(path[k - 2], v, path[0]) || !blue(v, path[0], path[1])) return false;
      if (v < path[1]) return false;  // fixes the reflection
    }
    return true;
  }

  bool extend() {
    if (static_cast<int>(path.size()) == k) return true;
    for (int v = path[0] + 1; v < rb.n(); ++v) {
      if ((used & bit(v)) || !admissible(v)) continue;
      path.push_back(v);
      used |= bit(v);
      if (extend()) return true;
      path.pop_back();
      used &= ~bit(v);
    }
    return false;
  }
};

}  // namespace

std::optional<BlueCircularCycle> detect_blue_circular_cycle(const RedBlueClique& rb,
                                                            int k) {
  if (k < 6 || k > rb.n()) throw Error("circular cycle length must satisfy 6 ≤ k ≤ n");
  for (int start = 0; start + k <= rb.n(); ++start) {
    CycleSearch s{rb, k, {start}, bit(start)};
    if (s.extend()) return BlueCircularCycle{k, s.path};
  }
  return std::nullopt;
}

namespace {

std::array<VertexSet, 3> pairs_of(const Triple& e) {
  return {bit(e.i) | bit(e.j), bit(e.i) | bit(e.k), bit(e.j) | bit(e.k)};
}

// Every f = (pair of e) + (vertex of `others`) is red.
bool all_red(const RedBlueClique& rb, const Triple& e, VertexSet others) {
  for (VertexSet pair : pairs_of(e)) {
    const int a = std::countr_zero(pair);
    const int b = 63 - std::countl_zero(pair);
    if ((rb.red_link(a, b) & others) != others) return false;
  }
  return true;
}

bool valid_blue(const RedBlueClique& rb, const Triple& t) {
  return t.i >= 0 && t.i < t.j && t.j < t.k && t.k < rb.n() && rb.is_blue(t);
}

}  // namespace

bool is_h2_violation(const RedBlueClique& rb, const H2Violation& v) {
  if (!valid_blue(rb, v.e) || !valid_blue(rb, v.e_prime)) return false;
  const VertexSet shared = v.e.mask() & v.e_prime.mask();
  if (std::popcount(shared) != 1 || shared != bit(v.shared)) return false;
  return all_red(rb, v.e, v.e_prime.mask() & ~shared);
}

std::optional<H2Violation> check_h2(const RedBlueClique& rb) {
  const auto& edges = rb.blue().edges();
  for (const Triple& e : edges) {
    for (const Triple& f : edges) {
      const VertexSet shared = e.mask() & f.mask();
      if (std::popcount(shared) != 1) continue;
      if (all_red(rb, e, f.mask() & ~shared)) {
        return H2Violation{e, f, std::countr_zero(shared)};
      }
    }
  }
  return std::nullopt;
}

bool is_h1_violation(const RedBlueClique& rb, const H1Violation& v) {
  if (!valid_blue(rb, v.e) || !valid_blue(rb, v.e_prime)) return false;
  if (v.e.mask() & v.e_prime.mask()) return false;
  return all_red(rb, v.e, v.e_prime.mask());
}

std::optional<H1Violation> check_h1(const RedBlueClique& rb) {
  const auto& edges = rb.blue().edges();
  for (const Triple& e : edges) {
    for (const Triple& f : edges) {
      if (e.mask() & f.mask()) continue;
      if (all_red(rb, e, f.mask())) return H1Violation{e, f};
    }
  }
  return std::nullopt;
}

Certificate convexity_certificate_battery(const RedBlueClique& rb, int clique_size) {
  if (auto t = find_pair_transversal(rb, clique_size)) {
    return Transversal{t->first, t->second};
  }
  if (auto c3 = detect_blue_c3(rb)) {
    VertexSet span = 0;
    for (const Triple& t : c3->edges) span |= t.mask();
    const VertexSet outside = rb.all_vertices() & ~span;
    if (std::popcount(outside) == 2 && is_transversal(rb, outside, clique_size)) {
      return Transversal{std::countr_zero(outside), 63 - std::countl_zero(outside)};
    }
    if (auto induced = detect_blue_c3(rb, true)) return *induced;
  }
  if (auto v = check_h1(rb)) return *v;
  if (auto v = check_h2(rb)) return *v;
  if (!is_two_collapsible(rb)) return NotTwoCollapsible{complex_fingerprint(rb)};
  return Unresolved{};
}

bool recheck(const RedBlueClique& rb, const Certificate& c, int clique_size) {
  if (auto* t = std::get_if<Transversal>(&c)) {
    if (t->u < 0 || t->w >= rb.n() || t->u >= t->w) return false;
    return is_transversal(rb, bit(t->u) | bit(t->w), clique_size);
  }
  if (auto* b = std::get_if<BlueC3>(&c)) return is_induced_blue_c3(rb, *b);
  if (auto* r = std::get_if<BlueCircularCycle>(&c)) return is_blue_circular_cycle(rb, *r);
  if (auto* h = std::get_if<H2Violation>(&c)) return is_h2_violation(rb, *h);
  if (auto* h = std::get_if<H1Violation>(&c)) return is_h1_violation(rb, *h);
  if (auto* x = std::get_if<NotTwoCollapsible>(&c)) {
    return x->fingerprint == complex_fingerprint(rb) && !is_two_collapsible(rb);
  }
  return false;
}

}  // namespace petruska::rb
