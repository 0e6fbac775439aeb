#ifndef PETRUSKA_REDBLUE_CERTIFICATE_H_
#define PETRUSKA_REDBLUE_CERTIFICATE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "petruska/redblue/clique.h"

namespace petruska::rb {

struct Transversal {
  int u;
  int w;
};
// Three pairwise intersecting blue triples on exactly five vertices with no
// common vertex.
struct BlueC3 {
  std::array<Triple, 3> edges;
};
// Ring whose consecutive triples are exactly the blue triples on its vertices.
struct BlueCircularCycle {
  int k;
  std::vector<int> ring;
};
// Blue e, e' meeting in c, every f with |f∩e| = 2 and |f∩(e'∖c)| = 1 red.
struct H2Violation {
  Triple e;
  Triple e_prime;
  int shared;
};
// Disjoint blue e, e', every f with |f∩e| = 2 and |f∩e'| = 1 red.
struct H1Violation {
  Triple e;
  Triple e_prime;
};
struct NotTwoCollapsible {
  std::string fingerprint;
};
// Nothing fired.
struct Unresolved {};

using Certificate = std::variant<Transversal, BlueC3, BlueCircularCycle,
                                 H2Violation, H1Violation, NotTwoCollapsible,
                                 Unresolved>;

// "Transversal", "BlueC3", "BlueCircularCycle", "H2Violation", "H1Violation",
// "NotTwoCollapsible" or "Unresolved".
std::string_view certificate_tag(const Certificate& c);
std::string describe(const Certificate& c);

// Lexicographically least blue C3 by its sorted edge triple. With induced,
// only C3s whose span holds no further blue triple count; those are the
// ones a convex clique cannot contain.
std::optional<BlueC3> detect_blue_c3(const RedBlueClique& rb, bool induced = false);
bool is_blue_c3(const RedBlueClique& rb, const BlueC3& c);
bool is_induced_blue_c3(const RedBlueClique& rb, const BlueC3& c);

// Requires 6 <= k <= n. The ring starts at its least vertex and its second
// vertex is smaller than its last.
std::optional<BlueCircularCycle> detect_blue_circular_cycle(const RedBlueClique& rb,
                                                            int k);
bool is_blue_circular_cycle(const RedBlueClique& rb, const BlueCircularCycle& c);

// Ordered pairs (e, e') scanned in lexicographic order; first hit returned.
std::optional<H2Violation> check_h2(const RedBlueClique& rb);
bool is_h2_violation(const RedBlueClique& rb, const H2Violation& v);
std::optional<H1Violation> check_h1(const RedBlueClique& rb);
bool is_h1_violation(const RedBlueClique& rb, const H1Violation& v);

// Exhaustive search for a sequence of elementary 2-collapses (free face of at
// most two vertices in a unique facet) reducing the red clique complex to the
// empty complex. Failing states are memoized.
bool is_two_collapsible(const RedBlueClique& rb);
// Stable digest of the facet list of the red clique complex.
std::string complex_fingerprint(const RedBlueClique& rb);

// Fixed order: pair transversal of red clique_size-cliques, blue C3 (turned
// into the transversal of the two outside vertices when there are exactly
// two and they qualify; otherwise reported only if some C3 is induced), H1,
// H2, 2-collapsibility, else Unresolved.
Certificate convexity_certificate_battery(const RedBlueClique& rb, int clique_size);

// Re-derives a certificate from rb alone. Unresolved never rechecks.
bool recheck(const RedBlueClique& rb, const Certificate& c, int clique_size);

}  // namespace petruska::rb

#endif  // PETRUSKA_REDBLUE_CERTIFICATE_H_
