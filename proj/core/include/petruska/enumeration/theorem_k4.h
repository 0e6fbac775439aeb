#ifndef PETRUSKA_ENUMERATION_THEOREM_K4_H_
#define PETRUSKA_ENUMERATION_THEOREM_K4_H_

#include <cstdint>
#include <string>
#include <vector>

#include "petruska/enumeration/enumerate.h"
#include "petruska/redblue/certificate.h"

namespace petruska::enumeration {

struct ClassOutcome {
  std::string name;
  // What the fixed-order battery returns, and whether it re-derives.
  rb::Certificate battery;
  bool battery_rechecked = false;
  // The certificate kind assigned by the case analysis, produced by its own
  // detector and re-derived.
  std::string expected_tag;
  rb::Certificate designated;
  bool designated_rechecked = false;

  bool resolved() const;
  bool matches_expected() const;
};

struct TheoremK4Report {
  EnumerationReport enumeration;
  // Each enumerated class matched exactly one catalog entry and vice versa.
  bool classification_matches_catalog = false;
  std::vector<std::string> unmatched;
  std::vector<ClassOutcome> classes;
  // Every labeled C3 on 7 vertices leaves a 2-set meeting all 4-sets free of
  // its edges, i.e. every red K4 of any clique containing it.
  std::uint64_t c3_configurations_checked = 0;
  bool c3_transversal_lemma_holds = false;

  bool passed() const;
};

TheoremK4Report verify_theorem_k4(int threads = 1);

// Requires n = 7 and no red K5 (throws petruska::Error("hypothesis violated:
// red K5") otherwise); returns the battery outcome for red 4-cliques.
rb::Certificate classify_rb7(const rb::RedBlueClique& rb);

}  // namespace petruska::enumeration

#endif  // PETRUSKA_ENUMERATION_THEOREM_K4_H_
