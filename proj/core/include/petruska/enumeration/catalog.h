#ifndef PETRUSKA_ENUMERATION_CATALOG_H_
#define PETRUSKA_ENUMERATION_CATALOG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "petruska/redblue/hypergraph.h"

namespace petruska::enumeration {

struct CatalogEntry {
  // A, A1, A2, A3, A4, B, B-, C7, F, F-, C, D, D+ or WH3.
  std::string name;
  rb::Hypergraph3 hypergraph;
  // Tag of the certificate the k=4 case analysis assigns to this class; WH3
  // is not part of that analysis and has none.
  std::optional<std::string> expected_certificate;
};

// The 13 C3-free classes on 7 vertices with τ = 3 (the seven containing a
// blue K4 first), followed by WH3 on 10 vertices. WH3 vertices 0..5 stand for
// the labels 1..6 and 6..9 for a..d.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace petruska::enumeration

#endif  // PETRUSKA_ENUMERATION_CATALOG_H_
