#include "petruska/enumeration/catalog.h"

#include "petruska/error.h"

namespace petruska::enumeration {
namespace {

using rb::Triple;

std::vector<Triple> parse(std::initializer_list<const char*> edges) {
  std::vector<Triple> out;
  for (const char* e : edges) out.push_back(Triple::make(e[0] - '0', e[1] - '0', e[2] - '0'));
  return out;
}

CatalogEntry entry(std::string name, int n, std::initializer_list<const char*> edges,
                   std::optional<std::string> expected) {
  return CatalogEntry{std::move(name), rb::Hypergraph3(n, parse(edges)),
                      std::move(expected)};
}

std::vector<CatalogEntry> build() {
  const std::string kT = "Transversal", kH1 = "H1Violation", kH2 = "H2Violation",
                    kNC = "NotTwoCollapsible";
  // K0 = {0,1,2,3} is the blue K4 where one exists.
  return {
      entry("A", 7, {"012", "013", "023", "123", "456"}, kT),
      entry("A1", 7, {"012", "013", "023", "123", "456", "045"}, kT),
      entry("A2", 7, {"012", "013", "023", "123", "456", "045", "146"}, kT),
      entry("A3", 7, {"012", "013", "023", "123", "456", "045", "046"}, kT),
      entry("A4", 7, {"012", "013", "023", "123", "456", "045", "046", "056"}, kT),
      entry("B", 7, {"012", "013", "023", "123", "456", "045", "146", "256"}, kT),
      entry("B-", 7, {"012", "013", "023", "123", "045", "146", "256"}, kH2),
      entry("C7", 7, {"012", "013", "024", "135", "246", "356", "456"}, kNC),
      entry("F", 7, {"012", "034", "056", "135", "146", "236", "245"}, kH2),
      entry("F-", 7, {"012", "034", "056", "135", "146", "236"}, kH2),
      entry("C", 7, {"012", "034", "056", "135", "246"}, kH1),
      entry("D", 7, {"012", "013", "023", "145", "246", "356"}, kH2),
      entry("D+", 7, {"012", "013", "023", "145", "246", "356", "456"}, kH2),
      entry("WH3", 10,
            {"678", "679", "689", "789", "067", "168", "269", "378", "479", "589"},
            std::nullopt),
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw Error("no catalog entry named '" + std::string(name) + "'");
}

}  // namespace petruska::enumeration
