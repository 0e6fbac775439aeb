#include "petruska/enumeration/theorem_k4.h"

#include <bit>
#include <map>

#include "petruska/enumeration/catalog.h"
#include "petruska/error.h"

namespace petruska::enumeration {

using rb::Certificate;
using rb::RedBlueClique;
using rb::VertexSet;

bool ClassOutcome::resolved() const {
  const auto tag = rb::certificate_tag(battery);
  return battery_rechecked && tag != "Unresolved" && tag != "BlueC3";
}

bool ClassOutcome::matches_expected() const {
  return designated_rechecked && rb::certificate_tag(designated) == expected_tag;
}

bool TheoremK4Report::passed() const {
  if (enumeration.classes.size() != 13 || enumeration.with_k4 != 7 ||
      enumeration.without_k4 != 6) {
    return false;
  }
  if (!classification_matches_catalog || !c3_transversal_lemma_holds) return false;
  for (const ClassOutcome& c : classes) {
    if (!c.resolved() || !c.matches_expected()) return false;
  }
  return classes.size() == 13;
}

namespace {

constexpr int kCliqueSize = 4;

Certificate designated_certificate(const RedBlueClique& rb, const std::string& tag) {
  if (tag == "Transversal") {
    if (auto t = rb::find_pair_transversal(rb, kCliqueSize)) {
      return rb::Transversal{t->first, t->second};
    }
  } else if (tag == "H1Violation") {
    if (auto v = rb::check_h1(rb)) return *v;
  } else if (tag == "H2Violation") {
    if (auto v = rb::check_h2(rb)) return *v;
  } else if (tag == "NotTwoCollapsible") {
    if (!rb::is_two_collapsible(rb)) {
      return rb::NotTwoCollapsible{rb::complex_fingerprint(rb)};
    }
  }
  return rb::Unresolved{};
}

// For every C3 on seven labelled vertices, every 4-set avoiding all three of
// its edges meets the two vertices outside its span.
bool c3_transversal_lemma(std::uint64_t& checked) {
  constexpr int n = 7;
  std::vector<VertexSet> triples, quads;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (std::popcount(s) == 3) triples.push_back(s);
    if (std::popcount(s) == 4) quads.push_back(s);
  }
  bool ok = true;
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b)
      for (std::size_t c = b + 1; c < triples.size(); ++c) {
        const VertexSet x = triples[a], y = triples[b], z = triples[c];
        if (!(x & y) || !(y & z) || !(x & z) || (x & y & z) ||
            std::popcount(x | y | z) != 5) {
          continue;
        }
        ++checked;
        const VertexSet outside = ((VertexSet{1} << n) - 1) & ~(x | y | z);
        for (VertexSet q : quads) {
          const bool avoids = (q & x) != x && (q & y) != y && (q & z) != z;
          if (avoids && !(q & outside)) ok = false;
        }
      }
  return ok;
}

}  // namespace

TheoremK4Report verify_theorem_k4(int threads) {
  TheoremK4Report report;
  report.enumeration = enumerate_tau3_c3_free(7, threads);

  std::map<std::string, std::string> by_form;  // canonical hex -> catalog name
  for (const CatalogEntry& e : catalog()) {
    if (e.hypergraph.n() != 7) continue;
    by_form[rb::canonical_form(e.hypergraph).hex()] = e.name;
  }
  std::map<std::string, int> hits;
  for (const auto& h : report.enumeration.classes) {
    auto it = by_form.find(rb::canonical_form(h).hex());
    if (it == by_form.end()) {
      report.unmatched.push_back("enumerated class " + rb::canonical_form(h).hex());
    } else {
      ++hits[it->second];
    }
  }
  for (const auto& [form, name] : by_form) {
    if (hits[name] != 1) report.unmatched.push_back("catalog entry " + name);
  }
  report.classification_matches_catalog =
      report.unmatched.empty() && by_form.size() == 13;

  for (const CatalogEntry& e : catalog()) {
    if (!e.expected_certificate) continue;
    const RedBlueClique rb = RedBlueClique::from_blue(e.hypergraph);
    ClassOutcome out;
    out.name = e.name;
    out.battery = rb::convexity_certificate_battery(rb, kCliqueSize);
    out.battery_rechecked = rb::recheck(rb, out.battery, kCliqueSize);
    out.expected_tag = *e.expected_certificate;
    out.designated = designated_certificate(rb, out.expected_tag);
    out.designated_rechecked = rb::recheck(rb, out.designated, kCliqueSize);
    report.classes.push_back(std::move(out));
  }

  report.c3_transversal_lemma_holds = c3_transversal_lemma(report.c3_configurations_checked);
  return report;
}

Certificate classify_rb7(const RedBlueClique& rb) {
  if (rb.n() != 7) throw Error("classifyRB7 requires n = 7");
  if (!rb::red_cliques(rb, 5).empty()) throw Error("hypothesis violated: red K5");
  return rb::convexity_certificate_battery(rb, kCliqueSize);
}

}  // namespace petruska::enumeration
