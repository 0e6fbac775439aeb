// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "petruska/bounds/bounds.h"
#include "petruska/constructions/constructions.h"
#include "petruska/constructions/verify.h"
#include "petruska/enumeration/catalog.h"
#include "petruska/enumeration/enumerate.h"
#include "petruska/enumeration/theorem_k4.h"
#include "petruska/geometry/hole_triangle.h"
#include "petruska/geometry/sampling.h"
#include "petruska/redblue/certificate.h"

namespace {

using namespace petruska;

int threads() {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(std::min(h, 8u));
}

// Collects the reasons a criterion failed.
struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

bool contains_k4(const rb::Hypergraph3& h) { return !rb::k4_subsets(h).empty(); }

void classification(Check& c) {
  const auto r = enumeration::enumerate_tau3_c3_free(7, threads());
  int with = 0, without = 0;
  for (const auto& h : r.classes) (contains_k4(h) ? with : without)++;
  c.require(r.classes.size() == 13, std::to_string(r.classes.size()) + " classes");
  c.require(with == 7 && without == 6,
            "split " + std::to_string(with) + "/" + std::to_string(without));
}

void theorem_k4(Check& c) {
  const std::map<std::string, std::string> want = {
      {"A", "Transversal"},      {"A1", "Transversal"},     {"A2", "Transversal"},
      {"A3", "Transversal"},     {"A4", "Transversal"},     {"B", "Transversal"},
      {"C7", "NotTwoCollapsible"}, {"C", "H1Violation"},    {"B-", "H2Violation"},
      {"F", "H2Violation"},      {"F-", "H2Violation"},     {"D", "H2Violation"},
      {"D+", "H2Violation"},
  };
  const auto r = enumeration::verify_theorem_k4(threads());
  c.require(r.classification_matches_catalog, "classes do not match the catalog");
  c.require(r.classes.size() == want.size(), std::to_string(r.classes.size()) + " outcomes");
  for (const auto& o : r.classes) {
    const auto it = want.find(o.name);
    c.require(it != want.end(), "unexpected class " + o.name);
    if (it == want.end()) continue;
    c.require(std::string(rb::certificate_tag(o.designated)) == it->second,
              o.name + " gave " + std::string(rb::certificate_tag(o.designated)));
    c.require(o.designated_rechecked, o.name + " certificate does not re-check");
    c.require(!std::holds_alternative<rb::Unresolved>(o.battery) && o.battery_rechecked,
              o.name + " unresolved by the battery");
  }
}

void nine_sets(Check& c) {
  const auto f = constructions::nine_sets();
  int nonempty = 0, subsets = 0;
  for (unsigned m = 0; m < 512; ++m) {
    if (__builtin_popcount(m) != 6) continue;
    ++subsets;
    std::vector<geom::ConvexBody> six;
    for (int b = 0; b < 9; ++b)
      if ((m >> b) & 1) six.push_back(f.bodies()[b]);
    nonempty += geom::intersect_nonempty(six).has_value();
  }
  c.require(subsets == 84 && nonempty == 0, std::to_string(nonempty) + " six-subsets meet");
  const auto nerve = constructions::compute_nerve(f);
  const auto fv = rb::f_vector(nerve);
  // Seen through 6-faces: the trailing entry is the (empty) count of those.
  std::vector<std::uint64_t> six(6, 0);
  for (std::size_t i = 0; i < fv.entries.size(); ++i) {
    if (i < 6) six[i] = fv.entries[i];
    else c.require(fv.entries[i] == 0, "non-zero f-vector tail");
  }
  c.require(six == std::vector<std::uint64_t>{9, 36, 61, 45, 12, 0}, "f-vector " + fv.to_string());
  const auto region = constructions::region_coverage(f, 5);
  c.require(region.pairs.size() == 36 && region.every_pair_escapes, "a pair covers the 5-covered set");
  c.require(!rb::find_pair_transversal(nerve, 5), "nerve has a pair transversal");
}

void two_k(Check& c) {
  const auto f4 = constructions::two_k(4);
  const auto r4 = constructions::verify_counterexample(f4, 4);
  c.require(f4.size() == 8, "two-k(4) has " + std::to_string(f4.size()) + " bodies");
  c.require(r4.passed() && r4.max_cover_ok, "two-k(4) verifier");
  c.require(constructions::verify_k_covered_region_pair_uncoverable(f4, 4), "two-k(4) region");
  for (int k = 2; k <= 6; ++k) {
    const auto f = constructions::two_k(k);
    c.require(constructions::verify_counterexample(f, k).passed() &&
                  constructions::verify_k_covered_region_pair_uncoverable(f, k),
              "two-k(" + std::to_string(k) + ")");
  }
}

void tables(Check& c) {
  const auto r = bounds::cross_check_tables();
  for (const auto& m : r.mismatches) c.require(false, m);
  const std::vector<std::array<int, 3>> t2 = {{3, 4, 6},  {4, 5, 8},   {5, 7, 10},
                                              {6, 8, 12}, {7, 10, 14}, {8, 11, 16}};
  for (const auto& [k, omega, n] : t2) {
    bool found = false;
    for (const auto& row : r.rows) {
      found |= row.table == "table2" && row.k == k && row.omega == omega && row.bodies == n &&
               row.passed;
    }
    c.require(found, "table2 row k=" + std::to_string(k));
  }
  const std::map<int, std::pair<std::string, int>> t1 = {
      {3, {"triangle(3)", 5}}, {6, {"triangle(6)", 9}}, {9, {"extended(5)", 13}},
      {12, {"extended(7)", 17}}, {11, {"polygon(8)", 16}}};
  for (const auto& [omega, w] : t1) {
    bool found = false;
    for (const auto& row : r.rows) {
      found |= row.table == "table1" && row.omega == omega && row.construction == w.first &&
               row.bodies == w.second && row.passed;
    }
    c.require(found, "n*(" + std::to_string(omega) + ") by " + w.first);
  }
}

void bound_chain(Check& c) {
  c.require(bounds::petruska_bound_chain(4) == std::pair<int, int>{6, 8}, "chain(4)");
  c.require(bounds::petruska_bound_chain(5) == std::pair<int, int>{8, 10}, "chain(5)");
  const auto i = bounds::interconnect(5, 2, 3);
  c.require(i.lower_bound && *i.lower_bound >= 9, "interconnect(5,2,3)");
  // n*(4,2) = 8 and n*(5,2) = 9 sit inside the chains.
  for (const auto& [k, known] : {std::pair{4, 8}, std::pair{5, 9}}) {
    const auto [lo, hi] = bounds::petruska_bound_chain(k);
    c.require(lo <= known && known <= hi, "n*(" + std::to_string(k) + ",2) outside the chain");
  }
}

void forbidden_configurations(Check& c) {
  std::vector<constructions::ConvexFamily> families = {constructions::nine_sets()};
  for (int k = 3; k <= 8; ++k) families.push_back(constructions::polygon_construction(k));
  for (int w = 2; w <= 8; ++w) families.push_back(constructions::triangle_construction(w));
  for (int k = 2; k <= 6; ++k) families.push_back(constructions::two_k(k));
  for (const auto& f : families) {
    const auto nerve = constructions::compute_nerve(f);
    c.require(!rb::check_h1(nerve), f.name() + " H1");
    c.require(!rb::check_h2(nerve), f.name() + " H2");
    c.require(rb::is_two_collapsible(nerve), f.name() + " not 2-collapsible");
  }
}

void lid_lemma(Check& c) {
  std::mt19937_64 rng(20240601);
  int failures = 0;
  for (int h = 0; h < 200; ++h) {
    const auto hole = geom::random_hole(rng);
    const auto& [a, b, cc] = hole.bodies;
    const auto t = geom::hole_triangle(a, b, cc);
    const bool placed = a.contains(t.p_star) && b.contains(t.p_star) && b.contains(t.q_star) &&
                        cc.contains(t.q_star) && cc.contains(t.r_star) && a.contains(t.r_star);
    failures += !placed;
    for (int l = 0; l < 20; ++l) {
      const auto lid = geom::random_lid(hole, rng);
      failures += !(lid.contains(t.p_star) && lid.contains(t.q_star) && lid.contains(t.r_star));
    }
  }
  c.require(failures == 0, std::to_string(failures) + " failures");
}

rb::RedBlueClique blue_ring(int n) {
  std::vector<rb::Triple> t;
  for (int i = 0; i < n; ++i) t.push_back(rb::Triple::make(i, (i + 1) % n, (i + 2) % n));
  return rb::RedBlueClique::from_blue(n, t);
}

void spot_values(Check& c) {
  const auto fano = rb::RedBlueClique::from_blue(enumeration::catalog_entry("F").hypergraph);
  c.require(rb::f_vector(fano).to_string() == "(7,21,28,7)",
            "Fano f-vector " + rb::f_vector(fano).to_string());
  c.require(!rb::is_two_collapsible(blue_ring(6)), "C6 complement collapses");
  c.require(!rb::is_two_collapsible(blue_ring(7)), "C7 complement collapses");
  c.require(rb::is_two_collapsible(rb::RedBlueClique::all_red(7)), "simplex does not collapse");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"classification count", classification},
      {"theorem-k4 pipeline", theorem_k4},
      {"nine-sets counterexample", nine_sets},
      {"sharpness at k=4 and two-k k=2..6", two_k},
      {"tables", tables},
      {"bound chain", bound_chain},
      {"forbidden-configuration soundness", forbidden_configurations},
      {"lid lemma", lid_lemma},
      {"collapsibility and f-vector spot values", spot_values},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("threw: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, s,
                c.ok ? "" : ": ", c.why.str().c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed;
}
