#include "petruska/io/json.h"

#include <json.hpp>

#include "petruska/error.h"

namespace petruska::io {

using nlohmann::json;

namespace {

json rat(const geom::Rat& r) {
  return json::array({geom::numerator_string(r), geom::denominator_string(r)});
}

json point(const geom::Point& p) { return json::array({rat(p.x), rat(p.y)}); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json triple(const rb::Triple& t) { return json::array({t.i, t.j, t.k}); }

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error("malformed JSON: field '" + field + "' " + why);
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "is missing");
  return *it;
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "must be an integer");
  return j.get<long>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "must be a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "must be an array");
  return j;
}

geom::Rat parse_rat_field(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "must be [numerator, denominator]");
  try {
    return geom::parse_rat(text(j[0], path + "[0]"), text(j[1], path + "[1]"));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind("malformed JSON", 0) == 0) throw;
    bad(path, std::string("is not a rational: ") + e.what());
  }
}

}  // namespace

std::string to_json(const constructions::ConvexFamily& family) {
  json j;
  j["name"] = family.name();
  j["parameters"] = family.parameters();
  j["points"] = json::array();
  for (const auto& p : family.points()) j["points"].push_back(point(p));
  j["bodies"] = family.body_points();
  j["witnesses"] = json::array();
  for (const auto& w : family.witnesses()) {
    j["witnesses"].push_back({{"point", w.point}, {"label", w.label}});
  }
  return dump(j);
}

constructions::ConvexFamily family_from_json(std::string_view input) {
  const json j = parse(input);
  const std::string name = text(field(j, "name", ""), "name");
  std::map<std::string, long> params;
  if (j.contains("parameters")) {
    const json& p = j["parameters"];
    if (!p.is_object()) bad("parameters", "must be an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      params[it.key()] = integer(it.value(), "parameters." + it.key());
    }
  }
  std::vector<geom::Point> points;
  const json& pts = array(field(j, "points", ""), "points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) bad(path, "must be [x, y]");
    points.push_back(geom::Point{parse_rat_field(pts[i][0], path + "[0]"),
                                 parse_rat_field(pts[i][1], path + "[1]")});
  }
  std::vector<std::vector<int>> bodies;
  const json& bs = array(field(j, "bodies", ""), "bodies");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const std::string path = "bodies[" + std::to_string(i) + "]";
    std::vector<int> idx;
    for (std::size_t t = 0; t < array(bs[i], path).size(); ++t) {
      idx.push_back(static_cast<int>(integer(bs[i][t], path + "[" + std::to_string(t) + "]")));
    }
    bodies.push_back(std::move(idx));
  }
  std::vector<constructions::Witness> witnesses;
  if (j.contains("witnesses")) {
    const json& ws = array(j["witnesses"], "witnesses");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string path = "witnesses[" + std::to_string(i) + "]";
      constructions::Witness w;
      w.point = static_cast<int>(integer(field(ws[i], "point", path), path + ".point"));
      const json& label = array(field(ws[i], "label", path), path + ".label");
      for (std::size_t t = 0; t < label.size(); ++t) {
        w.label.push_back(static_cast<int>(
            integer(label[t], path + ".label[" + std::to_string(t) + "]")));
      }
      witnesses.push_back(std::move(w));
    }
  }
  return constructions::ConvexFamily(name, std::move(points), std::move(bodies),
                                     std::move(witnesses), std::move(params));
}

std::string to_json(const rb::Hypergraph3& h) {
  json j;
  j["n"] = h.n();
  j["blue"] = json::array();
  for (const auto& t : h.edges()) j["blue"].push_back(triple(t));
  if (h.n() <= 10) j["canonical"] = rb::canonical_form(h).hex();
  return dump(j);
}

std::string to_json(const rb::RedBlueClique& rb) {
  json j;
  j["n"] = rb.n();
  j["blue"] = json::array();
  for (const auto& t : rb.blue().edges()) j["blue"].push_back(triple(t));
  return dump(j);
}

rb::RedBlueClique clique_from_json(std::string_view input) {
  const json j = parse(input);
  const long n = integer(field(j, "n", ""), "n");
  if (n < 3 || n > rb::kMaxVertices) bad("n", "must be between 3 and 64");
  std::vector<rb::Triple> blue;
  const json& bs = array(field(j, "blue", ""), "blue");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const std::string path = "blue[" + std::to_string(i) + "]";
    if (!bs[i].is_array() || bs[i].size() != 3) bad(path, "must be a triple");
    int v[3];
    for (int t = 0; t < 3; ++t) {
      const long x = integer(bs[i][t], path + "[" + std::to_string(t) + "]");
      if (x < 0 || x >= n) bad(path, "has a vertex outside [0, n)");
      v[t] = static_cast<int>(x);
    }
    try {
      blue.push_back(rb::Triple::make(v[0], v[1], v[2]));
    } catch (const Error&) {
      bad(path, "must have distinct vertices");
    }
  }
  return rb::RedBlueClique::from_blue(static_cast<int>(n), blue);
}

namespace {

json certificate(const rb::Certificate& c) {
  json j;
  j["kind"] = std::string(rb::certificate_tag(c));
  if (auto* t = std::get_if<rb::Transversal>(&c)) {
    j["pair"] = {t->u, t->w};
  } else if (auto* b = std::get_if<rb::BlueC3>(&c)) {
    j["edges"] = {triple(b->edges[0]), triple(b->edges[1]), triple(b->edges[2])};
  } else if (auto* r = std::get_if<rb::BlueCircularCycle>(&c)) {
    j["k"] = r->k;
    j["ring"] = r->ring;
  } else if (auto* h = std::get_if<rb::H2Violation>(&c)) {
    j["e"] = triple(h->e);
    j["e_prime"] = triple(h->e_prime);
    j["shared"] = h->shared;
  } else if (auto* h = std::get_if<rb::H1Violation>(&c)) {
    j["e"] = triple(h->e);
    j["e_prime"] = triple(h->e_prime);
  } else if (auto* x = std::get_if<rb::NotTwoCollapsible>(&c)) {
    j["fingerprint"] = x->fingerprint;
  }
  return j;
}

json hypergraph(const rb::Hypergraph3& h) {
  json j;
  j["n"] = h.n();
  j["blue"] = json::array();
  for (const auto& t : h.edges()) j["blue"].push_back(triple(t));
  if (h.n() <= 10) j["canonical"] = rb::canonical_form(h).hex();
  return j;
}

json enumeration_report(const enumeration::EnumerationReport& r, bool with_timing) {
  json j;
  j["n"] = r.n;
  j["class_count"] = r.classes.size();
  j["with_k4"] = r.with_k4;
  j["without_k4"] = r.without_k4;
  j["classes"] = json::array();
  for (const auto& h : r.classes) {
    json c = hypergraph(h);
    c["edge_count"] = h.edge_count();
    c["contains_k4"] = !rb::k4_subsets(h).empty();
    c["tau"] = rb::tau(h);
    j["classes"].push_back(c);
  }
  j["search"] = {{"nodes_visited", r.nodes_visited}, {"nodes_pruned", r.nodes_pruned}};
  if (with_timing) j["search"]["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace

std::string to_json(const rb::Certificate& c) { return dump(certificate(c)); }

std::string to_json(const rb::FVector& f) { return dump(json(f.entries)); }

std::string to_json(const enumeration::EnumerationReport& r) {
  // Timing is left out so that reports are byte-identical across runs.
  return dump(enumeration_report(r, false));
}

std::string to_json(const enumeration::TheoremK4Report& r) {
  json j;
  j["passed"] = r.passed();
  j["enumeration"] = enumeration_report(r.enumeration, false);
  j["classification_matches_catalog"] = r.classification_matches_catalog;
  j["unmatched"] = r.unmatched;
  j["c3_configurations_checked"] = r.c3_configurations_checked;
  j["c3_transversal_lemma_holds"] = r.c3_transversal_lemma_holds;
  j["classes"] = json::array();
  for (const auto& c : r.classes) {
    j["classes"].push_back({{"name", c.name},
                            {"battery", certificate(c.battery)},
                            {"battery_rechecked", c.battery_rechecked},
                            {"resolved", c.resolved()},
                            {"expected", c.expected_tag},
                            {"designated", certificate(c.designated)},
                            {"designated_rechecked", c.designated_rechecked},
                            {"matches_expected", c.matches_expected()}});
  }
  return dump(j);
}

std::string to_json(const constructions::VerificationReport& r) {
  json j;
  j["k"] = r.k;
  j["passed"] = r.passed();
  j["max_cover_ok"] = r.max_cover_ok;
  if (r.offending_subset) j["offending_subset"] = *r.offending_subset;
  if (r.offending_point) j["offending_point"] = point(*r.offending_point);
  j["witnesses_covered"] = r.witnesses_covered;
  j["undercovered_witnesses"] = r.undercovered_witnesses;
  j["pair_coverage_fails"] = r.pair_coverage_fails;
  j["pairs"] = json::array();
  for (const auto& p : r.pairs) {
    j["pairs"].push_back({{"x", p.x}, {"y", p.y}, {"witness", p.witness}});
  }
  j["single_transversal_absent"] = r.single_transversal_absent;
  j["fvector"] = r.fvector.entries;
  return dump(j);
}

std::string to_json(const constructions::RegionCoverageReport& r) {
  json j;
  j["k"] = r.k;
  j["cells"] = r.cells;
  j["point_cells"] = r.point_cells;
  j["segment_cells"] = r.segment_cells;
  j["area_cells"] = r.area_cells;
  j["every_pair_escapes"] = r.every_pair_escapes;
  j["pairs"] = json::array();
  for (const auto& p : r.pairs) {
    json e = {{"x", p.x}, {"y", p.y}};
    e["witness"] = p.witness ? point(*p.witness) : json(nullptr);
    j["pairs"].push_back(e);
  }
  return dump(j);
}

std::string to_json(const geom::HoleTriangle& h) {
  json j;
  j["p_star"] = point(h.p_star);
  j["q_star"] = point(h.q_star);
  j["r_star"] = point(h.r_star);
  j["extreme_points"] = h.extreme_points;
  j["degenerate"] = h.degenerate();
  return dump(j);
}

std::string to_json(const bounds::InterconnectChain& c) {
  json j;
  j["omega"] = c.omega;
  j["t"] = c.t;
  j["d"] = c.d;
  j["chain"] = c.to_string();
  j["terms"] = {c.lhs, c.middle, c.rhs};
  j["middle_value"] = c.middle_value ? json(*c.middle_value) : json(nullptr);
  j["rhs_value"] = c.rhs_value ? json(*c.rhs_value) : json(nullptr);
  j["lower_bound"] = c.lower_bound ? json(*c.lower_bound) : json(nullptr);
  return dump(j);
}

std::string to_json(const bounds::CrossCheckReport& r) {
  json j;
  j["passed"] = r.passed();
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    j["rows"].push_back({{"table", row.table},
                         {"omega", row.omega},
                         {"k", row.k},
                         {"expected_n_star", row.expected_n_star},
                         {"construction", row.construction},
                         {"bodies", row.bodies},
                         {"omega_is_maximum", row.omega_is_maximum},
                         {"no_single_transversal", row.no_single_transversal},
                         {"passed", row.passed},
                         {"note", row.note}});
  }
  j["arithmetic"] = r.arithmetic;
  j["mismatches"] = r.mismatches;
  json t1 = json::array(), t2 = json::array();
  for (const auto& row : bounds::table1()) {
    t1.push_back({{"omega", row.omega}, {"n", row.n}, {"n_star", row.n_star}});
  }
  for (const auto& row : bounds::table2()) {
    t2.push_back({{"k", row.k}, {"omega", row.omega}, {"n_star", row.n_star}});
  }
  j["table1"] = t1;
  j["table2"] = t2;
  return dump(j);
}

}  // namespace petruska::io
