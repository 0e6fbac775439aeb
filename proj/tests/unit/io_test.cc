#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <set>

#include "oracles.h"
#include "petruska/constructions/constructions.h"
#include "petruska/enumeration/catalog.h"
#include "petruska/enumeration/enumerate.h"
#include "petruska/error.h"
#include "petruska/io/json.h"
#include "petruska/io/svg.h"

namespace {

using namespace petruska;
using constructions::ConvexFamily;
using geom::make_point;

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
  return n;
}

// Compares against data/<path>; PETRUSKA_UPDATE_GOLDENS=1 rewrites the file.
void expect_golden(const std::string& path, const std::string& actual) {
  const std::string full = std::string(PETRUSKA_DATA_DIR) + "/" + path;
  if (const char* u = std::getenv("PETRUSKA_UPDATE_GOLDENS"); u && std::string(u) == "1") {
    std::ofstream(full, std::ios::binary) << actual;
  }
  EXPECT_EQ(oracle::read_file(full), actual) << full;
}

TEST(FamilyJson, RoundTrip) {
  for (const ConvexFamily& f :
       {constructions::nine_sets(), constructions::triangle_construction(5),
        constructions::two_k(3), constructions::extended_polygon(5)}) {
    const std::string text = io::to_json(f);
    const ConvexFamily back = io::family_from_json(text);
    EXPECT_EQ(back.name(), f.name());
    EXPECT_EQ(back.points(), f.points());
    EXPECT_EQ(back.body_points(), f.body_points());
    EXPECT_EQ(back.parameters(), f.parameters());
    ASSERT_EQ(back.witnesses().size(), f.witnesses().size());
    EXPECT_EQ(io::to_json(back), text);
  }
}

TEST(FamilyJson, RationalsAreStringPairs) {
  const ConvexFamily f("half", {make_point(0, 0), {geom::make_rat(1, 2), geom::make_rat(-3)}},
                       {{0, 1}}, {});
  const auto j = nlohmann::json::parse(io::to_json(f));
  EXPECT_EQ(j["points"][1][0], nlohmann::json::array({"1", "2"}));
  EXPECT_EQ(j["points"][1][1], nlohmann::json::array({"-3", "1"}));
}

TEST(FamilyJson, ErrorsNameTheField) {
  const std::string ok = io::to_json(constructions::two_k(2));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = ok;
    const auto p = s.find(from);
    EXPECT_NE(p, std::string::npos) << from;
    return s.replace(p, from.size(), to);
  };
  EXPECT_EQ(error_of([] { io::family_from_json("{\"points\": []}"); }),
            "malformed JSON: field 'name' is missing");
  EXPECT_EQ(error_of([&] { io::family_from_json(with("\"points\": [", "\"points\": [7, ")); }),
            "malformed JSON: field 'points[0]' must be [x, y]");
  EXPECT_EQ(error_of([&] { io::family_from_json(with("\"bodies\": [", "\"bodies\": [\"x\", ")); }),
            "malformed JSON: field 'bodies[0]' must be an array");
  EXPECT_NE(error_of([] { io::family_from_json("{not json"); }).find("malformed JSON"),
            std::string::npos);
  // Structurally valid but a rational with a zero denominator.
  const std::string zero = R"({"name": "z", "points": [[["1", "0"], ["0", "1"]]], "bodies": [[0]]})";
  EXPECT_EQ(error_of([&] { io::family_from_json(zero); }).rfind("malformed JSON: field 'points[0][0]'", 0),
            0u);
}

TEST(CliqueJson, RoundTripAndErrors) {
  const auto rb = rb::RedBlueClique::from_blue(enumeration::catalog_entry("C7").hypergraph);
  const auto back = io::clique_from_json(io::to_json(rb));
  EXPECT_EQ(back.blue(), rb.blue());
  EXPECT_EQ(error_of([] { io::clique_from_json(R"({"n": 2, "blue": []})"); }),
            "malformed JSON: field 'n' must be between 3 and 64");
  EXPECT_EQ(error_of([] { io::clique_from_json(R"({"n": 4, "blue": [[0, 1, 4]]})"); }),
            "malformed JSON: field 'blue[0]' has a vertex outside [0, n)");
  EXPECT_EQ(error_of([] { io::clique_from_json(R"({"n": 4, "blue": [[0, 1, 1]]})"); }),
            "malformed JSON: field 'blue[0]' must have distinct vertices");
  EXPECT_EQ(error_of([] { io::clique_from_json(R"({"n": 4})"); }),
            "malformed JSON: field 'blue' is missing");
}

TEST(CliqueJsonProperty, RoundTripRandom) {
  std::mt19937_64 rng(oracle::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    const auto rb = rb::RedBlueClique::from_blue(oracle::random_hypergraph(rng, n, 0.4));
    const std::string text = io::to_json(rb);
    EXPECT_EQ(io::to_json(io::clique_from_json(text)), text);
  }
}

TEST(ReportJson, ByteDeterministic) {
  const auto a = enumeration::enumerate_tau3_c3_free(6, 1);
  const auto b = enumeration::enumerate_tau3_c3_free(6, 3);
  EXPECT_EQ(io::to_json(a), io::to_json(b));
  const auto j = nlohmann::json::parse(io::to_json(a));
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_EQ(j["class_count"], a.classes.size());
}

TEST(ReportJson, Certificate) {
  const auto j = nlohmann::json::parse(io::to_json(rb::Certificate{rb::Transversal{4, 5}}));
  EXPECT_EQ(j["kind"], "Transversal");
  EXPECT_EQ(j["pair"], nlohmann::json::array({4, 5}));
  EXPECT_EQ(io::to_json(rb::FVector{{9, 36, 61}}), "[\n  9,\n  36,\n  61\n]\n");
}

TEST(Svg, NineSets) {
  const auto f = constructions::nine_sets();
  const std::string svg = io::render_svg(f);
  EXPECT_EQ(svg, io::render_svg(constructions::nine_sets()));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
  for (int i = 0; i < 9; ++i) EXPECT_EQ(count(svg, "id=\"body" + std::to_string(i) + "\""), 1u);
  EXPECT_EQ(count(svg, "r=\"3\" fill=\"black\""), 12u);
  EXPECT_EQ(count(svg, ">0,1,2,3,6</text>"), 1u);
  EXPECT_EQ(count(svg, ">body "), 9u);
}

TEST(Svg, DegenerateBodiesAndNoWitnesses) {
  const ConvexFamily f("mixed", {make_point(0, 0), make_point(4, 0), make_point(0, 4)},
                       {{0}, {0, 1}, {0, 1, 2}, {0, 1, 2}}, {});
  const std::string svg = io::render_svg(f);
  EXPECT_NE(svg.find("<circle id=\"body0\""), std::string::npos);
  EXPECT_NE(svg.find("<polyline id=\"body1\""), std::string::npos);
  EXPECT_NE(svg.find("<polygon id=\"body2\""), std::string::npos);
  EXPECT_EQ(count(svg, "fill=\"black\""), 0u);
  // Identical bodies remain distinguishable by colour.
  std::smatch m2, m3;
  const std::regex fill2("id=\"body2\"[^>]*fill=\"(#[0-9a-f]{6})\"");
  const std::regex fill3("id=\"body3\"[^>]*fill=\"(#[0-9a-f]{6})\"");
  ASSERT_TRUE(std::regex_search(svg, m2, fill2));
  ASSERT_TRUE(std::regex_search(svg, m3, fill3));
  EXPECT_NE(m2[1].str(), m3[1].str());
}

TEST(Goldens, CatalogEntries) {
  std::set<std::string> names;
  for (const auto& e : enumeration::catalog()) {
    names.insert(e.name);
    const std::string text = io::to_json(e.hypergraph);
    expect_golden("catalog/" + e.name + ".json", text);
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["blue"].size(), e.hypergraph.edge_count());
  }
  EXPECT_EQ(names.size(), 14u);
}

TEST(Goldens, EnumerationReport) {
  expect_golden("enumeration_n7.json", io::to_json(enumeration::enumerate_tau3_c3_free(7, 2)));
}

}  // namespace
