#include <gtest/gtest.h>

#include <cmath>

#include "petruska/bounds/bounds.h"
#include "petruska/error.h"

namespace {

using namespace petruska;

TEST(Tables, Values) {
  ASSERT_EQ(bounds::table1().size(), 10u);
  EXPECT_EQ(bounds::table1().front().omega, 3);
  EXPECT_EQ(bounds::table1_row(11)->n, 15);
  EXPECT_EQ(bounds::table1_row(11)->n_star, 16);
  EXPECT_EQ(bounds::table1_row(7)->n_star, 10);
  EXPECT_FALSE(bounds::table1_row(13));
  for (const auto& r : bounds::table1()) EXPECT_LE(r.n, r.n_star);
  ASSERT_EQ(bounds::table2().size(), 6u);
  for (const auto& r : bounds::table2()) {
    EXPECT_EQ(r.omega, r.k - 1 + (r.k + 1) / 2);
    EXPECT_EQ(r.n_star, 2 * r.k);
  }
}

TEST(Interconnect, KnownTerms) {
  const auto c = bounds::interconnect(5, 2, 3);
  EXPECT_EQ(c.lhs, "n*(5,2;2)");
  EXPECT_EQ(c.middle, "n*(5,1;2)");
  EXPECT_EQ(c.rhs, "n(5,1;3)");
  EXPECT_EQ(c.middle_value, 8);
  EXPECT_EQ(c.rhs_value, 8);
  EXPECT_EQ(c.lower_bound, 9);
  EXPECT_EQ(c.to_string(), "n*(5,2;2) >= n*(5,1;2)=8+1 >= n(5,1;3)=8+1, so n*(5,2;2) >= 9");
  EXPECT_EQ(bounds::interconnect(4, 2, 3).lower_bound, 7);
  // Only the largest term matters when n* > n.
  EXPECT_EQ(bounds::interconnect(11, 2, 3).lower_bound, 17);
}

TEST(Interconnect, UnknownTermsAndErrors) {
  const auto c = bounds::interconnect(5, 3, 4);
  EXPECT_FALSE(c.middle_value);
  EXPECT_FALSE(c.lower_bound);
  EXPECT_EQ(c.to_string(), "n*(5,3;3) >= n*(5,2;3)+1 >= n(5,2;4)+1");
  EXPECT_THROW(bounds::interconnect(5, 1, 3), Error);
  EXPECT_THROW(bounds::interconnect(5, 2, 1), Error);
  EXPECT_THROW(bounds::interconnect(2, 2, 3), Error);
}

TEST(BoundChain, Values) {
  EXPECT_EQ(bounds::petruska_bound_chain(2), (std::pair<int, int>{4, 4}));
  EXPECT_EQ(bounds::petruska_bound_chain(4), (std::pair<int, int>{6, 8}));
  EXPECT_EQ(bounds::petruska_bound_chain(5), (std::pair<int, int>{8, 10}));
  EXPECT_EQ(bounds::petruska_bound_chain(9), (std::pair<int, int>{12, 18}));
  EXPECT_THROW(bounds::petruska_bound_chain(1), Error);
}

TEST(BoundChainProperty, AgreesWithFloatingCeiling) {
  for (int k = 2; k <= 1000; ++k) {
    const auto [lower, upper] = bounds::petruska_bound_chain(k);
    const double exact = k + std::sqrt(static_cast<double>(k));
    const int root = static_cast<int>(std::lround(std::sqrt(k)));
    // For perfect squares the ceiling is attained; elsewhere it rounds up.
    const int want = root * root == k ? k + root : static_cast<int>(std::ceil(exact));
    EXPECT_EQ(lower, want) << "k=" << k;
    EXPECT_LE(lower, upper);
    EXPECT_EQ(upper, 2 * k);
  }
}

TEST(SzConjecture, Values) {
  EXPECT_EQ(bounds::sz_petruska_conjecture_value(1), (std::pair<int, int>{2, 3}));
  EXPECT_EQ(bounds::sz_petruska_conjecture_value(2), (std::pair<int, int>{4, 6}));
  EXPECT_EQ(bounds::sz_petruska_conjecture_value(3), (std::pair<int, int>{7, 10}));
  EXPECT_EQ(bounds::sz_petruska_conjecture_value(4), (std::pair<int, int>{11, 15}));
  EXPECT_THROW(bounds::sz_petruska_conjecture_value(0), Error);
}

TEST(CrossCheck, EveryRowWitnessed) {
  const auto r = bounds::cross_check_tables();
  EXPECT_TRUE(r.passed()) << (r.mismatches.empty() ? "" : r.mismatches.front());
  EXPECT_EQ(r.rows.size(), 16u);
  EXPECT_EQ(r.arithmetic.size(), 10u);
  auto find = [&](const std::string& table, int omega) -> const bounds::TableCheck& {
    for (const auto& row : r.rows)
      if (row.table == table && row.omega == omega) return row;
    throw std::runtime_error("row missing");
  };
  EXPECT_EQ(find("table2", 7).construction, "polygon(5)");
  EXPECT_EQ(find("table2", 7).bodies, 10);
  EXPECT_EQ(find("table1", 3).construction, "triangle(3)");
  EXPECT_EQ(find("table1", 9).construction, "extended(5)");
  EXPECT_EQ(find("table1", 12).bodies, 17);
  EXPECT_FALSE(find("table1", 11).note.empty());
  EXPECT_TRUE(find("table1", 10).note.empty());
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.passed) << row.table << " " << row.omega;
    EXPECT_TRUE(row.omega_is_maximum);
    EXPECT_TRUE(row.no_single_transversal);
  }
}

TEST(TablesCsv, Layout) {
  const std::string csv = bounds::tables_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "table,omega,n,n_star,k");
  EXPECT_NE(csv.find("\n1,11,15,16,\n"), std::string::npos);
  EXPECT_NE(csv.find("\n2,7,,10,5\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
}

}  // namespace
