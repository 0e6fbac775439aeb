#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "petruska/error.h"
#include "petruska/redblue/hypergraph.h"

namespace {

using namespace petruska;
using rb::Hypergraph3;
using rb::Triple;
using rb::TripleSet;

Hypergraph3 fano() {
  return Hypergraph3(7, {Triple{0, 1, 2}, Triple{0, 3, 4}, Triple{0, 5, 6}, Triple{1, 3, 5},
                         Triple{1, 4, 6}, Triple{2, 3, 6}, Triple{2, 4, 5}});
}

TEST(Triple, RankIsColex) {
  // Colex: ordered by largest element, then middle, then smallest.
  std::size_t expected = 0;
  std::vector<Triple> order;
  for (int k = 2; k < 9; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) order.push_back(Triple{i, j, k});
  for (const Triple& t : order) {
    EXPECT_EQ(t.index(), expected);
    EXPECT_EQ(Triple::from_index(expected), t);
    ++expected;
  }
  EXPECT_EQ(expected, rb::choose3(9));
}

TEST(Triple, MakeSortsAndValidates) {
  EXPECT_EQ(Triple::make(5, 1, 3), (Triple{1, 3, 5}));
  EXPECT_THROW(Triple::make(1, 1, 2), Error);
  EXPECT_THROW(Triple::make(-1, 1, 2), Error);
  EXPECT_EQ(Triple::make(4, 0, 2).to_string(), "024");
}

TEST(TripleSet, InsertEraseCount) {
  TripleSet s(7);
  EXPECT_EQ(s.capacity(), 35u);
  s.insert(Triple{0, 1, 2});
  s.insert(Triple{4, 5, 6});
  s.insert(Triple{4, 5, 6});
  EXPECT_EQ(s.count(), 2u);
  EXPECT_TRUE(s.contains(Triple{4, 5, 6}));
  EXPECT_FALSE(s.contains(Triple{4, 5, 7}));
  s.erase(Triple{0, 1, 2});
  EXPECT_EQ(s.to_vector(), std::vector<Triple>{(Triple{4, 5, 6})});
}

TEST(Hypergraph, RejectsOutOfRange) {
  EXPECT_THROW(Hypergraph3(7, {Triple{0, 1, 7}}), Error);
  EXPECT_THROW(Hypergraph3(2, std::vector<Triple>{}), Error);
  EXPECT_THROW(Hypergraph3(65, std::vector<Triple>{}), Error);
}

TEST(Hypergraph, EdgesAreLexicographic) {
  Hypergraph3 h(6, {Triple{3, 4, 5}, Triple{0, 4, 5}, Triple{0, 1, 5}, Triple{1, 2, 3}});
  std::vector<Triple> e = h.edges();
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  EXPECT_EQ(h.degrees(), (std::vector<int>{2, 2, 1, 2, 2, 3}));
}

TEST(Tau, Examples) {
  EXPECT_EQ(rb::tau(Hypergraph3(7, std::vector<Triple>{})), 0);
  EXPECT_EQ(rb::tau(Hypergraph3(7, {Triple{0, 1, 2}})), 1);
  EXPECT_EQ(rb::tau(fano()), 3);
  // Complete K5^(3): tau = 3.
  std::vector<Triple> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) k5.push_back(Triple{i, j, k});
  EXPECT_EQ(rb::tau(Hypergraph3(5, k5)), 3);
  EXPECT_TRUE(rb::has_transversal_of_size(fano(), 3));
  EXPECT_FALSE(rb::has_transversal_of_size(fano(), 2));
}

TEST(TauProperty, MatchesBruteForce) {
  std::mt19937_64 rng(oracle::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 4;
    const auto h = oracle::random_hypergraph(rng, n, 0.1 + 0.05 * (trial % 5));
    EXPECT_EQ(rb::tau(h), oracle::tau(n, oracle::edges_of(h))) << "trial " << trial;
  }
}

TEST(TauProperty, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  for (int chain = 0; chain < 30; ++chain) {
    Hypergraph3 h(7, std::vector<Triple>{});
    int last = 0;
    std::vector<std::size_t> order(35);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order) {
      h = h.with_edge(Triple::from_index(idx));
      const int t = rb::tau(h);
      EXPECT_GE(t, last);
      last = t;
    }
    EXPECT_EQ(last, 5);  // K7^(3)
  }
}

TEST(K4Subsets, Examples) {
  Hypergraph3 a(7, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}, Triple{1, 2, 3},
                    Triple{4, 5, 6}});
  EXPECT_EQ(rb::k4_subsets(a), std::vector<rb::VertexSet>{0b1111});
  EXPECT_TRUE(rb::k4_subsets(fano()).empty());
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(rb::canonical_form(Hypergraph3(7, {Triple{0, 1, 2}})),
            rb::canonical_form(Hypergraph3(7, {Triple{4, 5, 6}})));
  Hypergraph3 fano_minus(7, {Triple{0, 1, 2}, Triple{0, 3, 4}, Triple{0, 5, 6},
                             Triple{1, 3, 5}, Triple{1, 4, 6}, Triple{2, 3, 6}});
  EXPECT_NE(rb::canonical_form(fano()), rb::canonical_form(fano_minus));
  EXPECT_EQ(rb::canonical_form(fano()).hypergraph().edge_count(), 7u);
  EXPECT_TRUE(rb::isomorphic(rb::canonical_form(fano()).hypergraph(), fano()));
  EXPECT_THROW(rb::canonical_form(Hypergraph3(11, std::vector<Triple>{})), Error);
  const std::string hex = rb::canonical_form(Hypergraph3(7, {Triple{0, 1, 2}})).hex();
  EXPECT_EQ(hex.find_first_not_of("0123456789abcdef"), std::string::npos);
}

TEST(CanonicalFormProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 5 + trial % 5;
    const auto h = oracle::random_hypergraph(rng, n, 0.1 + 0.1 * (trial % 4));
    const auto g = h.relabeled(oracle::random_permutation(rng, n));
    ASSERT_EQ(rb::canonical_form(h), rb::canonical_form(g)) << "trial " << trial;
  }
}

TEST(CanonicalFormProperty, DistinctDegreeSequencesGiveDistinctForms) {
  std::mt19937_64 rng(oracle::kSeed + 3);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_hypergraph(rng, 7, 0.25);
    const auto b = oracle::random_hypergraph(rng, 7, 0.25);
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da == db) continue;
    ++compared;
    EXPECT_NE(rb::canonical_form(a), rb::canonical_form(b));
  }
  EXPECT_GT(compared, 200);
}

// On 6 vertices, isomorphism by brute force over all 720 permutations.
TEST(CanonicalFormProperty, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(oracle::kSeed + 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_hypergraph(rng, 6, 0.3);
    auto b = oracle::random_hypergraph(rng, 6, 0.3);
    if (trial % 2 == 0) b = a.relabeled(oracle::random_permutation(rng, 6));
    if (a.edge_count() != b.edge_count()) continue;
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    bool iso = false;
    do {
      iso = a.relabeled(perm) == b;
    } while (!iso && std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(rb::isomorphic(a, b), iso) << "trial " << trial;
  }
}

}  // namespace
