#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "crankstat/enumerate.hpp"
#include "support/naive.hpp"

using namespace crankstat;

namespace {

Overpartition over(std::initializer_list<std::pair<int, bool>> parts) {
  Overpartition o;
  for (auto [v, bar] : parts) o.push_back({v, bar});
  return o;
}

std::multiset<std::pair<int, int>> as_set(const WeightedContribution& c) {
  std::multiset<std::pair<int, int>> s;
  for (auto [m, w] : c) s.insert({m, w});
  return s;
}

}  // namespace

TEST(Partitions, CountsMatchProductFormula) {
  const auto p = naive::partition_numbers(30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(partitions(n).size(), p[n].get_ui()) << n;
  EXPECT_TRUE(partitions(-1).empty());
}

TEST(Partitions, EachIsValidAndDistinct) {
  for (int n = 1; n <= 18; ++n) {
    const auto all = partitions(n);
    std::set<Partition> seen(all.begin(), all.end());
    EXPECT_EQ(seen.size(), all.size());
    for (const auto& p : all) {
      EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
      EXPECT_GE(p.back(), 1);
      int s = 0;
      for (int x : p) s += x;
      EXPECT_EQ(s, n);
    }
    const auto reference = naive::partitions(n);
    EXPECT_EQ(seen, std::set<Partition>(reference.begin(), reference.end()));
  }
}

TEST(Partitions, ColexOrderEnds) {
  const auto all = partitions(5);
  EXPECT_EQ(all.front(), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(all.back(), (Partition{5}));
  EXPECT_EQ(partitions(0), std::vector<Partition>{Partition{}});
}

TEST(Statistics, RankAndCrank) {
  EXPECT_EQ(rank(Partition{4, 2, 1}), 1);
  EXPECT_EQ(rank(Partition{1, 1, 1}), -2);
  EXPECT_EQ(crank(Partition{4, 2}), 4);          // no ones: largest part
  EXPECT_EQ(crank(Partition{4, 2, 1}), 1);       // one 1, parts > 1: 4, 2
  EXPECT_EQ(crank(Partition{3, 1, 1}), 1 - 2);   // two ones, parts > 2: 3
  EXPECT_EQ(crank(Partition{1, 1, 1, 1}), -4);
  EXPECT_THROW(rank(Partition{}), std::invalid_argument);
  EXPECT_THROW(crank(Partition{}), std::invalid_argument);
}

TEST(Statistics, CrankAgreesWithDefinitionEverywhere) {
  for (int n = 2; n <= 20; ++n) {
    for (const auto& p : naive::partitions(n)) EXPECT_EQ(crank(p), naive::crank(p));
  }
}

TEST(Statistics, CrankConventions) {
  EXPECT_EQ(crank_contrib(Partition{}), (WeightedContribution{{0, 1}}));
  EXPECT_EQ(as_set(crank_contrib(Partition{1})), as_set({{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(crank_contrib(Partition{2}), (WeightedContribution{{2, 1}}));
}

TEST(Statistics, ResidualCranksOfTheStandardExample) {
  // (9bar, 9, 7, 6bar, 5, 5, 4bar, 4, 3, 1bar, 1, 1)
  const auto lambda = over({{9, true}, {9, false}, {7, false}, {6, true}, {5, false}, {5, false},
                            {4, true}, {4, false}, {3, false}, {1, true}, {1, false}, {1, false}});
  EXPECT_EQ(first_residual_contrib(lambda), (WeightedContribution{{4, 1}}));
  EXPECT_EQ(second_residual_contrib(lambda), (WeightedContribution{{2, 1}}));
  EXPECT_EQ(size(lambda), 55);
}

TEST(Statistics, ResidualCranksWithSingleOne) {
  // (7bar, 5bar, 2bar, 1): the plain part is (1).
  const auto a = over({{7, true}, {5, true}, {2, true}, {1, false}});
  EXPECT_EQ(size(a), 15);
  EXPECT_EQ(as_set(first_residual_contrib(a)), as_set({{-1, 1}, {0, -1}, {1, 1}}));

  // (10bar, 9, 9, 7bar, 7, 6bar, 5, 3, 3, 2bar, 2): the halved even plain parts give (1).
  const auto b = over({{10, true}, {9, false}, {9, false}, {7, true}, {7, false}, {6, true},
                       {5, false}, {3, false}, {3, false}, {2, true}, {2, false}});
  EXPECT_EQ(size(b), 63);  // the parts sum to 63
  EXPECT_EQ(as_set(second_residual_contrib(b)), as_set({{-1, 1}, {0, -1}, {1, 1}}));
}

TEST(Overpartitions, FourteenOfFour) {
  const auto all = overpartitions(4);
  EXPECT_EQ(all.size(), 14u);
  std::set<std::vector<std::pair<int, bool>>> seen;
  for (const auto& o : all) {
    EXPECT_EQ(size(o), 4);
    std::vector<std::pair<int, bool>> key;
    for (const auto& part : o) key.emplace_back(part.value, part.overlined);
    seen.insert(key);
  }
  EXPECT_EQ(seen.size(), 14u);
}

TEST(Overpartitions, CountsMatchProductFormula) {
  const auto c = naive::overpartition_counts(16);
  for (int n = 0; n <= 16; ++n) EXPECT_EQ(overpartitions(n).size(), c[n].get_ui()) << n;
}

TEST(Overpartitions, AtMostOneOverlinePerValue) {
  for (const auto& o : overpartitions(12)) {
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i > 0) {
        EXPECT_GE(o[i - 1].value, o[i].value);
        if (o[i].overlined) {
          EXPECT_NE(o[i - 1].value, o[i].value);
        }
      }
    }
  }
}

TEST(KColored, CountsAndCrank) {
  const auto c3 = naive::colored_counts(3, 10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(kcolored_partitions(n, 3).size(), c3[n].get_ui());
  EXPECT_EQ(kcrank(KColoredPartition{{3, 1}, {2}, {}}), 1);
  EXPECT_THROW(kcrank(KColoredPartition{{1}}), std::invalid_argument);
  EXPECT_THROW(kcolored_partitions(3, 0), std::invalid_argument);
}

TEST(OracleTable, WeightsSumToFamilySize) {
  const auto t = oracle_table(Statistic::ocrank(), 12);
  const auto c = naive::overpartition_counts(12);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(t.row_sum(n), c[n]);
  EXPECT_EQ(t.count(0, 4), 2);
  EXPECT_EQ(t.count(1, 4), 2);
  EXPECT_EQ(t.provenance(), Provenance::oracle);
}

TEST(OracleTable, RankRowsSumToPartitionNumbers) {
  const auto t = oracle_table(Statistic::rank(), 20);
  const auto p = naive::partition_numbers(20);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(t.row_sum(n), p[n]);
  EXPECT_EQ(t.count(0, 0), 1);
}

TEST(OracleTable, CeilingsAreEnforced) {
  EXPECT_THROW(oracle_table(Statistic::crank(), OracleLimits::partitions + 1), std::invalid_argument);
  EXPECT_THROW(oracle_table(Statistic::ocrank(), OracleLimits::overpartitions + 1),
               std::invalid_argument);
  EXPECT_THROW(oracle_table(Statistic::kcrank(5), 5), std::invalid_argument);
  EXPECT_THROW(oracle_table(Statistic::kcrank(2), OracleLimits::kcolored_n + 1),
               std::invalid_argument);
  EXPECT_THROW(oracle_table(Statistic::crank(), -1), std::invalid_argument);
}

TEST(OracleTable, RandomPartitionCrankWeightsLandInRange) {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const auto all = partitions(n);
    const auto& p = all[rng() % all.size()];
    int total = 0;
    for (auto [m, w] : crank_contrib(p)) {
      EXPECT_LE(std::abs(m), n);
      total += w;
    }
    EXPECT_EQ(total, 1);
  }
}
