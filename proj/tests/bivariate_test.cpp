#include <gtest/gtest.h>

#include <map>
#include <stdexcept>

#include "crankstat/bivariate.hpp"
#include "support/naive.hpp"

using namespace crankstat;

namespace {

using Row = std::map<int, mpz_class>;

Row row_of(const BivariateSeries& g, int n) {
  Row r;
  const auto& row = g.row(n);
  for (int m = -row.bound(); m <= row.bound(); ++m) {
    if (row.coeff(m) != 0) r[m] = row.coeff(m);
  }
  return r;
}

// Number of partitions of s into distinct parts, for s <= order.
naive::Poly distinct_counts(int order) {
  naive::Poly p = naive::one(order);
  for (int e = 1; e <= order; ++e) p = naive::mul_binomial(p, e, +1);
  return p;
}

naive::Poly odd_part_counts(int order) {
  naive::Poly p = naive::one(order);
  for (int e = 1; e <= order; e += 2) p = naive::mul_geometric(p, e);
  return p;
}

Row sparse(const std::map<int, long>& r) {
  Row out;
  for (auto [m, w] : r) {
    if (w != 0) out[m] = w;
  }
  return out;
}

// Overlined parts form a distinct partition; the rest carries the crank weight.
Row overline_row(int n, const naive::Poly& d) {
  Row r;
  for (int a = 0; a <= n; ++a) {
    for (auto [m, w] : naive::crank_row(n - a)) r[m] += d[a] * w;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// Overlined parts distinct, odd non-overlined parts free, even non-overlined parts halved.
Row m2_row(int n, const naive::Poly& d, const naive::Poly& odd) {
  Row r;
  for (int c = 0; 2 * c <= n; ++c) {
    const auto crank = naive::crank_row(c);
    for (int a = 0; a + 2 * c <= n; ++a) {
      const int b = n - 2 * c - a;
      for (auto [m, w] : crank) r[m] += d[a] * odd[b] * w;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// Partitions of s with exactly j parts.
std::vector<std::vector<mpz_class>> parts_table(int order) {
  std::vector<std::vector<mpz_class>> t(order + 1, std::vector<mpz_class>(order + 1));
  for (int s = 0; s <= order; ++s) {
    for (const auto& p : naive::partitions(s)) t[s][p.size()] += 1;
  }
  return t;
}

}  // namespace

TEST(LaurentPoly, AccessAndShape) {
  LaurentPoly p(3);
  p.at(-2) = 5;
  p.at(2) = 5;
  p.at(0) = -1;
  EXPECT_EQ(p.coeff(-2), 5);
  EXPECT_EQ(p.coeff(7), 0);
  EXPECT_THROW(p.at(4), std::out_of_range);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.sum(), 9);
  EXPECT_TRUE(p.is_symmetric());
  p.at(1) = 1;
  EXPECT_FALSE(p.is_symmetric());
  EXPECT_EQ(LaurentPoly(2).degree(), -1);
  EXPECT_THROW(LaurentPoly(-1), std::invalid_argument);
}

TEST(CrankGf, SmallRowsFollowConventions) {
  const auto g = crank_gf(4);
  EXPECT_EQ(row_of(g, 0), (Row{{0, 1}}));
  EXPECT_EQ(row_of(g, 1), (Row{{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(row_of(g, 3), (Row{{-3, 1}, {0, 1}, {3, 1}}));
}

TEST(CrankGf, MatchesEnumerationFromDefinition) {
  constexpr int order = 30;
  const auto g = crank_gf(order);
  for (int n = 0; n <= order; ++n) {
    EXPECT_EQ(row_of(g, n), sparse(naive::crank_row(n))) << "n = " << n;
  }
}

TEST(CrankGf, RowSumsArePartitionNumbers) {
  constexpr int order = 120;
  const auto g = crank_gf(order);
  const auto p = naive::partition_numbers(order);
  for (int n = 0; n <= order; ++n) {
    EXPECT_EQ(g.row(n).sum(), p[n]) << "n = " << n;
    EXPECT_TRUE(g.row(n).is_symmetric());
    EXPECT_LE(g.row(n).degree(), n);
  }
}

TEST(OverlineCrankGf, RowFourAndCount) {
  const auto g = overline_crank_gf(4);
  const Row expected{{-4, 1}, {-3, 1}, {-2, 2}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {3, 1}, {4, 1}};
  EXPECT_EQ(row_of(g, 4), expected);
  EXPECT_EQ(g.row(4).sum(), 14);
}

TEST(OverlineCrankGf, MatchesConvolutionOracle) {
  constexpr int order = 24;
  const auto g = overline_crank_gf(order);
  const auto d = distinct_counts(order);
  const auto over = naive::overpartition_counts(order);
  for (int n = 0; n <= order; ++n) {
    EXPECT_EQ(row_of(g, n), overline_row(n, d)) << "n = " << n;
    EXPECT_EQ(g.row(n).sum(), over[n]);
  }
}

TEST(M2CrankGf, SmallRows) {
  const auto g = m2_crank_gf(2);
  EXPECT_EQ(row_of(g, 0), (Row{{0, 1}}));
  EXPECT_EQ(row_of(g, 1), (Row{{0, 2}}));
  EXPECT_EQ(row_of(g, 2), (Row{{-1, 1}, {0, 2}, {1, 1}}));
}

TEST(M2CrankGf, MatchesConvolutionOracle) {
  constexpr int order = 30;
  const auto g = m2_crank_gf(order);
  const auto d = distinct_counts(order);
  const auto odd = odd_part_counts(order);
  const auto over = naive::overpartition_counts(order);
  for (int n = 0; n <= order; ++n) {
    EXPECT_EQ(row_of(g, n), m2_row(n, d, odd)) << "n = " << n;
    EXPECT_EQ(g.row(n).sum(), over[n]);
  }
}

TEST(KCrankGf, MatchesPartCountConvolution) {
  constexpr int order = 16;
  const auto parts = parts_table(order);
  for (int k = 2; k <= 5; ++k) {
    const auto g = kcrank_gf(k, order);
    const auto rest = naive::colored_counts(k - 2, order);
    for (int n = 0; n <= order; ++n) {
      Row expected;
      for (int s1 = 0; s1 <= n; ++s1) {
        for (int s2 = 0; s1 + s2 <= n; ++s2) {
          for (int j1 = 0; j1 <= s1; ++j1) {
            for (int j2 = 0; j2 <= s2; ++j2) {
              expected[j1 - j2] += parts[s1][j1] * parts[s2][j2] * rest[n - s1 - s2];
            }
          }
        }
      }
      for (auto it = expected.begin(); it != expected.end();) {
        it = it->second == 0 ? expected.erase(it) : std::next(it);
      }
      EXPECT_EQ(row_of(g, n), expected) << "k = " << k << ", n = " << n;
    }
  }
}

TEST(KCrankGf, RowSumsAreColoredCounts) {
  constexpr int order = 60;
  for (int k = 2; k <= 6; ++k) {
    const auto g = kcrank_gf(k, order);
    const auto c = naive::colored_counts(k, order);
    for (int n = 0; n <= order; ++n) EXPECT_EQ(g.row(n).sum(), c[n]) << k << "," << n;
  }
  EXPECT_THROW(kcrank_gf(1, 5), std::invalid_argument);
}

TEST(BivariateOps, ColumnScaleDilate) {
  const auto g = crank_gf(10);
  const auto col = column(g, 0);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(col[n], g.coeff(0, n));
  EXPECT_TRUE(column(g, 50).is_zero());

  const auto one = TruncSeries::constant(10, 1);
  const auto same = scale_rows(g, one);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(same.row(n), g.row(n));
  EXPECT_THROW(scale_rows(g, TruncSeries::constant(9, 1)), std::invalid_argument);

  const auto d = dilate_rows(g, 2, 20);
  for (int n = 0; n <= 20; ++n) {
    if (n % 2 == 0) {
      EXPECT_EQ(d.row(n), g.row(n / 2));
    } else {
      EXPECT_EQ(d.row(n).degree(), -1);
    }
  }
  EXPECT_THROW(dilate_rows(g, 2, 22), std::invalid_argument);
}
