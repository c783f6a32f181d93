#include "crankstat/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "crankstat/tables.hpp"

namespace crankstat {

namespace {

TruncSeries q_pow(int order, int e) { return TruncSeries::monomial(order, 1, e); }

// a / prod (1 - q^e) over the listed exponents.
TruncSeries div_factors(TruncSeries a, std::initializer_list<int> exps) {
  for (int e : exps) a = div_one_minus(a, e);
  return a;
}

// (1-q)^2 (-q;q)_inf as a sum of nonnegative pieces plus a short head.
TruncSeries distinct_square_closed_form(int order) {
  TruncSeries rhs = TruncSeries::polynomial(order, {{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1},
                                                    {9, 1}, {12, 1}});
  for (int j = 6; 3 * j - 4 <= order; ++j) {
    const TruncSeries tail = TruncSeries::polynomial(order, {{j - 3, 1}, {j - 2, 1}, {2 * j - 5, 1}});
    rhs += mul_monomial(poch_fin(3, 1, Sign::minus, j - 6, order) * tail, 1, 2 * j - 1);
  }
  return rhs;
}

TruncSeries quintic_distinct_lhs(int order) {
  const TruncSeries quintic =
      TruncSeries::polynomial(order, {{0, -1}, {2, 1}, {3, 1}, {4, 1}, {5, -1}});
  return mul_one_minus(mul_one_minus(quintic, 1), 5) * poch_inf(1, 1, Sign::minus, order);
}

TruncSeries quintic_distinct_closed_form(int order) {
  TruncSeries rhs = TruncSeries::polynomial(order, {{0, -1}, {2, 1}, {4, 1}, {11, 1}});
  rhs += div_factors(q_pow(order, 10), {3});
  rhs += div_factors(q_pow(order, 17), {3, 7});
  rhs += div_factors(q_pow(order, 16), {3, 7, 9});
  rhs += div_factors(TruncSeries::polynomial(order, {{13, 1}, {20, 1}}), {9});
  // q^(j+4) / ((1-q^3) (q^7;q^2)_{(j-11)/2} (1-q^(j-2)) (1-q^j)), odd j >= 11
  for (int j = 11; j + 4 <= order; j += 2) {
    TruncSeries term = div_one_minus(q_pow(order, j + 4), 3);
    for (int e = 7; e <= j - 6; e += 2) term = div_one_minus(term, e);
    rhs += div_factors(std::move(term), {j - 2, j});
  }
  // q^(2j+3) / ((1-q^3) (q^7;q^2)_{(j-5)/2}), odd j >= 11
  for (int j = 11; 2 * j + 3 <= order; j += 2) {
    TruncSeries term = div_one_minus(q_pow(order, 2 * j + 3), 3);
    for (int e = 7; e <= j; e += 2) term = div_one_minus(term, e);
    rhs += term;
  }
  return rhs;
}

TruncSeries odd_distinct_closed_form(int order) {
  TruncSeries rhs = TruncSeries::polynomial(order, {{0, 1}, {1, 1}, {3, 1}});
  for (int j = 5; 2 * j - 4 <= order; j += 2) {
    const TruncSeries tail = TruncSeries::polynomial(order, {{j - 4, 1}, {j - 2, 1}, {2 * j - 6, 1}});
    rhs += mul_monomial(poch_fin(1, 2, Sign::minus, (j - 5) / 2, order) * tail, 1, j);
  }
  return rhs;
}

// Explicit heads of the m = 1 and m = 2 crank differences.
constexpr int crank_head1_through = 43;
constexpr int crank_head2_through = 26;

TruncSeries crank_head1_display(int order) {
  return TruncSeries::polynomial(
      order, {{0, 1},   {1, -2},  {3, 1},   {4, 1},   {7, -1},  {9, -1},  {10, 1},  {11, -1},
              {12, 2},  {13, -1}, {14, 2},  {15, -1}, {16, 2},  {17, -2}, {18, 3},  {19, -3},
              {20, 3},  {21, -2}, {22, 3},  {23, -3}, {24, 6},  {25, -4}, {26, 6},  {27, -2},
              {28, 7},  {29, -4}, {30, 11}, {31, -5}, {32, 12}, {33, -3}, {34, 13}, {35, -4},
              {36, 20}, {37, -6}, {38, 22}, {39, -1}, {40, 27}, {41, -3}, {42, 37}, {43, -1}});
}

TruncSeries crank_head2_display(int order) {
  return TruncSeries::polynomial(
      order, {{1, 1},   {2, -1},  {4, -1},  {5, 1},   {7, 1},   {9, 1},   {10, -1}, {11, 1},
              {12, -1}, {13, 1},  {14, -1}, {15, 2},  {16, -1}, {17, 3},  {18, -1}, {19, 4},
              {20, -1}, {21, 5},  {22, -1}, {23, 6},  {24, -1}, {25, 8},  {26, -1}});
}

// (1-q)^2 + q^2 (1-q)(1-q^5)(-1+q^2+q^3+q^4-q^5) + (1-q) f(q) + h(q)
TruncSeries crank_head1_decomposition(int order) {
  const TruncSeries f = TruncSeries::polynomial(
      order, {{10, 1}, {14, 1}, {16, 2}, {18, 3}, {20, 2}, {22, 3}, {24, 4}, {26, 2},
              {28, 4}, {30, 5}, {32, 3}, {34, 4}, {36, 6}, {38, 1}, {40, 3}, {42, 1}});
  const TruncSeries h = TruncSeries::polynomial(
      order, {{14, 1}, {20, 1}, {24, 2}, {26, 4}, {28, 3}, {30, 6}, {32, 9}, {34, 9}, {36, 14},
              {38, 21}, {40, 24}, {42, 36}});
  const TruncSeries quintic =
      TruncSeries::polynomial(order, {{0, -1}, {2, 1}, {3, 1}, {4, 1}, {5, -1}});
  const TruncSeries one = TruncSeries::constant(order, 1);
  return mul_one_minus(mul_one_minus(one, 1), 1) +
         mul_monomial(mul_one_minus(mul_one_minus(quintic, 1), 5), 1, 2) + mul_one_minus(f, 1) +
         h;
}

// q (1-q)(1-q^3) + (1-q) f(q) + h(q)
TruncSeries crank_head2_decomposition(int order) {
  TruncSeries f(order);
  for (int e = 9; e <= 25; e += 2) f += q_pow(order, e);
  const TruncSeries h = TruncSeries::polynomial(
      order, {{7, 1}, {15, 1}, {17, 2}, {19, 3}, {21, 4}, {23, 5}, {25, 7}});
  return mul_monomial(mul_one_minus(mul_one_minus(TruncSeries::constant(order, 1), 1), 3), 1, 1) +
         mul_one_minus(f, 1) + h;
}

IdentityClause exact(std::string label, int m, TruncSeries lhs, TruncSeries rhs, int from = 0,
                     int to = -1) {
  IdentityClause c;
  c.label = std::move(label);
  c.m = m;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.from = from;
  c.to = to;
  return c;
}

IdentityClause sign(std::string label, int m, TruncSeries lhs, int from = 0,
                    std::set<int> expected_negative = {}) {
  IdentityClause c;
  c.label = std::move(label);
  c.m = m;
  c.lhs = std::move(lhs);
  c.from = from;
  c.expected_negative = std::move(expected_negative);
  return c;
}

std::shared_ptr<const CrankTable> gf_table(TableCache& cache, Statistic stat, int order) {
  return cache.table(stat, order, Provenance::gf);
}

std::vector<IdentityCatalogEntry> build_catalog() {
  std::vector<IdentityCatalogEntry> c;

  c.push_back({"euler", {}, "(-q;q)_inf = 1/(q;q^2)_inf", 200, 0, [](int order, TableCache&) {
                 return std::vector{exact("(-q;q)_inf - 1/(q;q^2)_inf", 0,
                                          poch_inf(1, 1, Sign::minus, order),
                                          poch_inf_inverse(1, 2, Sign::plus, order))};
               }});

  c.push_back({"distinct-square", {"lemma-3.2"},
               "(1-q)^2 (-q;q)_inf closed form; negative only at q^1 and q^4", 200, 0,
               [](int order, TableCache&) {
                 TruncSeries lhs = mul_one_minus(
                     mul_one_minus(poch_inf(1, 1, Sign::minus, order), 1), 1);
                 std::vector<IdentityClause> out;
                 out.push_back(exact("closed form", 0, lhs, distinct_square_closed_form(order)));
                 out.push_back(sign("sign", 0, std::move(lhs), 0, {1, 4}));
                 return out;
               }});

  c.push_back({"quintic-distinct", {"lemma-3.3"},
               "(1-q)(1-q^5)(-1+q^2+q^3+q^4-q^5)(-q;q)_inf closed form; nonnegative from q^1",
               200, 0, [](int order, TableCache&) {
                 TruncSeries lhs = quintic_distinct_lhs(order);
                 std::vector<IdentityClause> out;
                 out.push_back(exact("closed form", 0, lhs, quintic_distinct_closed_form(order)));
                 out.push_back(sign("sign", 0, std::move(lhs), 1));
                 return out;
               }});

  c.push_back({"crank-diff-heads", {},
               "M(0,n)-M(1,n) through q^43 and M(1,n)-M(2,n) through q^26 match the expansions",
               200, crank_head1_through, [](int order, TableCache& cache) {
                 const auto t = gf_table(cache, Statistic::crank(), order);
                 std::vector<IdentityClause> out;
                 out.push_back(exact("head", 1, diff_column(*t, 1), crank_head1_display(order), 0,
                                     crank_head1_through));
                 out.push_back(exact("head", 2, diff_column(*t, 2), crank_head2_display(order), 0,
                                     crank_head2_through));
                 return out;
               }});

  c.push_back({"crank-diff-decomposition", {},
               "crank differences minus their explicit decompositions vanish below q^44 (m=1), "
               "q^27 (m=2) and are nonnegative after",
               200, crank_head1_through, [](int order, TableCache& cache) {
                 const auto t = gf_table(cache, Statistic::crank(), order);
                 const TruncSeries d1 = diff_column(*t, 1);
                 const TruncSeries d2 = diff_column(*t, 2);
                 const TruncSeries head1 = crank_head1_decomposition(order);
                 const TruncSeries head2 = crank_head2_decomposition(order);
                 std::vector<IdentityClause> out;
                 out.push_back(exact("decomposition", 1, d1, head1, 0, crank_head1_through));
                 out.push_back(sign("residual", 1, d1 - head1, crank_head1_through + 1));
                 out.push_back(exact("decomposition", 2, d2, head2, 0, crank_head2_through));
                 out.push_back(sign("residual", 2, d2 - head2, crank_head2_through + 1));
                 return out;
               }});

  c.push_back({"crank-diff-tail", {},
               "for 8 <= m <= 60, M(m-1,n)-M(m,n) = q^(m-1) - q^m + nonnegative terms from q^(m+1)",
               200, 61, [](int order, TableCache& cache) {
                 const auto t = gf_table(cache, Statistic::crank(), order);
                 std::vector<IdentityClause> out;
                 for (int m = 8; m <= 60; ++m) {
                   TruncSeries d = diff_column(*t, m);
                   const TruncSeries head = TruncSeries::polynomial(order, {{m - 1, 1}, {m, -1}});
                   out.push_back(exact("head", m, d, head, 0, m));
                   out.push_back(sign("remainder", m, std::move(d), m + 1));
                 }
                 return out;
               }});

  c.push_back({"overline-diff-nonneg", {},
               "first residual crank: M(m-1,n)-M(m,n) >= 0 for every m >= 2", 200, 2,
               [](int order, TableCache& cache) {
                 const auto t = gf_table(cache, Statistic::ocrank(), order);
                 std::vector<IdentityClause> out;
                 for (int m = 2; m <= order; ++m) out.push_back(sign("sign", m, diff_column(*t, m)));
                 return out;
               }});

  c.push_back({"odd-distinct", {},
               "(1-q^4)(-q;q^2)_inf closed form; nonnegative", 200, 0,
               [](int order, TableCache&) {
                 TruncSeries lhs = mul_one_minus(poch_inf(1, 2, Sign::minus, order), 4);
                 std::vector<IdentityClause> out;
                 out.push_back(exact("closed form", 0, lhs, odd_distinct_closed_form(order)));
                 out.push_back(sign("sign", 0, std::move(lhs)));
                 return out;
               }});

  c.push_back({"overline-diff-even-head", {},
               "sum (M(0,n)-M(1,n)) q^(2n) for the first residual crank begins 1-q^2-q^4+q^6, "
               "nonnegative from q^8",
               200, 8, [](int order, TableCache& cache) {
                 const auto t = gf_table(cache, Statistic::ocrank(), order);
                 const TruncSeries even = dilate(truncate(diff_column(*t, 1), order / 2), 2, order);
                 const TruncSeries head =
                     TruncSeries::polynomial(order, {{0, 1}, {2, -1}, {4, -1}, {6, 1}});
                 std::vector<IdentityClause> out;
                 out.push_back(exact("head", 1, even, head, 0, 7));
                 out.push_back(sign("remainder", 1, even - head, 8));
                 out.push_back(sign("head times (-q;q^2)/(q;q^2)", 1,
                                    head * poch_inf(1, 2, Sign::minus, order) *
                                        poch_inf_inverse(1, 2, Sign::plus, order)));
                 return out;
               }});

  c.push_back({"monotone-factorization", {},
               "sum_{n>=1} (M(m,n)-M(m,n-1)) q^n = (crank column)/(q^3;q^2)_inf for both residual "
               "cranks, 0 <= m <= 20",
               200, 20, [](int order, TableCache& cache) {
                 const auto crank = gf_table(cache, Statistic::crank(), order);
                 const auto over = gf_table(cache, Statistic::ocrank(), order);
                 const auto m2 = gf_table(cache, Statistic::m2crank(), order);
                 const TruncSeries odd3 = poch_inf_inverse(3, 2, Sign::plus, order);
                 const TruncSeries m2_factor = poch_inf(1, 1, Sign::minus, order) * odd3;
                 std::vector<IdentityClause> out;
                 for (int m = 0; m <= 20; ++m) {
                   const TruncSeries col = table_column(*crank, m);
                   out.push_back(exact("first residual", m, monotone_diff_row(*over, m),
                                       odd3 * col, 1));
                   out.push_back(exact("second residual", m, monotone_diff_row(*m2, m),
                                       m2_factor * dilate(truncate(col, order / 2), 2, order), 1));
                 }
                 return out;
               }});

  c.push_back({"andrews-merca", {},
               "p(n)-p(n-1)-p(n-2)+p(n-5) <= 0 for n > 0; (-q+q^3+q^5)/(q^2;q^2)_inf negative "
               "only at q^1",
               1000, 5, [](int order, TableCache&) {
                 const TruncSeries p = partition_series(order);
                 const TruncSeries am =
                     -(TruncSeries::polynomial(order, {{0, 1}, {1, -1}, {2, -1}, {5, 1}}) * p);
                 const TruncSeries derived =
                     TruncSeries::polynomial(order, {{1, -1}, {3, 1}, {5, 1}}) *
                     poch_inf_inverse(2, 2, Sign::plus, order);
                 std::vector<IdentityClause> out;
                 out.push_back(sign("-(p(n)-p(n-1)-p(n-2)+p(n-5))", 0, am, 1));
                 out.push_back(sign("(-q+q^3+q^5)/(q^2;q^2)_inf", 0, derived, 0, {1}));
                 return out;
               }});

  c.push_back({"kcrank-reduction", {},
               "k-crank differences = first residual crank differences / ((q^2;q^2)_inf "
               "(q;q)_inf^(k-2)), k in {2,3,4}, 1 <= m <= 10",
               200, 10, [](int order, TableCache& cache) {
                 const auto over = gf_table(cache, Statistic::ocrank(), order);
                 const TruncSeries even_inv = poch_inf_inverse(2, 2, Sign::plus, order);
                 const TruncSeries p = partition_series(order);
                 std::vector<IdentityClause> out;
                 TruncSeries factor = even_inv;
                 for (int k = 2; k <= 4; ++k) {
                   const auto kt = gf_table(cache, Statistic::kcrank(k), order);
                   for (int m = 1; m <= 10; ++m) {
                     out.push_back(exact("k=" + std::to_string(k), m, diff_column(*kt, m),
                                         factor * diff_column(*over, m)));
                   }
                   factor *= p;
                 }
                 return out;
               }});

  c.push_back({"m2-from-overline", {},
               "second residual crank differences = (-q;q^2)_inf/(q;q^2)_inf times the first "
               "residual crank differences at q^2, 1 <= m <= 10",
               200, 10, [](int order, TableCache& cache) {
                 const auto over = gf_table(cache, Statistic::ocrank(), order);
                 const auto m2 = gf_table(cache, Statistic::m2crank(), order);
                 const TruncSeries factor = poch_inf(1, 2, Sign::minus, order) *
                                            poch_inf_inverse(1, 2, Sign::plus, order);
                 std::vector<IdentityClause> out;
                 for (int m = 1; m <= 10; ++m) {
                   const TruncSeries even =
                       dilate(truncate(diff_column(*over, m), order / 2), 2, order);
                   out.push_back(exact("relation", m, diff_column(*m2, m), factor * even));
                 }
                 return out;
               }});

  return c;
}

}  // namespace

const std::vector<IdentityCatalogEntry>& identity_catalog() {
  static const std::vector<IdentityCatalogEntry> catalog = build_catalog();
  return catalog;
}

const IdentityCatalogEntry* find_identity(const std::string& id_or_alias) {
  for (const auto& entry : identity_catalog()) {
    if (entry.id == id_or_alias) return &entry;
    if (std::find(entry.aliases.begin(), entry.aliases.end(), id_or_alias) != entry.aliases.end()) {
      return &entry;
    }
  }
  return nullptr;
}

void evaluate_clause(const IdentityClause& clause, CheckReport& report) {
  const int order = clause.lhs.order();
  if (clause.rhs && clause.rhs->order() != order) {
    throw std::invalid_argument("identity '" + clause.label + "' compares series of order " +
                                std::to_string(order) + " and " +
                                std::to_string(clause.rhs->order()));
  }
  const int to = clause.to < 0 ? order : std::min(clause.to, order);
  if (clause.rhs) {
    for (int i = clause.from; i <= to; ++i) {
      if (clause.lhs[i] != (*clause.rhs)[i]) {
        report.exceptions.push_back({{clause.m, i, clause.label}, clause.lhs[i], (*clause.rhs)[i]});
      }
    }
    return;
  }
  for (int i = clause.from; i <= to; ++i) {
    if (sgn(clause.lhs[i]) < 0) {
      report.exceptions.push_back({{clause.m, i, clause.label}, clause.lhs[i], 0});
    }
  }
  for (int e : clause.expected_negative) {
    if (e >= clause.from && e <= to) report.expected.push_back({clause.m, e, clause.label});
  }
}

CheckReport check_identity(const IdentityCatalogEntry& entry, int order, TableCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  if (order < entry.min_order) {
    throw std::invalid_argument("identity '" + entry.id + "' needs order >= " +
                                std::to_string(entry.min_order));
  }
  CheckReport report;
  report.check_id = entry.id;
  report.param("order", order);
  for (const auto& clause : entry.clauses(order, cache)) evaluate_clause(clause, report);
  report.settle();
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace crankstat
