#pragma once

#include <iosfwd>

#include "crankstat/bivariate.hpp"
#include "crankstat/crank_table.hpp"

namespace crankstat {

/// The bivariate generating function for a statistic. Rank has none.
BivariateSeries statistic_gf(Statistic stat, int order);

/// Reads rows 0..n_max of a generating function into a table, checking the
/// support (|m| <= n) and m -> -m symmetry of every row.
CrankTable table_from_gf(Statistic stat, const BivariateSeries& gf, int n_max);

/// Table from the generating function or from brute-force enumeration.
/// Throws std::invalid_argument for rank with Provenance::gf.
CrankTable build_table(Statistic stat, int n_max, Provenance provenance);

/// n -> count(m, n).
TruncSeries table_column(const CrankTable& t, int m);

/// n -> count(m-1, n) - count(m, n). Requires m >= 1.
TruncSeries diff_column(const CrankTable& t, int m);

/// n -> count(m, n) - count(m, n-1) for n >= 1; the q^0 coefficient is 0.
TruncSeries monotone_diff_row(const CrankTable& t, int m);

/// CSV with header `n,m,count`; every row n expanded over m = -n..n.
void write_csv(std::ostream& out, const CrankTable& t);

/// {"statistic", "n_max", "rows":[{"n", "counts":{"m": "v"}}]}; counts are decimal strings.
void write_json(std::ostream& out, const CrankTable& t);

}  // namespace crankstat
