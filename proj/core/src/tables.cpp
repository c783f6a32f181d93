#include "crankstat/tables.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "crankstat/enumerate.hpp"
#include "json.hpp"

namespace crankstat {

BivariateSeries statistic_gf(Statistic stat, int order) {
  switch (stat.kind) {
    case StatKind::crank: return crank_gf(order);
    case StatKind::ocrank: return overline_crank_gf(order);
    case StatKind::m2crank: return m2_crank_gf(order);
    case StatKind::kcrank: return kcrank_gf(stat.k, order);
    case StatKind::rank: break;
  }
  throw std::invalid_argument("no generating function backend for " + stat.label());
}

CrankTable table_from_gf(Statistic stat, const BivariateSeries& gf, int n_max) {
  if (n_max < 0 || n_max > gf.order()) {
    throw std::invalid_argument("n_max " + std::to_string(n_max) +
                                " exceeds generating function order " +
                                std::to_string(gf.order()));
  }
  std::vector<std::vector<Integer>> full(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto& row = gf.row(n);
    if (row.degree() > n) {
      throw std::logic_error(stat.label() + " row " + std::to_string(n) +
                             " has support beyond |m| <= n");
    }
    full[n].reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int m = -n; m <= n; ++m) full[n].push_back(row.coeff(m));
  }
  return CrankTable::from_full_rows(stat, Provenance::gf, full);
}

CrankTable build_table(Statistic stat, int n_max, Provenance provenance) {
  if (provenance == Provenance::oracle) return oracle_table(stat, n_max);
  if (stat.kind == StatKind::rank) {
    throw std::invalid_argument("rank tables are only available from enumeration");
  }
  return table_from_gf(stat, statistic_gf(stat, n_max), n_max);
}

TruncSeries table_column(const CrankTable& t, int m) {
  std::vector<Integer> c(static_cast<std::size_t>(t.n_max()) + 1);
  for (int n = 0; n <= t.n_max(); ++n) c[n] = t.count(m, n);
  return TruncSeries::from_coeffs(std::move(c));
}

TruncSeries diff_column(const CrankTable& t, int m) {
  if (m < 1) throw std::invalid_argument("diff_column needs m >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(t.n_max()) + 1);
  for (int n = 0; n <= t.n_max(); ++n) c[n] = t.count(m - 1, n) - t.count(m, n);
  return TruncSeries::from_coeffs(std::move(c));
}

TruncSeries monotone_diff_row(const CrankTable& t, int m) {
  std::vector<Integer> c(static_cast<std::size_t>(t.n_max()) + 1);
  for (int n = 1; n <= t.n_max(); ++n) c[n] = t.count(m, n) - t.count(m, n - 1);
  return TruncSeries::from_coeffs(std::move(c));
}

void write_csv(std::ostream& out, const CrankTable& t) {
  out << "n,m,count\n";
  for (int n = 0; n <= t.n_max(); ++n) {
    for (int m = -n; m <= n; ++m) out << n << ',' << m << ',' << t.count(m, n).get_str() << '\n';
  }
}

void write_json(std::ostream& out, const CrankTable& t) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["statistic"] = std::string(t.statistic().kind_name());
  if (t.statistic().kind == StatKind::kcrank) doc["k"] = t.statistic().k;
  doc["n_max"] = t.n_max();
  doc["provenance"] = std::string(to_string(t.provenance()));
  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= t.n_max(); ++n) {
    ordered_json counts = ordered_json::object();
    for (int m = -n; m <= n; ++m) counts[std::to_string(m)] = t.count(m, n).get_str();
    rows.push_back({{"n", n}, {"counts", std::move(counts)}});
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace crankstat
