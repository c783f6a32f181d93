#include "crankstat/crank_table.hpp"

#include <stdexcept>

namespace crankstat {

namespace {
const Integer kZero = 0;
}

std::string_view Statistic::kind_name() const {
  switch (kind) {
    case StatKind::crank: return "crank";
    case StatKind::ocrank: return "ocrank";
    case StatKind::m2crank: return "m2crank";
    case StatKind::kcrank: return "kcrank";
    case StatKind::rank: return "rank";
  }
  return "unknown";
}

std::string Statistic::label() const {
  std::string s(kind_name());
  if (kind == StatKind::kcrank) s += "(k=" + std::to_string(k) + ")";
  return s;
}

Statistic Statistic::parse(std::string_view name, int k) {
  if (name == "crank") return crank();
  if (name == "ocrank") return ocrank();
  if (name == "m2crank") return m2crank();
  if (name == "rank") return rank();
  if (name == "kcrank") {
    if (k < 2) throw std::invalid_argument("kcrank needs k >= 2");
    return kcrank(k);
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::string_view to_string(Provenance p) { return p == Provenance::gf ? "gf" : "oracle"; }

CrankTable::CrankTable(Statistic stat, Provenance provenance,
                       std::vector<std::vector<Integer>> half_rows)
    : stat_(stat), provenance_(provenance), rows_(std::move(half_rows)) {}

CrankTable CrankTable::from_full_rows(Statistic stat, Provenance provenance,
                                      const std::vector<std::vector<Integer>>& full_rows) {
  if (full_rows.empty()) throw std::invalid_argument("a table needs at least the n = 0 row");
  std::vector<std::vector<Integer>> half(full_rows.size());
  for (std::size_t n = 0; n < full_rows.size(); ++n) {
    const auto& row = full_rows[n];
    if (row.size() != 2 * n + 1) {
      throw std::invalid_argument("row " + std::to_string(n) + " must span m = -n..n");
    }
    const auto centre = static_cast<std::ptrdiff_t>(n);
    for (std::size_t m = 1; m <= n; ++m) {
      if (row[centre + m] != row[centre - m]) {
        throw std::logic_error(stat.label() + " row " + std::to_string(n) +
                               " is not symmetric at m = " + std::to_string(m));
      }
    }
    half[n].assign(row.begin() + centre, row.end());
  }
  return CrankTable(stat, provenance, std::move(half));
}

const Integer& CrankTable::count(int m, int n) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("n = " + std::to_string(n) + " outside table range [0, " +
                            std::to_string(n_max()) + "]");
  }
  const int a = m < 0 ? -m : m;
  if (a > n) return kZero;
  return rows_[n][a];
}

Integer CrankTable::row_sum(int n) const {
  Integer s = count(0, n);
  for (int m = 1; m <= n; ++m) s += 2 * count(m, n);
  return s;
}

CrankTable CrankTable::truncated(int n_max) const {
  if (n_max < 0 || n_max > this->n_max()) throw std::out_of_range("truncation beyond table");
  return CrankTable(stat_, provenance_,
                    std::vector<std::vector<Integer>>(rows_.begin(), rows_.begin() + n_max + 1));
}

}  // namespace crankstat
