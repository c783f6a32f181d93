#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crankstat/series.hpp"

namespace crankstat {

enum class StatKind { crank, ocrank, m2crank, kcrank, rank };

/// Which weighted count a table holds. `k` is meaningful for kcrank only.
struct Statistic {
  StatKind kind = StatKind::crank;
  int k = 0;

  static Statistic crank() { return {StatKind::crank, 0}; }
  static Statistic ocrank() { return {StatKind::ocrank, 0}; }
  static Statistic m2crank() { return {StatKind::m2crank, 0}; }
  static Statistic kcrank(int k) { return {StatKind::kcrank, k}; }
  static Statistic rank() { return {StatKind::rank, 0}; }

  /// "crank", "ocrank", "m2crank", "rank", or "kcrank" (k is reported separately).
  std::string_view kind_name() const;
  /// kind_name() plus "k=<k>" for kcrank; used as a display and cache key.
  std::string label() const;
  /// Accepts the kind names above; for kcrank the caller supplies k.
  static Statistic parse(std::string_view name, int k = 0);

  friend auto operator<=>(const Statistic&, const Statistic&) = default;
};

enum class Provenance { gf, oracle };
std::string_view to_string(Provenance p);

/// Weighted counts count(m, n) for 0 <= n <= n_max.
///
/// Every statistic handled here is symmetric under m -> -m, so only m >= 0 is
/// stored; count(-m, n) reads the same cell. Cells with |m| > n are zero.
class CrankTable {
 public:
  /// Builds from full rows: full_rows[n] has 2n+1 entries for m = -n..n.
  /// Throws std::logic_error if some row is not symmetric.
  static CrankTable from_full_rows(Statistic stat, Provenance provenance,
                                   const std::vector<std::vector<Integer>>& full_rows);

  Statistic statistic() const { return stat_; }
  Provenance provenance() const { return provenance_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  bool symmetric() const { return true; }

  /// Throws std::out_of_range for n outside [0, n_max].
  const Integer& count(int m, int n) const;
  Integer row_sum(int n) const;

  /// The same table restricted to n <= n_max.
  CrankTable truncated(int n_max) const;

 private:
  CrankTable(Statistic stat, Provenance provenance, std::vector<std::vector<Integer>> half_rows);

  Statistic stat_;
  Provenance provenance_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n][m] for 0 <= m <= n
};

}  // namespace crankstat
