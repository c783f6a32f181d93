#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crankstat/bivariate.hpp"
#include "crankstat/crank_table.hpp"

namespace crankstat {

/// A cell (or exponent) named by a check. `where` distinguishes sub-scans of
/// one check, e.g. the two inequalities of the rank check.
struct Cell {
  int m = 0;
  int n = 0;
  std::string where;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A violation found by a scan, with the two compared values.
struct CellValue {
  Cell cell;
  Integer lhs;
  Integer rhs;
};

struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::vector<CellValue> exceptions;
  std::vector<Cell> expected;
  /// Violations outside the scanned range of a theorem (below its threshold).
  std::vector<CellValue> informational;
  double runtime_ms = 0.0;

  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  void param(std::string key, int value) { param(std::move(key), std::to_string(value)); }

  /// Sets `pass` to whether the found cells are exactly the expected ones.
  void settle();
};

/// Scan window: n in [n_first, n_last] and m in [m_first, n + m_last_offset].
/// When info_from < n_first, rows [info_from, n_first) are scanned too and
/// reported informationally without affecting the verdict.
struct ScanRange {
  int n_first = 0;
  int n_last = 0;
  int m_first = 0;
  int m_last_offset = 0;
  int info_from = -1;
};

/// Flags cells with count(m-1, n) < count(m, n).
CheckReport check_unimodal_step(std::string id, const CrankTable& t, ScanRange range,
                                 std::vector<Cell> expected = {});

/// Flags cells with count(m, n) < count(m, n-1). Requires range.n_first >= 1.
CheckReport check_monotone_n(std::string id, const CrankTable& t, ScanRange range,
                             std::vector<Cell> expected = {});

/// N(m,n) >= N(m+2,n) for all m, n >= 0, and N(m,n) >= N(m,n-1) for n >= 12,
/// n != m+2, from an enumerated rank table.
CheckReport check_rank_inequalities(int n_max);

/// Cell-by-cell equality over the common n range.
CheckReport check_table_consistency(const CrankTable& gf, const CrankTable& oracle);

/// Symmetry and support of every row of a raw generating function, then
/// count(m-1,n) >= count(m,n) for m >= 1. Only the k = 2, n = 1 row may fail.
CheckReport check_kcrank_unimodal(const BivariateSeries& gf, int k, int n_max);

/// Memoizes generating functions and tables across checks. Safe to share
/// between threads; each entry is built once.
class TableCache {
 public:
  std::shared_ptr<const BivariateSeries> gf(Statistic stat, int order);
  std::shared_ptr<const CrankTable> table(Statistic stat, int n_max, Provenance provenance);

 private:
  template <class T>
  using Slot = std::shared_future<std::shared_ptr<const T>>;

  std::mutex mutex_;
  std::map<std::pair<Statistic, int>, Slot<BivariateSeries>> gfs_;
  std::map<std::tuple<Statistic, int, Provenance>, Slot<CrankTable>> tables_;
};

/// Options shared by every check. Unset values fall back to per-check defaults.
struct RunParams {
  std::optional<int> n_max;
  std::optional<int> order;
  std::vector<int> ks = {2, 3, 4, 5, 6};
};

/// A named, runnable check. One spec may emit several reports (one per k).
struct CheckSpec {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
  std::function<std::vector<CheckReport>(const RunParams&, TableCache&)> run;
};

/// Theorem sweeps and GF/oracle cross-checks.
const std::vector<CheckSpec>& sweep_checks();

/// Cross-check for one statistic (used by the crosscheck command).
CheckReport run_crosscheck(Statistic stat, int n_max, TableCache& cache);

/// Every runnable check: sweeps, cross-checks, and the identity catalog.
std::vector<CheckSpec> all_checks();

/// Resolves ids and aliases ("all" selects everything). Throws
/// std::invalid_argument for an unknown id.
std::vector<CheckSpec> select_checks(const std::vector<std::string>& ids);

/// Runs the checks on up to `threads` workers and returns the reports sorted by id.
std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& checks, const RunParams& params,
                                    int threads = 1);

/// One report as a JSON object: check_id, params, verdict, exceptions, runtime_ms.
std::string report_json(const CheckReport& r, bool omit_timing = false);

/// {"verdict": ..., "reports": [...]}.
std::string batch_json(const std::vector<CheckReport>& reports, bool omit_timing = false);

}  // namespace crankstat
