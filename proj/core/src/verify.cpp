#include "crankstat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "crankstat/enumerate.hpp"
#include "crankstat/identities.hpp"
#include "crankstat/tables.hpp"

namespace crankstat {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_range(const CrankTable& t, const ScanRange& r) {
  if (r.n_first < 0 || r.n_last > t.n_max()) {
    throw std::invalid_argument("scan range n in [" + std::to_string(r.n_first) + ", " +
                                std::to_string(r.n_last) + "] exceeds table n_max " +
                                std::to_string(t.n_max()));
  }
}

template <class Visit>
void for_each_cell(int n_first, int n_last, const ScanRange& r, Visit&& visit) {
  for (int n = n_first; n <= n_last; ++n) {
    for (int m = r.m_first; m <= n + r.m_last_offset; ++m) visit(m, n);
  }
}

void add_range_params(CheckReport& report, const CrankTable& t, const ScanRange& r) {
  report.param("statistic", t.statistic().label());
  report.param("n_first", r.n_first);
  report.param("n_last", r.n_last);
  report.param("m_first", r.m_first);
  report.param("m_last", "n" + (r.m_last_offset >= 0 ? "+" + std::to_string(r.m_last_offset)
                                                       : std::to_string(r.m_last_offset)));
}

template <class T, class Key, class Build>
std::shared_ptr<const T> memoize(std::mutex& mutex,
                                 std::map<Key, std::shared_future<std::shared_ptr<const T>>>& slots,
                                 const Key& key, Build&& build) {
  std::promise<std::shared_ptr<const T>> promise;
  std::shared_future<std::shared_ptr<const T>> slot;
  bool owner = false;
  {
    std::lock_guard lock(mutex);
    auto it = slots.find(key);
    if (it == slots.end()) {
      slot = promise.get_future().share();
      slots.emplace(key, slot);
      owner = true;
    } else {
      slot = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(build());
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return slot.get();
}

std::string with_k(std::string id, const Statistic& stat) {
  if (stat.kind == StatKind::kcrank) id += "[k=" + std::to_string(stat.k) + "]";
  return id;
}

}  // namespace

void CheckReport::settle() {
  std::set<Cell> found;
  for (const auto& e : exceptions) found.insert(e.cell);
  const std::set<Cell> wanted(expected.begin(), expected.end());
  pass = found == wanted;
}

CheckReport check_unimodal_step(std::string id, const CrankTable& t, ScanRange range,
                                 std::vector<Cell> expected) {
  const auto start = Clock::now();
  require_range(t, range);
  CheckReport report;
  report.check_id = std::move(id);
  add_range_params(report, t, range);
  auto scan = [&](std::vector<CellValue>& out) {
    return [&t, &out](int m, int n) {
      const Integer& lhs = t.count(m - 1, n);
      const Integer& rhs = t.count(m, n);
      if (lhs < rhs) out.push_back({{m, n, ""}, lhs, rhs});
    };
  };
  for_each_cell(range.n_first, range.n_last, range, scan(report.exceptions));
  if (range.info_from >= 0 && range.info_from < range.n_first) {
    for_each_cell(range.info_from, std::min(range.n_first - 1, range.n_last), range,
                  scan(report.informational));
  }
  report.expected = std::move(expected);
  report.settle();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport check_monotone_n(std::string id, const CrankTable& t, ScanRange range,
                             std::vector<Cell> expected) {
  const auto start = Clock::now();
  require_range(t, range);
  if (range.n_first < 1) throw std::invalid_argument("monotonicity scans start at n >= 1");
  CheckReport report;
  report.check_id = std::move(id);
  add_range_params(report, t, range);
  auto scan = [&](std::vector<CellValue>& out) {
    return [&t, &out](int m, int n) {
      const Integer& lhs = t.count(m, n);
      const Integer& rhs = t.count(m, n - 1);
      if (lhs < rhs) out.push_back({{m, n, ""}, lhs, rhs});
    };
  };
  for_each_cell(range.n_first, range.n_last, range, scan(report.exceptions));
  const int info_from = std::max(range.info_from, 1);
  if (range.info_from >= 0 && info_from < range.n_first) {
    for_each_cell(info_from, std::min(range.n_first - 1, range.n_last), range,
                  scan(report.informational));
  }
  report.expected = std::move(expected);
  report.settle();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport check_rank_inequalities(int n_max) {
  const auto start = Clock::now();
  const CrankTable t = oracle_table(Statistic::rank(), n_max);
  CheckReport report;
  report.check_id = "chan-mao";
  report.param("statistic", "rank");
  report.param("n_max", n_max);
  report.param("provenance", "oracle");

  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const Integer& lhs = t.count(m, n);
      const Integer& rhs = t.count(m + 2, n);
      if (lhs < rhs) report.exceptions.push_back({{m, n, "N(m,n)>=N(m+2,n)"}, lhs, rhs});
    }
  }
  constexpr int threshold = 12;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      if (n == m + 2) continue;
      const Integer& lhs = t.count(m, n);
      const Integer& rhs = t.count(m, n - 1);
      if (lhs >= rhs) continue;
      CellValue v{{m, n, "N(m,n)>=N(m,n-1)"}, lhs, rhs};
      (n >= threshold ? report.exceptions : report.informational).push_back(std::move(v));
    }
  }
  report.settle();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport check_table_consistency(const CrankTable& gf, const CrankTable& oracle) {
  const auto start = Clock::now();
  if (gf.statistic() != oracle.statistic()) {
    throw std::invalid_argument("consistency check between different statistics: " +
                                gf.statistic().label() + " vs " + oracle.statistic().label());
  }
  const int n_max = std::min(gf.n_max(), oracle.n_max());
  CheckReport report;
  report.check_id = with_k("crosscheck-" + std::string(gf.statistic().kind_name()), gf.statistic());
  report.param("statistic", gf.statistic().label());
  report.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = -n; m <= n; ++m) {
      const Integer& a = gf.count(m, n);
      const Integer& b = oracle.count(m, n);
      if (a != b) report.exceptions.push_back({{m, n, ""}, a, b});
    }
  }
  report.settle();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

CheckReport check_kcrank_unimodal(const BivariateSeries& gf, int k, int n_max) {
  const auto start = Clock::now();
  if (n_max > gf.order()) throw std::invalid_argument("n_max exceeds generating function order");
  CheckReport report;
  report.check_id = "kcrank-unimodal[k=" + std::to_string(k) + "]";
  report.param("statistic", Statistic::kcrank(k).label());
  report.param("k", k);
  report.param("n_max", n_max);

  for (int n = 0; n <= n_max; ++n) {
    const auto& row = gf.row(n);
    for (int m = 1; m <= row.bound(); ++m) {
      if (row.coeff(m) != row.coeff(-m)) {
        report.exceptions.push_back({{m, n, "symmetry"}, row.coeff(m), row.coeff(-m)});
      }
      if (m > n && sgn(row.coeff(m)) != 0) {
        report.exceptions.push_back({{m, n, "support"}, row.coeff(m), 0});
      }
    }
  }
  if (report.exceptions.empty()) {
    const CrankTable t = table_from_gf(Statistic::kcrank(k), gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 1; m <= n + 1; ++m) {
        const Integer& lhs = t.count(m - 1, n);
        const Integer& rhs = t.count(m, n);
        if (lhs < rhs) report.exceptions.push_back({{m, n, "step"}, lhs, rhs});
      }
    }
  }
  // The row {-1: 1, 0: 0, 1: 1} of 2-colored partitions of 1 is the one exception.
  if (k == 2 && n_max >= 1) report.expected.push_back({1, 1, "step"});
  report.settle();
  report.runtime_ms = elapsed_ms(start);
  return report;
}

std::shared_ptr<const BivariateSeries> TableCache::gf(Statistic stat, int order) {
  return memoize<BivariateSeries>(mutex_, gfs_, std::pair{stat, order}, [&] {
    return std::make_shared<const BivariateSeries>(statistic_gf(stat, order));
  });
}

std::shared_ptr<const CrankTable> TableCache::table(Statistic stat, int n_max,
                                                    Provenance provenance) {
  return memoize<CrankTable>(mutex_, tables_, std::tuple{stat, n_max, provenance}, [&] {
    if (provenance == Provenance::gf && stat.kind != StatKind::rank) {
      return std::make_shared<const CrankTable>(table_from_gf(stat, *gf(stat, n_max), n_max));
    }
    return std::make_shared<const CrankTable>(build_table(stat, n_max, provenance));
  });
}

CheckReport run_crosscheck(Statistic stat, int n_max, TableCache& cache) {
  const auto start = Clock::now();
  const auto gf = cache.table(stat, n_max, Provenance::gf);
  const auto oracle = cache.table(stat, n_max, Provenance::oracle);
  CheckReport report = check_table_consistency(*gf, *oracle);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

const std::vector<CheckSpec>& sweep_checks() {
  static const std::vector<CheckSpec> checks = [] {
    std::vector<CheckSpec> c;
    auto gf_table = [](TableCache& cache, Statistic stat, int n_max) {
      return cache.table(stat, n_max, Provenance::gf);
    };

    c.push_back({"chan-mao", {"thm-1.1"},
                 "rank: N(m,n) >= N(m+2,n); N(m,n) >= N(m,n-1) for n >= 12, n != m+2 (enumeration)",
                 [](const RunParams& p, TableCache&) {
                   return std::vector{check_rank_inequalities(p.n_max.value_or(40))};
                 }});
    c.push_back({"ji-zang-unimodal", {"thm-1.2"},
                 "crank: M(m-1,n) >= M(m,n) for n >= 44, 1 <= m <= n-1",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::crank(), n_max);
                   return std::vector{check_unimodal_step("ji-zang-unimodal", *t,
                                                          {44, n_max, 1, -1, 0})};
                 }});
    c.push_back({"ji-zang-monotone", {"thm-1.3"},
                 "crank: M(m,n) >= M(m,n-1) for n >= 14, 0 <= m <= n-2",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::crank(), n_max);
                   return std::vector{check_monotone_n("ji-zang-monotone", *t,
                                                       {14, n_max, 0, -2, 1})};
                 }});
    c.push_back({"overline-unimodal", {"thm-1.4"},
                 "first residual crank: M(m-1,n) >= M(m,n) for m >= 1 except (1,1), (1,2)",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::ocrank(), n_max);
                   std::vector<Cell> expected;
                   if (n_max >= 1) expected.push_back({1, 1, ""});
                   if (n_max >= 2) expected.push_back({1, 2, ""});
                   return std::vector{check_unimodal_step("overline-unimodal", *t,
                                                          {0, n_max, 1, 1}, expected)};
                 }});
    c.push_back({"m2-unimodal", {"thm-1.5"},
                 "second residual crank: M2(m-1,n) >= M2(m,n) for m >= 1",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::m2crank(), n_max);
                   return std::vector{check_unimodal_step("m2-unimodal", *t, {0, n_max, 1, 1})};
                 }});
    c.push_back({"overline-monotone", {"thm-1.7"},
                 "first residual crank: M(m,n) >= M(m,n-1) for m >= 0, n >= 1",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::ocrank(), n_max);
                   return std::vector{check_monotone_n("overline-monotone", *t, {1, n_max, 0, 0})};
                 }});
    c.push_back({"m2-monotone", {"thm-1.7"},
                 "second residual crank: M2(m,n) >= M2(m,n-1) for m >= 0, n >= 1",
                 [gf_table](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(300);
                   const auto t = gf_table(cache, Statistic::m2crank(), n_max);
                   return std::vector{check_monotone_n("m2-monotone", *t, {1, n_max, 0, 0})};
                 }});
    c.push_back({"kcrank-unimodal", {"conj-1.8"},
                 "k-crank rows symmetric and weakly decreasing for m >= 1, except k = 2, n = 1",
                 [](const RunParams& p, TableCache& cache) {
                   const int n_max = p.n_max.value_or(200);
                   std::vector<CheckReport> out;
                   for (int k : p.ks) {
                     if (k < 2) throw std::invalid_argument("k-crank needs k >= 2");
                     out.push_back(check_kcrank_unimodal(*cache.gf(Statistic::kcrank(k), n_max), k,
                                                         n_max));
                   }
                   return out;
                 }});
    c.push_back({"crosscheck", {},
                 "GF tables equal enumeration tables (crank n <= 40, others n <= 25, k <= 4)",
                 [](const RunParams& p, TableCache& cache) {
                   std::vector<CheckReport> out;
                   out.push_back(run_crosscheck(Statistic::crank(), p.n_max.value_or(40), cache));
                   out.push_back(run_crosscheck(Statistic::ocrank(), p.n_max.value_or(25), cache));
                   out.push_back(run_crosscheck(Statistic::m2crank(), p.n_max.value_or(25), cache));
                   for (int k : p.ks) {
                     if (k > OracleLimits::kcolored_k) continue;
                     out.push_back(
                         run_crosscheck(Statistic::kcrank(k), p.n_max.value_or(25), cache));
                   }
                   return out;
                 }});
    return c;
  }();
  return checks;
}

std::vector<CheckSpec> all_checks() {
  std::vector<CheckSpec> out = sweep_checks();
  for (const auto& entry : identity_catalog()) {
    out.push_back({entry.id, entry.aliases, entry.summary,
                   [&entry](const RunParams& p, TableCache& cache) {
                     return std::vector{
                         check_identity(entry, p.order.value_or(entry.default_order), cache)};
                   }});
  }
  return out;
}

std::vector<CheckSpec> select_checks(const std::vector<std::string>& ids) {
  const std::vector<CheckSpec> every = all_checks();
  std::vector<CheckSpec> out;
  std::set<std::string> taken;
  auto take = [&](const CheckSpec& spec) {
    if (taken.insert(spec.id).second) out.push_back(spec);
  };
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& spec : every) take(spec);
      continue;
    }
    bool matched = false;
    for (const auto& spec : every) {
      const bool alias =
          std::find(spec.aliases.begin(), spec.aliases.end(), id) != spec.aliases.end();
      if (spec.id == id || alias) {
        take(spec);
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  return out;
}

std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& checks, const RunParams& params,
                                    int threads) {
  if (checks.empty()) return {};
  TableCache cache;
  std::vector<std::vector<CheckReport>> results(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        results[i] = checks[i].run(params, cache);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads =
      static_cast<std::size_t>(std::clamp<long>(threads, 1, static_cast<long>(checks.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<CheckReport> flat;
  for (auto& r : results) {
    for (auto& report : r) flat.push_back(std::move(report));
  }
  std::stable_sort(flat.begin(), flat.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return flat;
}

}  // namespace crankstat
