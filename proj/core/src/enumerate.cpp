#include "crankstat/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crankstat {

namespace {

void require_nonempty(std::span<const int> parts, const char* what) {
  if (parts.empty()) throw std::invalid_argument(std::string(what) + " of the empty partition");
}

template <class Visit>
void for_each_overpartition(int n, Visit&& visit) {
  Overpartition o;
  std::vector<std::pair<int, int>> runs;  // (value, multiplicity), decreasing values
  for_each_partition(n, [&](std::span<const int> parts) {
    runs.clear();
    for (int p : parts) {
      if (!runs.empty() && runs.back().first == p) {
        ++runs.back().second;
      } else {
        runs.emplace_back(p, 1);
      }
    }
    const std::uint32_t masks = 1u << runs.size();
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      o.clear();
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto [value, mult] = runs[i];
        const bool over = (mask >> i) & 1u;
        if (over) o.push_back({value, true});
        for (int c = over ? 1 : 0; c < mult; ++c) o.push_back({value, false});
      }
      visit(static_cast<const Overpartition&>(o));
    }
  });
}

// Visits each k-tuple as a span of component pointers into per-size partition
// lists, so the hot loop never copies parts.
template <class Visit>
void for_each_kcolored(int n, int k, Visit&& visit) {
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) by_size[s] = partitions(s);

  std::vector<const Partition*> current(static_cast<std::size_t>(k));
  std::vector<int> sizes(static_cast<std::size_t>(k));

  auto place = [&](auto&& self, int c) -> void {
    if (c == k) {
      visit(std::span<const Partition* const>(current));
      return;
    }
    for (const auto& p : by_size[sizes[c]]) {
      current[c] = &p;
      self(self, c + 1);
    }
  };
  // Choose component sizes, then walk the product of the partition lists.
  auto split = [&](auto&& self, int comp, int remaining) -> void {
    if (comp == k - 1) {
      sizes[comp] = remaining;
      place(place, 0);
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      sizes[comp] = s;
      self(self, comp + 1, remaining - s);
    }
  };
  split(split, 0, n);
}

// Accumulates weights into rows spanning m = -n..n.
class RowAccumulator {
 public:
  explicit RowAccumulator(int n_max) : rows_(static_cast<std::size_t>(n_max) + 1) {
    for (int n = 0; n <= n_max; ++n) rows_[n].assign(2 * static_cast<std::size_t>(n) + 1, 0);
  }

  void add(int n, int m, std::int64_t weight) {
    if (m < -n || m > n) {
      throw std::logic_error("statistic value " + std::to_string(m) + " outside [-n, n] at n = " +
                             std::to_string(n));
    }
    rows_[n][m + n] += weight;
  }

  void add(int n, const WeightedContribution& contrib) {
    for (const auto& [m, w] : contrib) add(n, m, w);
  }

  std::vector<std::vector<Integer>> finish() const {
    std::vector<std::vector<Integer>> out(rows_.size());
    for (std::size_t n = 0; n < rows_.size(); ++n) {
      out[n].reserve(rows_[n].size());
      for (auto v : rows_[n]) out[n].emplace_back(static_cast<long>(v));
    }
    return out;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

void require_ceiling(int n_max, int ceiling, const char* family) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > ceiling) {
    throw std::invalid_argument(std::string("oracle enumeration of ") + family +
                                " is limited to n <= " + std::to_string(ceiling));
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

std::vector<Overpartition> overpartitions(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& o) { out.push_back(o); });
  return out;
}

std::vector<KColoredPartition> kcolored_partitions(int n, int k) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  std::vector<KColoredPartition> out;
  for_each_kcolored(n, k, [&](std::span<const Partition* const> c) {
    KColoredPartition tuple;
    for (const Partition* p : c) tuple.push_back(*p);
    out.push_back(std::move(tuple));
  });
  return out;
}

int rank(std::span<const int> parts) {
  require_nonempty(parts, "rank");
  return parts.front() - static_cast<int>(parts.size());
}

int crank(std::span<const int> parts) {
  require_nonempty(parts, "crank");
  const auto ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) return parts.front();
  const auto larger = static_cast<int>(
      std::count_if(parts.begin(), parts.end(), [ones](int p) { return p > ones; }));
  return larger - ones;
}

WeightedContribution crank_contrib(std::span<const int> parts) {
  if (parts.empty()) return {{0, 1}};
  if (parts.size() == 1 && parts.front() == 1) return {{0, -1}, {-1, 1}, {1, 1}};
  return {{crank(parts), 1}};
}

WeightedContribution first_residual_contrib(const Overpartition& o) {
  Partition plain;
  for (const auto& part : o) {
    if (!part.overlined) plain.push_back(part.value);
  }
  return crank_contrib(plain);
}

WeightedContribution second_residual_contrib(const Overpartition& o) {
  Partition halved;
  for (const auto& part : o) {
    if (!part.overlined && part.value % 2 == 0) halved.push_back(part.value / 2);
  }
  return crank_contrib(halved);
}

int kcrank(const KColoredPartition& c) {
  if (c.size() < 2) throw std::invalid_argument("k-crank needs k >= 2");
  return static_cast<int>(c[0].size()) - static_cast<int>(c[1].size());
}

int size(const Overpartition& o) {
  int s = 0;
  for (const auto& part : o) s += part.value;
  return s;
}

CrankTable oracle_table(Statistic stat, int n_max) {
  switch (stat.kind) {
    case StatKind::crank:
    case StatKind::rank: {
      require_ceiling(n_max, OracleLimits::partitions, "partitions");
      RowAccumulator acc(n_max);
      const bool by_rank = stat.kind == StatKind::rank;
      for (int n = 0; n <= n_max; ++n) {
        for_each_partition(n, [&](std::span<const int> p) {
          if (by_rank) {
            acc.add(n, p.empty() ? 0 : rank(p), 1);
          } else {
            acc.add(n, crank_contrib(p));
          }
        });
      }
      return CrankTable::from_full_rows(stat, Provenance::oracle, acc.finish());
    }
    case StatKind::ocrank:
    case StatKind::m2crank: {
      require_ceiling(n_max, OracleLimits::overpartitions, "overpartitions");
      RowAccumulator acc(n_max);
      const bool first = stat.kind == StatKind::ocrank;
      for (int n = 0; n <= n_max; ++n) {
        for_each_overpartition(n, [&](const Overpartition& o) {
          acc.add(n, first ? first_residual_contrib(o) : second_residual_contrib(o));
        });
      }
      return CrankTable::from_full_rows(stat, Provenance::oracle, acc.finish());
    }
    case StatKind::kcrank: {
      if (stat.k < 2 || stat.k > OracleLimits::kcolored_k) {
        throw std::invalid_argument("oracle k-crank tables support 2 <= k <= " +
                                    std::to_string(OracleLimits::kcolored_k));
      }
      require_ceiling(n_max, OracleLimits::kcolored_n, "k-colored partitions");
      RowAccumulator acc(n_max);
      for (int n = 0; n <= n_max; ++n) {
        for_each_kcolored(n, stat.k, [&](std::span<const Partition* const> c) {
          acc.add(n, static_cast<int>(c[0]->size()) - static_cast<int>(c[1]->size()), 1);
        });
      }
      return CrankTable::from_full_rows(stat, Provenance::oracle, acc.finish());
    }
  }
  throw std::invalid_argument("unsupported statistic");
}

}  // namespace crankstat
