#pragma once

#include <span>
#include <vector>

#include "crankstat/crank_table.hpp"

namespace crankstat {

/// Parts in weakly decreasing order.
using Partition = std::vector<int>;

struct OverlinedPart {
  int value;
  bool overlined;
  friend bool operator==(const OverlinedPart&, const OverlinedPart&) = default;
};

/// Weakly decreasing by value; at most one overlined copy per value, placed
/// before the plain copies of that value.
using Overpartition = std::vector<OverlinedPart>;

/// (lambda^(1), ..., lambda^(k)).
using KColoredPartition = std::vector<Partition>;

struct WeightedCount {
  int m;
  int weight;
  friend bool operator==(const WeightedCount&, const WeightedCount&) = default;
};

/// How one object contributes to a table row. Weights always sum to +1.
using WeightedContribution = std::vector<WeightedCount>;

/// Brute-force ceilings for oracle tables.
struct OracleLimits {
  static constexpr int partitions = 60;
  static constexpr int overpartitions = 25;
  static constexpr int kcolored_n = 25;
  static constexpr int kcolored_k = 4;
};

namespace detail {

template <class Visit>
void partitions_from(std::vector<int>& buf, int remaining, int min_part, int pos, Visit& visit) {
  for (int p = min_part; p <= remaining; ++p) {
    buf[pos] = p;
    if (p == remaining) {
      visit(std::span<const int>(buf).subspan(static_cast<std::size_t>(pos)));
    } else if (remaining - p >= p) {
      partitions_from(buf, remaining - p, p, pos - 1, visit);
    }
  }
}

}  // namespace detail

/// Calls visit(span) once per partition of n, parts weakly decreasing.
/// Order is colexicographic: the smallest part varies slowest, so
/// 1+1+1+1 comes first and (n) comes last.
template <class Visit>
void for_each_partition(int n, Visit&& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(std::span<const int>());
    return;
  }
  std::vector<int> buf(static_cast<std::size_t>(n));
  detail::partitions_from(buf, n, 1, n - 1, visit);
}

std::vector<Partition> partitions(int n);
std::vector<Overpartition> overpartitions(int n);

/// Every k-tuple of partitions with total size n. Components vary with the
/// last component fastest.
std::vector<KColoredPartition> kcolored_partitions(int n, int k);

/// Largest part minus number of parts. Throws std::invalid_argument for the empty partition.
int rank(std::span<const int> parts);

/// Andrews-Garvan crank. Throws std::invalid_argument for the empty partition.
int crank(std::span<const int> parts);

/// Crank with the n <= 1 conventions: the empty partition counts +1 at m=0,
/// and (1) counts -1 at m=0 and +1 at m=-1 and m=1.
WeightedContribution crank_contrib(std::span<const int> parts);

/// crank_contrib of the non-overlined parts.
WeightedContribution first_residual_contrib(const Overpartition& o);

/// crank_contrib of the even non-overlined parts, each halved.
WeightedContribution second_residual_contrib(const Overpartition& o);

/// Parts in the first component minus parts in the second. Requires k >= 2.
int kcrank(const KColoredPartition& c);

/// Size of an overpartition (sum of values).
int size(const Overpartition& o);

/// Weighted counts by brute-force enumeration. Throws std::invalid_argument
/// above the OracleLimits ceilings.
CrankTable oracle_table(Statistic stat, int n_max);

}  // namespace crankstat
