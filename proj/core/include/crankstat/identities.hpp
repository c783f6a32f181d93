#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crankstat/series.hpp"
#include "crankstat/verify.hpp"

namespace crankstat {

/// One comparison inside a catalog entry.
///
/// With `rhs` set, coefficients of lhs and rhs must agree on [from, to].
/// Without it, lhs is sign-checked on [from, to]: the exponents holding
/// negative coefficients must be exactly `expected_negative`.
struct IdentityClause {
  std::string label;
  int m = 0;
  TruncSeries lhs;
  std::optional<TruncSeries> rhs;
  int from = 0;
  int to = -1;  ///< -1 means the series order
  std::set<int> expected_negative;
};

struct IdentityCatalogEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
  int default_order = 200;
  int min_order = 0;
  std::function<std::vector<IdentityClause>(int order, TableCache& cache)> clauses;
};

const std::vector<IdentityCatalogEntry>& identity_catalog();

/// Finds an entry by id or alias; nullptr when unknown.
const IdentityCatalogEntry* find_identity(const std::string& id_or_alias);

/// Builds both sides at the given order and compares them clause by clause.
CheckReport check_identity(const IdentityCatalogEntry& entry, int order, TableCache& cache);

/// Compares a single clause, appending exceptions and expected cells to the report.
void evaluate_clause(const IdentityClause& clause, CheckReport& report);

}  // namespace crankstat
