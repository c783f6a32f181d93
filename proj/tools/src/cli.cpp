#include "crankstat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "crankstat/identities.hpp"
#include "crankstat/tables.hpp"
#include "crankstat/verify.hpp"

namespace crankstat::cli {

namespace {

// Thrown for configuration problems detected after parsing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  std::string stat;
  int k = 0;
  int n_max = 0;
  std::string source = "gf";
  std::string format = "csv";
  std::string output;
};

struct VerifyOptions {
  std::vector<std::string> checks;
  std::optional<int> n_max;
  std::optional<int> order;
  std::vector<int> ks;
  std::string output;
  bool omit_timing = false;
};

struct IdentityOptions {
  std::vector<std::string> ids;
  std::optional<int> order;
  std::string output;
  bool omit_timing = false;
};

struct CrosscheckOptions {
  std::string stat;
  int k = 0;
  int n_max = 25;
  std::string output;
  bool omit_timing = false;
};

// Writes `text` to the named file, or to `out` when no file is given.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  file << text << '\n';
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

int summarize(const std::vector<CheckReport>& reports, const std::string& path, bool omit_timing,
              std::ostream& out, std::ostream& err) {
  emit(path, out, batch_json(reports, omit_timing));
  bool ok = true;
  for (const auto& r : reports) {
    err << (r.pass ? "PASS " : "FAIL ") << r.check_id << " (" << r.exceptions.size()
        << " exceptions)\n";
    ok = ok && r.pass;
  }
  return ok ? all_pass : any_fail;
}

Statistic statistic_from(const std::string& name, int k) {
  if (name != "kcrank" && k != 0) throw ConfigError("--k only applies to kcrank");
  return Statistic::parse(name, k);
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  const Statistic stat = statistic_from(o.stat, o.k);
  const Provenance provenance = o.source == "oracle" ? Provenance::oracle : Provenance::gf;
  if (stat.kind == StatKind::rank && provenance == Provenance::gf) {
    throw ConfigError("rank tables come from enumeration only; pass --source oracle");
  }
  const CrankTable t = build_table(stat, o.n_max, provenance);
  std::ostringstream text;
  if (o.format == "json") {
    write_json(text, t);
  } else {
    write_csv(text, t);
  }
  std::string body = text.str();
  if (!body.empty() && body.back() == '\n') body.pop_back();
  emit(o.output, out, body);
  return all_pass;
}

int cmd_verify(const VerifyOptions& o, int threads, std::ostream& out, std::ostream& err) {
  if (o.n_max && o.order && *o.n_max > *o.order) {
    throw ConfigError("--n-max must not exceed --order");
  }
  RunParams params;
  params.n_max = o.n_max;
  params.order = o.order;
  if (!o.ks.empty()) params.ks = o.ks;
  for (int k : params.ks) {
    if (k < 2) throw ConfigError("--k values must be >= 2");
  }
  const auto checks = select_checks(o.checks);
  return summarize(run_checks(checks, params, threads), o.output, o.omit_timing, out, err);
}

int cmd_identity(const IdentityOptions& o, int threads, std::ostream& out, std::ostream& err) {
  std::vector<CheckSpec> checks;
  for (const auto& id : o.ids) {
    if (id == "all") {
      for (const auto& entry : identity_catalog()) checks.push_back(select_checks({entry.id}).front());
      continue;
    }
    if (find_identity(id) == nullptr) throw ConfigError("unknown identity '" + id + "'");
    checks.push_back(select_checks({find_identity(id)->id}).front());
  }
  RunParams params;
  params.order = o.order;
  return summarize(run_checks(checks, params, threads), o.output, o.omit_timing, out, err);
}

int cmd_crosscheck(const CrosscheckOptions& o, std::ostream& out, std::ostream& err) {
  const Statistic stat = statistic_from(o.stat, o.k);
  if (stat.kind == StatKind::rank) throw ConfigError("rank has no generating function backend");
  TableCache cache;
  return summarize({run_crosscheck(stat, o.n_max, cache)}, o.output, o.omit_timing, out, err);
}

int default_threads() {
  if (const char* env = std::getenv("CRANKSTAT_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact crank tables, inequality sweeps and q-series identity checks"};
  app.name("crankstat");
  app.require_subcommand(1);

  int threads = default_threads();
  app.add_option("--threads", threads, "Worker threads for independent checks (env CRANKSTAT_THREADS)")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> stats{"crank", "ocrank", "m2crank", "kcrank", "rank"};

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Export a crank table as CSV or JSON");
  table_cmd->add_option("--stat", table.stat, "Statistic")->required()->check(CLI::IsMember(stats));
  table_cmd->add_option("--k", table.k, "Number of colors for kcrank")->check(CLI::Range(2, 1000));
  table_cmd->add_option("--n-max", table.n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--source", table.source, "gf or oracle")
      ->check(CLI::IsMember({"gf", "oracle"}));
  table_cmd->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--output", table.output, "Output file (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run inequality sweeps and identity checks");
  verify_cmd->add_option("--check", verify.checks, "Check ids or aliases, comma separated, or all")
      ->required()
      ->delimiter(',');
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n for table sweeps")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--order", verify.order, "Truncation order for identities")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--k", verify.ks, "k values for the k-crank check, comma separated")
      ->delimiter(',');
  verify_cmd->add_option("--output", verify.output, "Report file (default stdout)");
  verify_cmd->add_flag("--omit-timing", verify.omit_timing, "Write runtime_ms as 0");

  IdentityOptions identity;
  auto* identity_cmd = app.add_subcommand("identity", "Check q-series identities from the catalog");
  identity_cmd->add_option("--id", identity.ids, "Identity ids or aliases, comma separated, or all")
      ->required()
      ->delimiter(',');
  identity_cmd->add_option("--order", identity.order, "Truncation order")
      ->check(CLI::NonNegativeNumber);
  identity_cmd->add_option("--output", identity.output, "Report file (default stdout)");
  identity_cmd->add_flag("--omit-timing", identity.omit_timing, "Write runtime_ms as 0");

  CrosscheckOptions cross;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare generating function and enumeration tables");
  cross_cmd->add_option("--stat", cross.stat, "Statistic")
      ->required()
      ->check(CLI::IsMember({"crank", "ocrank", "m2crank", "kcrank"}));
  cross_cmd->add_option("--k", cross.k, "Number of colors for kcrank")->check(CLI::Range(2, 1000));
  cross_cmd->add_option("--n-max", cross.n_max, "Largest n")->check(CLI::NonNegativeNumber);
  cross_cmd->add_option("--output", cross.output, "Report file (default stdout)");
  cross_cmd->add_flag("--omit-timing", cross.omit_timing, "Write runtime_ms as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? all_pass : usage_error;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, threads, out, err);
    if (*identity_cmd) return cmd_identity(identity, threads, out, err);
    if (*cross_cmd) return cmd_crosscheck(cross, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace crankstat::cli
