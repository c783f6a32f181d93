#include <algorithm>

#include "crankstat/verify.hpp"
#include "json.hpp"

namespace crankstat {

namespace {

using nlohmann::ordered_json;

ordered_json cell_value_json(const CellValue& v) {
  ordered_json j;
  j["m"] = v.cell.m;
  j["n"] = v.cell.n;
  j["lhs"] = v.lhs.get_str();
  j["rhs"] = v.rhs.get_str();
  if (!v.cell.where.empty()) j["where"] = v.cell.where;
  return j;
}

ordered_json report_object(const CheckReport& r, bool omit_timing) {
  ordered_json j;
  j["check_id"] = r.check_id;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["verdict"] = r.pass ? "pass" : "fail";

  ordered_json exceptions = ordered_json::array();
  for (const auto& e : r.exceptions) exceptions.push_back(cell_value_json(e));
  j["exceptions"] = std::move(exceptions);

  ordered_json expected = ordered_json::array();
  for (const auto& c : r.expected) {
    ordered_json e{{"m", c.m}, {"n", c.n}};
    if (!c.where.empty()) e["where"] = c.where;
    expected.push_back(std::move(e));
  }
  j["expected_exceptions"] = std::move(expected);

  if (!r.informational.empty()) {
    ordered_json info = ordered_json::array();
    for (const auto& e : r.informational) info.push_back(cell_value_json(e));
    j["informational"] = std::move(info);
  }
  j["runtime_ms"] = omit_timing ? 0 : static_cast<long long>(r.runtime_ms + 0.5);
  return j;
}

}  // namespace

std::string report_json(const CheckReport& r, bool omit_timing) {
  return report_object(r, omit_timing).dump(2);
}

std::string batch_json(const std::vector<CheckReport>& reports, bool omit_timing) {
  ordered_json doc;
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
  doc["verdict"] = all_pass ? "pass" : "fail";
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) list.push_back(report_object(r, omit_timing));
  doc["reports"] = std::move(list);
  return doc.dump(2);
}

}  // namespace crankstat
