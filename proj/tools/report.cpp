#include "report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace hgkit::cli {

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json edges_json(std::span<const VertexSet> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(to_json(e));
  return out;
}

Json to_json(const Hypergraph& h) {
  return Json{{"n", h.n()}, {"r", h.r()}, {"edges", edges_json(h.edges())}};
}

Json to_json(const Sunflower& s) {
  return Json{{"core", to_json(s.core)},
              {"petals", edges_json(s.petals)},
              {"edges", edges_json(s.edges)},
              {"verified", satisfies_invariants(s)}};
}

Json to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max())
    return Json(static_cast<std::uint64_t>(x));
  return Json(to_decimal(x));
}

Json make_report(const std::string& command, Json params) {
  Json report;
  report["command"] = command;
  report["params"] = std::move(params);
  report["value"] = nullptr;
  report["elapsed"] = 0.0;
  report["version"] = kVersion;
  return report;
}

namespace {

void flatten(const Json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    return;
  }
  rows.emplace_back(prefix, node.is_string() ? node.get<std::string>() : node.dump());
}

}  // namespace

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows)
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  return out.str();
}

}  // namespace hgkit::cli
