#pragma once

#include <string>

#include <json.hpp>

#include "hgkit/counting.hpp"
#include "hgkit/hypergraph.hpp"
#include "hgkit/sunflower.hpp"

namespace hgkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json to_json(const VertexSet& s);
Json to_json(const Hypergraph& h);
Json to_json(const Sunflower& s);
Json edges_json(std::span<const VertexSet> edges);

// Numbers that fit in 64 bits stay numbers, larger ones become decimal strings.
Json to_json(const BigInt& x);

Json make_report(const std::string& command, Json params);

// Flattened "key  value" listing of a report, nested keys joined with dots.
std::string render_table(const Json& report);

}  // namespace hgkit::cli
