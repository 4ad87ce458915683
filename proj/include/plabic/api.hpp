#pragma once

#include "plabic/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

// JSON-in, JSON-out entry points shared by the command line and the Python module.
namespace plabic::api {

using io::Json;

Json validate_report(const Network& net);
// method: "solve" | "talaska" | "truncate"; depth is required for truncate.
Json vectors(const Network& net, const std::string& method, std::optional<int> depth = std::nullopt,
             const std::optional<Json>& bc = std::nullopt, std::optional<std::size_t> max_flows = std::nullopt);
// Boundary matrix, pivots, minors, matroid, total nonnegativity and null edges.
Json measure(const Network& net);
Json faces_json(const Network& net);
Json conservative_flows(const Network& net, std::optional<std::size_t> max_flows = std::nullopt);
Json edge_flows(const Network& net, const std::string& edge, int sink,
                std::optional<std::size_t> max_flows = std::nullopt);

// spec: {"op": name, ...arguments}. Returns {"ok", "steps": [reports], "network": result}.
Json transform(const Network& net, const Json& spec);

Json check(const std::string& suite, long trials, std::uint64_t seed, const std::optional<Network>& net);

// format: "dot" | "svg"
std::string export_network(const Network& net, const std::string& format, bool with_vectors);

// name: "null" | "null_free" | "single_path"; params p, q, s as rationals.
Network fixture(const std::string& name, const Json& params);
Network random_network(std::uint64_t seed, const Json& options);

}  // namespace plabic::api
