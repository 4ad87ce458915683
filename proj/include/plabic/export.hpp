#pragma once

#include "plabic/network.hpp"

#include <optional>
#include <string>

namespace plabic::exporter {

// Graphviz digraph carrying ids, colors, labels and weights; no geometry.
std::string to_dot(const Network& net);
// Reads back what to_dot writes: vertices and edges without positions or polylines.
Network topology_from_dot(const std::string& dot);

struct SvgOptions {
    bool rays = true;
    bool edge_ids = true;
    std::optional<std::vector<QVec>> vectors;  // per-edge labels, indexed like net.edges
};
std::string to_svg(const Network& net, const SvgOptions& opt = {});

}  // namespace plabic::exporter
