#pragma once

#include "plabic/network.hpp"

#include <cstdint>
#include <vector>

namespace plabic::flows {

using Walk = std::vector<int>;  // edge indices, head of each is the tail of the next

struct Limits {
    std::size_t max_flows = 1000000;
    std::size_t max_edges = 64;
};
// Defaults, with PLABIC_MAX_EDGES overriding the size cap.
Limits default_limits();
void check_size(const Network& net, const Limits& lim);

class EdgeSet {
public:
    explicit EdgeSet(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool disjoint(const EdgeSet& o) const;
    EdgeSet& operator|=(const EdgeSet& o);

private:
    std::vector<std::uint64_t> w_;
};

struct FlowStats {
    Q weight = 1;
    int wind = 0;
    int intc = 0;
};

// Chronological edge loop erasure: the first repeated edge closes the loop that is cut.
Walk loop_erase(const Walk& w);
bool is_walk(const Network& net, const Walk& w);
FlowStats path_stats(const Network& net, const std::vector<EdgeGeo>& geo, const Walk& w);
FlowStats path_stats(const Network& net, const Walk& w);
// Closed walk: also counts the winding from the last edge back to the first.
FlowStats cycle_stats(const Network& net, const std::vector<EdgeGeo>& geo, const Walk& c);

// Simple directed cycles avoiding boundary-incident edges, as edge lists.
std::vector<Walk> simple_cycles(const Network& net, const Limits& lim);

struct ConservativeFlow {
    std::vector<int> edges;  // sorted
    Q weight = 1;
    EdgeSet mask;
};
// Always contains the empty flow first.
std::vector<ConservativeFlow> enum_conservative(const Network& net, const Limits& lim);
Q conservative_total(const std::vector<ConservativeFlow>& cf);

// Edge loop-erased walks from edge e to the sink labelled j.
std::vector<Walk> le_walks(const Network& net, int e, int j, const Limits& lim);

struct EdgeFlow {
    Walk path;
    std::vector<int> cycle_edges;
    std::vector<int> edges;  // sorted union
    FlowStats stats;         // weight over all edges, wind/int from the path
};
std::vector<EdgeFlow> enum_edge_flows(const Network& net, int e, int j, const Limits& lim);

}  // namespace plabic::flows
