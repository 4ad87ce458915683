#pragma once

#include "plabic/evec.hpp"
#include "plabic/io.hpp"
#include "plabic/network.hpp"

#include <optional>
#include <random>

namespace plabic::xform {

struct EdgeCheck {
    std::string edge;
    std::optional<Q> factor;  // empty when the prediction is not a multiple of one old vector
    QVec predicted;
    QVec recomputed;
    bool ok = false;
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string op;
    Network before, after;
    std::vector<EdgeCheck> edges;
    std::vector<Check> checks;
    bool ok() const;
};

io::Json report_json(const Report& r);

// Gauge direction change with signs (-1)^(cr(V_e) + par(e)).
Report rotate_gauge(const Network& net, const geom::Dir& l_new);
// Weight gauge t at internal vertices; predicts E_e -> t(tail e) E_e.
Report weight_gauge(const Network& net, const std::map<std::string, Q>& t);
// Moves one internal vertex; the motion must be an isotopy of the embedding.
Report move_vertex(const Network& net, const std::string& v, const geom::Point& to);

// Region marking for an orientation change; mark() is 1 on '-' regions.
class Marking {
public:
    static Marking for_path(const Network& net, const std::vector<int>& path);
    static Marking for_cycle(const Network& net, const std::vector<int>& cycle);
    int mark(const geom::Point& p) const;
    // Largest step in (0, 1/2] along d from p that meets no marking curve.
    Q safe_step(const geom::Point& p, const geom::Dir& d) const;
    bool is_cycle() const { return cycle_; }

private:
    bool cycle_ = false;
    std::vector<geom::Point> curve_;
    geom::Point bi_, bj_;
    geom::Dir l_;
};

// Off-route index: mark of the start of e shifted along e.
int gamma_off(const Network& net, const Marking& m, int e);
// Mark of the region to the left near the end of route edge e; next is the following route edge or -1.
int gamma1(const Network& net, const Marking& m, int e, int next);
// gamma1 + gamma2 + int + internal winding.
int gamma_on(const Network& net, const Marking& m, int e, int next);

struct Reversal {
    std::vector<int> route;  // edge indices in the original orientation
    bool cycle = false;
};
// Network with the route reversed and reciprocal weights on it.
Network reverse_route(const Network& net, const std::vector<int>& route);

Report reverse_path(const Network& net, const std::vector<std::string>& path);
Report reverse_cycle(const Network& net, const std::vector<std::string>& cycle);
// Makes the boundary edges of the path straight, unit weight and uncrossed (bivalent insertions
// plus a weight gauge), then reverses. The last report is the reversal; the path is updated in place.
std::vector<Report> reverse_path_normalized(const Network& net, std::vector<std::string> path);
// Reverses the given edges by splitting them into boundary paths and cycles, reversed one at a time.
std::vector<Report> reorient(const Network& net, const std::vector<std::string>& flip);
bool path_needs_normalization(const Network& net, const std::vector<std::string>& path);

// Square move on the face Y -h1-> X -h3-> W1 -h4-> B1 <-h2- Y given h1.
Report square_move(const Network& net, const std::string& h1);
// Flip of the unicolored edge e0.
Report flip_move(const Network& net, const std::string& e0);
// Splits e at p: the first part runs from the tail to p, the second from p along the rest of e.
Report insert_bivalent(const Network& net, const std::string& e, const geom::Point& p, Color c);
Report remove_bivalent(const Network& net, const std::string& v);
// Parallel pair e2, e3 from a white U (in e1) to a black V (out e4).
Report reduce_parallel(const Network& net, const std::string& e2, const std::string& e3);
Report reduce_dipole(const Network& net, const std::string& e);
Report reduce_leaf(const Network& net, const std::string& leaf);

struct IdentityTally {
    std::map<std::string, long> checked, violated;
    std::vector<std::string> examples;  // first few violations
    long total_violations() const;
};
using Rng = std::mt19937_64;
// Direction-only identities on random generic triples.
void check_direction_identities(Rng& rng, long trials, IdentityTally& tally);
// Marking identities at every vertex for the given orientation change.
void check_marking_identities(const Network& net, const Reversal& rev, IdentityTally& tally);

// Marking identities along random path and cycle reversals of net.
IdentityTally check_vertex_identities(const Network& net, long trials, Rng& rng);

// First simple directed path from source label i0 to sink label j0 in edge order, if any.
std::optional<std::vector<int>> boundary_path(const Network& net, int i0, int j0);
// Simple directed path from a random boundary source to a boundary sink, if any.
std::optional<std::vector<int>> random_boundary_path(const Network& net, Rng& rng);

std::vector<std::string> edge_ids(const Network& net, const std::vector<int>& edges);
std::vector<int> edge_indices(const Network& net, const std::vector<std::string>& ids);

}  // namespace plabic::xform
