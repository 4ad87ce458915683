#pragma once

#include "plabic/network.hpp"

#include <random>

namespace plabic::gen {

using Rng = std::mt19937_64;

struct Options {
    int min_sides = 2, max_sides = 4;  // boundary vertices
    int max_top = 3;
    int max_interior = 3;
    int flips = 4;
    std::size_t max_edges = 20;
    bool small_weights = false;  // all weights in (0, 1/3]
};

Q random_weight(Rng& rng, bool small);
geom::Dir random_gauge(Rng& rng);
// Random valid network: dual of a random triangulation of a convex polygon whose bottom sides
// carry the boundary vertices, random colors, a random perfect orientation and a random gauge.
Network random_network(Rng& rng, const Options& opt = {});

// Random perfect orientation of the given undirected embedding; false if none exists.
bool orient_randomly(Network& net, Rng& rng);

bool has_cycle(const Network& net);

}  // namespace plabic::gen
