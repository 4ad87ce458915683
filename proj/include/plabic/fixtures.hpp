#pragma once

#include "plabic/network.hpp"

namespace plabic::fixtures {

// Gr(1,2) network with two cycles of weights p and q; source b2, sink b1.
// Edges: u2, u1 at the boundary; up (weight p), uq (weight q); u, v, w shared by the cycles; d1, t, y.
Network null_example(const Q& p, const Q& q);

// Same graph with weights chosen so that no edge vector vanishes while the point is unchanged.
// s is a free gauge parameter at the head of u.
Network null_free_example(const Q& p, const Q& q, const Q& s);

// The path u2, d1, w, u, up, y, u1 from b2 to b1.
std::vector<std::string> null_example_path();

// b1 -> X -> b2 through one bivalent white vertex.
Network single_path();

}  // namespace plabic::fixtures
