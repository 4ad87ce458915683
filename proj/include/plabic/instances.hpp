#pragma once

#include "plabic/generate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plabic::gen {

// A network containing a local pattern, plus the ids that name the pattern.
struct Instance {
    Network net;
    std::vector<std::string> args;
};

// Replaces an internal black(2 in) -> white(2 out) edge by a thin square; args = {h1}.
std::optional<Instance> square_instance(const Network& net, Rng& rng);
// Shortens and straightens an edge between two trivalent vertices of one color; args = {e0}.
std::optional<Instance> flip_instance(const Network& net, Rng& rng);
// Splits an edge into e1, a parallel pair e2/e3 and e4 with the same total weight; args = {e2, e3}.
std::optional<Instance> lens_instance(const Network& net, Rng& rng);
// Detaches one edge of a trivalent vertex and hangs a leaf in its place; args = {leaf}.
std::optional<Instance> leaf_instance(const Network& net, Rng& rng);
// Adds a two-vertex component inside a face; args = {edge}.
std::optional<Instance> dipole_instance(const Network& net, Rng& rng);

}  // namespace plabic::gen
