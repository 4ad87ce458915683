#pragma once

#include "plabic/error.hpp"
#include "plabic/xform.hpp"

#include <map>
#include <optional>

namespace plabic::xform::detail {

inline int par(int x) { return ((x % 2) + 2) % 2; }
inline Q psign(int x) { return par(x) ? Q(-1) : Q(1); }

struct Prediction {
    std::optional<Q> factor;
    QVec value;
};
using Predictions = std::map<std::string, Prediction>;

// Unchanged prediction for every edge of net not already present.
void keep_rest(const Network& net, const std::vector<QVec>& E, Predictions& pred);

// Validates the output, recomputes its vectors with canonical boundary vectors and compares.
Report finish(const std::string& op, const Network& before, const Network& after, const Predictions& pred);

void add_check(Report& r, const std::string& name, bool ok, const std::string& detail = "");
void check_same_point(Report& r);
void check_same_matrix(Report& r);

// cross + internal winding of an edge.
int edge_int(const std::vector<EdgeGeo>& geo, int e);

// Points of all vertices and polyline bends.
std::vector<geom::Point> all_points(const Network& net);
// No listed point other than the corners lies in the closed triangle.
bool triangle_empty(const Network& net, const geom::Point& a, const geom::Point& b, const geom::Point& c);

void require_internal(const Network& net, int v, const std::string& what);

}  // namespace plabic::xform::detail
