#pragma once

#include "plabic/flows.hpp"
#include "plabic/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace plabic::evec {

using BC = std::map<int, QVec>;  // sink label -> boundary vector

BC canonical_bc(const Network& net);
void check_bc(const Network& net, const BC& bc);

// Pinned value (-1)^(int+iw) w B_j at the edge entering sink j.
QVec sink_value(const Network& net, const std::vector<EdgeGeo>& geo, int e, const BC& bc);
// Signed transfer factor (-1)^(int(e)+iw(e)+wind(e,f)) w_e for f following e.
Q transfer(const Network& net, const std::vector<EdgeGeo>& geo, int e, int f);

struct System {
    std::vector<QVec> E;  // indexed by edge
    Q det;
};
System solve_system(const Network& net, const BC& bc);
System solve_system(const Network& net);

QVec talaska_vector(const Network& net, int e, const BC& bc, const flows::Limits& lim);
std::vector<QVec> talaska_all(const Network& net, const BC& bc, const flows::Limits& lim);

struct Truncated {
    QVec value;
    bool bounded = false;
    QVec bound;  // componentwise bound on |exact - value| when bounded
    std::string warning;
};
// Signed sum over walks of at most depth edges starting with e.
Truncated truncated_vector(const Network& net, int e, int depth);
std::vector<Truncated> truncated_all(const Network& net, int depth);

struct BoundaryMatrix {
    std::vector<int> pivots;  // source labels
    QMat A;                   // k x n
};
BoundaryMatrix boundary_matrix(const Network& net);
BoundaryMatrix boundary_matrix(const Network& net, const std::vector<QVec>& E);
// Number of sources strictly between labels i and j.
int sources_between(const std::vector<int>& pivots, int i, int j);

struct TnnResult {
    std::vector<std::vector<int>> matroid;  // label sets with nonzero minor
    std::vector<std::pair<std::vector<int>, Q>> minors;
    bool tnn = true;
};
TnnResult tnn_check(const BoundaryMatrix& bm, int n);
// Same point of the Grassmannian: maximal minors proportional with positive ratio.
bool same_point(const BoundaryMatrix& a, const BoundaryMatrix& b, int n);

std::vector<int> null_edges(const Network& net);
std::vector<int> null_edges(const Network& net, const std::vector<QVec>& E);

Q determinant(QMat m);
// Solve M X = R (R has any number of columns); throws if singular.
QMat solve_linear(QMat M, QMat R, Q* det_out = nullptr);

}  // namespace plabic::evec
