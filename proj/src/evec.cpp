#include "plabic/evec.hpp"

#include "plabic/error.hpp"

#include <algorithm>

namespace plabic::evec {

using flows::Limits;

BC canonical_bc(const Network& net) {
    BC bc;
    for (int j : sink_labels(net)) bc[j] = unit_vec(net.n, j - 1);
    return bc;
}

void check_bc(const Network& net, const BC& bc) {
    auto sinks = sink_labels(net);
    if (bc.size() != sinks.size()) throw input_error("boundary conditions must cover exactly the sinks");
    QMat rows;
    for (int j : sinks) {
        auto it = bc.find(j);
        if (it == bc.end()) throw input_error("no boundary vector for sink " + std::to_string(j));
        if (static_cast<int>(it->second.size()) != net.n) throw input_error("boundary vector length must be n");
        rows.push_back(it->second);
    }
    // Rank via elimination.
    std::size_t r = 0;
    for (int c = 0; c < net.n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Q f = rows[i][c] / rows[r][c];
            for (int k = c; k < net.n; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    if (r != rows.size()) throw input_error("boundary vectors are linearly dependent");
}

static int parity_sign(int x) { return (x % 2 == 0) ? 1 : -1; }

QVec sink_value(const Network& net, const std::vector<EdgeGeo>& geo, int e, const BC& bc) {
    int label = net.vertices[net.head(e)].label;
    auto it = bc.find(label);
    if (it == bc.end()) throw input_error("no boundary vector for sink " + std::to_string(label));
    Q s = parity_sign(geo[e].cross + geo[e].iw) * net.edges[e].weight;
    return s * it->second;
}

Q transfer(const Network& net, const std::vector<EdgeGeo>& geo, int e, int f) {
    int w = geom::local_wind(geo[e].last, geo[f].first, net.gauge);
    return Q(parity_sign(geo[e].cross + geo[e].iw + w)) * net.edges[e].weight;
}

QMat solve_linear(QMat M, QMat R, Q* det_out) {
    std::size_t m = M.size();
    Q det = 1;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) {
            if (det_out) *det_out = 0;
            throw internal_error("singular linear system");
        }
        if (p != c) {
            std::swap(M[p], M[c]);
            std::swap(R[p], R[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t i = c + 1; i < m; ++i) {
            if (M[i][c] == 0) continue;
            Q f = M[i][c] / M[c][c];
            for (std::size_t k = c; k < m; ++k) M[i][k] -= f * M[c][k];
            for (std::size_t k = 0; k < R[i].size(); ++k) R[i][k] -= f * R[c][k];
        }
    }
    for (std::size_t c = m; c-- > 0;) {
        for (std::size_t k = 0; k < R[c].size(); ++k) {
            Q s = R[c][k];
            for (std::size_t j = c + 1; j < m; ++j) s -= M[c][j] * R[j][k];
            R[c][k] = s / M[c][c];
        }
    }
    if (det_out) *det_out = det;
    return R;
}

Q determinant(QMat m) {
    std::size_t n = m.size();
    Q det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

System solve_system(const Network& net, const BC& bc) {
    check_bc(net, bc);
    auto geo = edge_geometry(net);
    std::size_t ne = net.edges.size();
    std::vector<int> col(ne, -1);
    std::vector<int> unknowns;
    for (std::size_t e = 0; e < ne; ++e) {
        if (!net.is_sink_edge(static_cast<int>(e))) {
            col[e] = static_cast<int>(unknowns.size());
            unknowns.push_back(static_cast<int>(e));
        }
    }
    std::size_t m = unknowns.size();
    QMat M(m, QVec(m, Q(0)));
    QMat R(m, zero_vec(net.n));
    std::vector<QVec> E(ne);
    for (std::size_t e = 0; e < ne; ++e)
        if (col[e] < 0) E[e] = sink_value(net, geo, static_cast<int>(e), bc);
    for (std::size_t r = 0; r < m; ++r) {
        int e = unknowns[r];
        M[r][r] = 1;
        for (int f : net.out_edges(net.head(e))) {
            Q c = transfer(net, geo, e, f);
            if (col[f] >= 0)
                M[r][col[f]] -= c;
            else
                R[r] = R[r] + c * E[f];
        }
    }
    System s;
    QMat X = solve_linear(M, R, &s.det);
    for (std::size_t r = 0; r < m; ++r) E[unknowns[r]] = X[r];
    s.E = std::move(E);
    return s;
}

System solve_system(const Network& net) { return solve_system(net, canonical_bc(net)); }

namespace {

QVec talaska_with(const Network& net, int e, const BC& bc, const Limits& lim,
                  const std::vector<flows::ConservativeFlow>& cons, const std::vector<EdgeGeo>& geo,
                  const Q& den) {
    QVec out = zero_vec(net.n);
    for (const auto& [j, B] : bc) {
        Q num = 0;
        for (const auto& p : flows::le_walks(net, e, j, lim)) {
            flows::EdgeSet pm(net.edges.size());
            for (int x : p) pm.set(x);
            auto st = flows::path_stats(net, geo, p);
            Q z = 0;
            for (const auto& c : cons)
                if (c.mask.disjoint(pm)) z += c.weight;
            num += Q(parity_sign(st.wind + st.intc)) * st.weight * z;
        }
        out = out + (num / den) * B;
    }
    return out;
}

}  // namespace

QVec talaska_vector(const Network& net, int e, const BC& bc, const Limits& lim) {
    check_bc(net, bc);
    auto cons = flows::enum_conservative(net, lim);
    return talaska_with(net, e, bc, lim, cons, edge_geometry(net), flows::conservative_total(cons));
}

std::vector<QVec> talaska_all(const Network& net, const BC& bc, const Limits& lim) {
    check_bc(net, bc);
    auto cons = flows::enum_conservative(net, lim);
    auto geo = edge_geometry(net);
    Q den = flows::conservative_total(cons);
    std::vector<QVec> out;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        out.push_back(talaska_with(net, static_cast<int>(e), bc, lim, cons, geo, den));
    return out;
}

std::vector<Truncated> truncated_all(const Network& net, int depth) {
    if (depth < 0) throw input_error("depth must be nonnegative");
    auto geo = edge_geometry(net);
    auto bc = canonical_bc(net);
    std::size_t ne = net.edges.size();
    std::vector<QVec> c(ne, zero_vec(net.n));
    for (std::size_t e = 0; e < ne; ++e)
        if (net.is_sink_edge(static_cast<int>(e))) c[e] = sink_value(net, geo, static_cast<int>(e), bc);
    auto apply = [&](const std::vector<QVec>& x, bool absolute) {
        std::vector<QVec> y(ne, zero_vec(net.n));
        for (std::size_t e = 0; e < ne; ++e) {
            if (net.is_sink_edge(static_cast<int>(e))) continue;
            for (int f : net.out_edges(net.head(static_cast<int>(e)))) {
                Q t = transfer(net, geo, static_cast<int>(e), f);
                if (absolute) t = abs(t);
                y[e] = y[e] + t * x[f];
            }
        }
        return y;
    };
    std::vector<QVec> sum(ne, zero_vec(net.n)), x = c;
    for (int L = 0; L < depth; ++L) {
        for (std::size_t e = 0; e < ne; ++e) sum[e] = sum[e] + x[e];
        x = apply(x, false);
    }
    std::vector<Truncated> out(ne);
    for (std::size_t e = 0; e < ne; ++e) out[e].value = sum[e];

    // Residual certificate: (I - |S|)^{-1} must exist and be entrywise nonnegative.
    QMat IN(ne, QVec(ne, Q(0)));
    for (std::size_t e = 0; e < ne; ++e) {
        IN[e][e] = 1;
        if (net.is_sink_edge(static_cast<int>(e))) continue;
        for (int f : net.out_edges(net.head(static_cast<int>(e))))
            IN[e][f] -= abs(transfer(net, geo, static_cast<int>(e), f));
    }
    QMat I(ne, QVec(ne, Q(0)));
    for (std::size_t e = 0; e < ne; ++e) I[e][e] = 1;
    bool ok = true;
    QMat inv;
    try {
        inv = solve_linear(IN, I);
    } catch (const Error&) {
        ok = false;
    }
    if (ok)
        for (auto& row : inv)
            for (auto& v : row)
                if (v < 0) ok = false;
    if (!ok) {
        for (auto& t : out) t.warning = "no convergence bound: spectral radius of |S| is at least 1";
        return out;
    }
    std::vector<QVec> absc(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        absc[e] = c[e];
        for (auto& v : absc[e]) v = abs(v);
    }
    std::vector<QVec> y(ne, zero_vec(net.n));
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t f = 0; f < ne; ++f)
            if (inv[e][f] != 0) y[e] = y[e] + inv[e][f] * absc[f];
    for (int L = 0; L < depth; ++L) y = apply(y, true);
    for (std::size_t e = 0; e < ne; ++e) {
        out[e].bounded = true;
        out[e].bound = y[e];
    }
    return out;
}

Truncated truncated_vector(const Network& net, int e, int depth) {
    auto all = truncated_all(net, depth);
    return all.at(e);
}

BoundaryMatrix boundary_matrix(const Network& net, const std::vector<QVec>& E) {
    BoundaryMatrix bm;
    bm.pivots = source_base(net);
    for (int i : bm.pivots) {
        int e = net.boundary_edge(i);
        bm.A.push_back(E[e] + unit_vec(net.n, i - 1));
    }
    return bm;
}

BoundaryMatrix boundary_matrix(const Network& net) { return boundary_matrix(net, solve_system(net).E); }

int sources_between(const std::vector<int>& pivots, int i, int j) {
    int lo = std::min(i, j), hi = std::max(i, j);
    int c = 0;
    for (int p : pivots)
        if (p > lo && p < hi) ++c;
    return c;
}

static void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

static std::vector<std::pair<std::vector<int>, Q>> all_minors(const BoundaryMatrix& bm, int n) {
    int k = static_cast<int>(bm.A.size());
    std::vector<std::vector<int>> sets;
    subsets(n, k, sets);
    std::vector<std::pair<std::vector<int>, Q>> out;
    for (auto& J : sets) {
        QMat m(k, QVec(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m[r][c] = bm.A[r][J[c] - 1];
        out.push_back({J, determinant(m)});
    }
    return out;
}

TnnResult tnn_check(const BoundaryMatrix& bm, int n) {
    TnnResult r;
    r.minors = all_minors(bm, n);
    for (auto& [J, d] : r.minors) {
        if (d != 0) r.matroid.push_back(J);
        if (d < 0) r.tnn = false;
    }
    return r;
}

bool same_point(const BoundaryMatrix& a, const BoundaryMatrix& b, int n) {
    if (a.A.size() != b.A.size()) return false;
    auto ma = all_minors(a, n), mb = all_minors(b, n);
    Q ratio = 0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if ((ma[i].second == 0) != (mb[i].second == 0)) return false;
        if (ma[i].second == 0) continue;
        Q r = mb[i].second / ma[i].second;
        if (ratio == 0) ratio = r;
        if (r != ratio) return false;
    }
    return ratio > 0;
}

std::vector<int> null_edges(const Network& net, const std::vector<QVec>& E) {
    std::vector<int> out;
    for (std::size_t e = 0; e < E.size(); ++e)
        if (is_zero(E[e])) out.push_back(static_cast<int>(e));
    std::vector<char> nul(E.size(), 0);
    for (int e : out) nul[e] = 1;
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        const Vertex& x = net.vertices[v];
        if (x.boundary) continue;
        std::vector<int> inc = net.in_edges(static_cast<int>(v));
        const auto& outs = net.out_edges(static_cast<int>(v));
        inc.insert(inc.end(), outs.begin(), outs.end());
        if (x.color == Color::Black && !outs.empty()) {
            bool any = false, all = true;
            for (int e : inc) {
                any = any || nul[e];
                all = all && nul[e];
            }
            if (any && !all)
                throw internal_error("null propagation fails at black vertex '" + x.id + "'");
        }
        if (x.color == Color::White && !outs.empty()) {
            bool all_out = true;
            for (int f : outs) all_out = all_out && nul[f];
            for (int e : net.in_edges(static_cast<int>(v)))
                if (all_out && !nul[e])
                    throw internal_error("null propagation fails at white vertex '" + x.id + "'");
        }
    }
    return out;
}

std::vector<int> null_edges(const Network& net) { return null_edges(net, solve_system(net).E); }

}  // namespace plabic::evec
