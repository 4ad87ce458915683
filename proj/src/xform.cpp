#include "plabic/xform.hpp"

#include "xform_util.hpp"

#include <algorithm>
#include <set>

namespace plabic::xform {

using geom::Dir;
using geom::Point;
using namespace detail;

namespace detail {

void keep_rest(const Network& net, const std::vector<QVec>& E, Predictions& pred) {
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (!pred.count(net.edges[e].id)) pred[net.edges[e].id] = {Q(1), E[e]};
}

Report finish(const std::string& op, const Network& before, const Network& after, const Predictions& pred) {
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error(op + ": transformed network is invalid: " + rep.violations.front());
    Report r;
    r.op = op;
    r.before = before;
    r.after = after;
    auto E = evec::solve_system(after).E;
    for (std::size_t e = 0; e < after.edges.size(); ++e) {
        const std::string& id = after.edges[e].id;
        auto it = pred.find(id);
        if (it == pred.end()) throw internal_error(op + ": no prediction for edge '" + id + "'");
        EdgeCheck c;
        c.edge = id;
        c.factor = it->second.factor;
        c.predicted = it->second.value;
        c.recomputed = E[e];
        c.ok = c.predicted == c.recomputed;
        r.edges.push_back(std::move(c));
    }
    return r;
}

void add_check(Report& r, const std::string& name, bool ok, const std::string& detail) {
    r.checks.push_back({name, ok, detail});
}

void check_same_point(Report& r) {
    auto a = evec::boundary_matrix(r.before);
    auto b = evec::boundary_matrix(r.after);
    add_check(r, "boundary point invariant", evec::same_point(a, b, r.before.n));
}

void check_same_matrix(Report& r) {
    auto a = evec::boundary_matrix(r.before);
    auto b = evec::boundary_matrix(r.after);
    add_check(r, "boundary matrix invariant", a.pivots == b.pivots && a.A == b.A);
}

int edge_int(const std::vector<EdgeGeo>& geo, int e) { return geo[e].cross + geo[e].iw; }

std::vector<Point> all_points(const Network& net) {
    std::vector<Point> pts;
    for (const Vertex& v : net.vertices) pts.push_back(v.pos);
    for (const Edge& e : net.edges)
        for (std::size_t i = 1; i + 1 < e.poly.size(); ++i) pts.push_back(e.poly[i]);
    return pts;
}

bool triangle_empty(const Network& net, const Point& a, const Point& b, const Point& c) {
    for (const Point& p : all_points(net)) {
        if (p == a || p == b || p == c) continue;
        if (geom::in_closed_triangle(p, a, b, c)) return false;
    }
    return true;
}

void require_internal(const Network& net, int v, const std::string& what) {
    if (net.vertices[v].boundary) throw input_error(what + ": '" + net.vertices[v].id + "' is a boundary vertex");
}

}  // namespace detail

bool Report::ok() const {
    for (const auto& e : edges)
        if (!e.ok) return false;
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

io::Json report_json(const Report& r) {
    io::Json j;
    j["op"] = r.op;
    j["ok"] = r.ok();
    io::Json edges = io::Json::array();
    for (const auto& e : r.edges) {
        io::Json x;
        x["edge"] = e.edge;
        x["factor"] = e.factor ? io::Json(to_string(*e.factor)) : io::Json(nullptr);
        x["predicted"] = io::vec_json(e.predicted);
        x["recomputed"] = io::vec_json(e.recomputed);
        x["ok"] = e.ok;
        edges.push_back(x);
    }
    j["edges"] = edges;
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks) {
        io::Json x;
        x["name"] = c.name;
        x["ok"] = c.ok;
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(x);
    }
    j["checks"] = checks;
    return j;
}

std::vector<std::string> edge_ids(const Network& net, const std::vector<int>& edges) {
    std::vector<std::string> out;
    for (int e : edges) out.push_back(net.edges[e].id);
    return out;
}

std::vector<int> edge_indices(const Network& net, const std::vector<std::string>& ids) {
    std::vector<int> out;
    for (const auto& id : ids) out.push_back(net.eid(id));
    return out;
}

// ---------------------------------------------------------------- gauges

Report rotate_gauge(const Network& net, const Dir& l2) {
    require_valid(net);
    if (geom::is_zero(l2) || l2.dy <= 0) throw input_error("rotate_gauge: direction must have dy > 0");
    Network after = net;
    after.gauge = l2;
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("rotate_gauge: " + rep.violations.front());
    const Dir& l1 = net.gauge;
    int s = geom::orient_sign(l1, l2);
    auto swept = [&](const Dir& d) {
        return s != 0 && geom::orient_sign(l1, d) == s && geom::orient_sign(d, l2) == s;
    };
    auto E = evec::solve_system(net).E;
    auto rays = gauge_rays(net);
    Predictions pred;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        int ei = static_cast<int>(e);
        int f = 0;
        if (!net.is_source_edge(ei)) {
            const Point& p = net.vertices[net.tail(ei)].pos;
            for (const auto& r : rays)
                if (swept(p - r.origin)) ++f;
            if (swept(first_dir(net.edges[e]))) ++f;
        }
        pred[net.edges[e].id] = {psign(f), psign(f) * E[e]};
    }
    Report r = finish("rotate_gauge", net, after, pred);
    check_same_matrix(r);
    return r;
}

Report weight_gauge(const Network& net, const std::map<std::string, Q>& t) {
    require_valid(net);
    Network after = apply_weight_gauge(net, t);
    auto E = evec::solve_system(net).E;
    Predictions pred;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        auto it = t.find(net.edges[e].tail);
        Q f = it == t.end() ? Q(1) : it->second;
        pred[net.edges[e].id] = {f, f * E[e]};
    }
    Report r = finish("weight_gauge", net, after, pred);
    check_same_matrix(r);
    return r;
}

Report move_vertex(const Network& net, const std::string& vid, const Point& to) {
    require_valid(net);
    int v = net.vid(vid);
    require_internal(net, v, "move_vertex");
    const Point from = net.vertices[v].pos;
    for (int e : net.out_edges(v))
        for (int g : net.in_edges(v))
            if (net.head(e) == net.tail(g))
                throw input_error("move_vertex: a two-edge cycle passes through '" + vid + "'");
    for (int g : net.in_edges(v)) {
        int t = net.tail(g);
        if (!net.is_boundary(t) && net.in_edges(t).empty())
            throw input_error("move_vertex: in-edge '" + net.edges[g].id + "' starts at a leaf");
    }

    Network after = net;
    after.vertices[v].pos = to;
    std::vector<int> inc;
    for (int e : net.out_edges(v)) {
        after.edges[e].poly.front() = to;
        inc.push_back(e);
    }
    for (int g : net.in_edges(v)) {
        after.edges[g].poly.back() = to;
        inc.push_back(g);
    }
    after.index();
    if (to != from) {
        for (int e : inc) {
            const auto& poly = net.edges[e].poly;
            Point p = (net.tail(e) == v) ? poly[1] : poly[poly.size() - 2];
            if (geom::cross(to - from, p - from) == 0) {
                if (geom::on_segment(p, from, to))
                    throw input_error("move_vertex: motion passes through a neighbour of '" + vid + "'");
                continue;
            }
            if (!triangle_empty(net, from, to, p))
                throw input_error("move_vertex: motion of '" + vid + "' is not an isotopy");
        }
    }
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("move_vertex: " + rep.violations.front());

    auto g0 = edge_geometry(net);
    auto g1 = edge_geometry(after);
    auto E = evec::solve_system(net).E;
    Predictions pred;
    for (int e : net.out_edges(v)) {
        int d = edge_int(g1, e) - edge_int(g0, e);
        int h = net.head(e);
        std::optional<int> jd;
        for (int f : net.out_edges(h)) {
            int x = junction_wind(after, e, f) - junction_wind(net, e, f);
            if (jd && par(*jd) != par(x))
                throw genericity_error("move_vertex: winding change at '" + net.vertices[h].id + "' is not uniform");
            jd = x;
        }
        d += jd.value_or(0);
        pred[net.edges[e].id] = {psign(d), psign(d) * E[e]};
    }
    for (int g : net.in_edges(v)) {
        int t = net.tail(g);
        std::optional<int> jd;
        for (int f : net.in_edges(t)) {
            int x = junction_wind(after, f, g) - junction_wind(net, f, g);
            if (jd && par(*jd) != par(x))
                throw genericity_error("move_vertex: winding change at '" + net.vertices[t].id + "' is not uniform");
            jd = x;
        }
        int d = jd.value_or(0);
        pred[net.edges[g].id] = {psign(d), psign(d) * E[g]};
    }
    keep_rest(net, E, pred);
    Report r = finish("move_vertex", net, after, pred);
    check_same_matrix(r);
    return r;
}

// ---------------------------------------------------------------- marking

Marking Marking::for_path(const Network& net, const std::vector<int>& path) {
    Marking m;
    m.cycle_ = false;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto& poly = net.edges[path[k]].poly;
        for (std::size_t i = (k == 0 ? 0 : 1); i < poly.size(); ++i) m.curve_.push_back(poly[i]);
    }
    m.bi_ = m.curve_.front();
    m.bj_ = m.curve_.back();
    m.l_ = net.gauge;
    return m;
}

Marking Marking::for_cycle(const Network& net, const std::vector<int>& cycle) {
    Marking m;
    m.cycle_ = true;
    for (int e : cycle) {
        const auto& poly = net.edges[e].poly;
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) m.curve_.push_back(poly[i]);
    }
    m.l_ = net.gauge;
    return m;
}

int Marking::mark(const Point& p) const {
    bool in = geom::inside_polygon(p, curve_);
    if (cycle_) return in ? 1 : 0;
    int s1 = sgn(geom::cross(l_, p - bi_));
    int s2 = sgn(geom::cross(l_, p - bj_));
    bool strip = s1 != 0 && s2 != 0 && s1 != s2;
    return (in != strip) ? 1 : 0;
}

Q Marking::safe_step(const Point& p, const Dir& d) const {
    std::optional<Q> best;
    auto take = [&](std::optional<Q> t) {
        if (t && (!best || *t < *best)) best = t;
    };
    std::size_t n = curve_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) take(geom::ray_param_hit(p, d, curve_[i], curve_[i + 1]));
    take(geom::ray_param_hit(p, d, curve_[n - 1], curve_[0]));
    if (!cycle_) {
        for (const Point& o : {bi_, bj_}) {
            // p + t d = o + s l with t > 0, s >= 0
            Q den = geom::cross(d, l_);
            if (den == 0) continue;
            Q t = geom::cross(o - p, l_) / den;
            Q s = geom::cross(o - p, d) / den;
            if (t > 0 && s >= 0) take(t);
        }
    }
    if (d.dy < 0 && p.y > 0) take(Q(-p.y / d.dy));
    Q step(1, 2);
    if (best && *best / 2 < step) step = *best / 2;
    return step;
}

int gamma_off(const Network& net, const Marking& m, int e) {
    const auto& poly = net.edges[e].poly;
    Dir d = poly[1] - poly[0];
    Q t = m.safe_step(poly[0], d);
    return m.mark(poly[0] + t * d);
}

int gamma1(const Network& net, const Marking& m, int e, int next) {
    const Point& h = net.edges[e].poly.back();
    Dir din = last_dir(net.edges[e]);
    Dir dout = next >= 0 ? first_dir(net.edges[next]) : Dir{1, 0};
    // At the final boundary vertex the gauge ray from it may split the sector; stay next to e.
    if (next < 0 && geom::in_open_sector(dout, -din, net.gauge)) dout = net.gauge;
    Dir a = geom::l1_normalize(dout);
    Dir b = geom::l1_normalize(-din);
    Q c = geom::cross(a, b);
    Dir bis;
    if (c > 0)
        bis = a + b;
    else if (c < 0)
        bis = -(a + b);
    else if (geom::antiparallel(a, b))
        bis = {-a.dy, a.dx};
    else
        throw genericity_error("route reverses direction at " + geom::to_string(h));
    Q t = m.safe_step(h, bis);
    return m.mark(h + t * bis);
}

int gamma_on(const Network& net, const Marking& m, int e, int next) {
    const Edge& x = net.edges[e];
    int g2 = geom::gamma2(last_dir(x), net.gauge);
    return gamma1(net, m, e, next) + g2 + ray_crossings(x, gauge_rays(net)) + internal_wind(x, net.gauge);
}

// ---------------------------------------------------------------- orientation changes

Network reverse_route(const Network& net, const std::vector<int>& route) {
    Network out = net;
    for (int e : route) {
        Edge& x = out.edges[e];
        std::swap(x.tail, x.head);
        std::reverse(x.poly.begin(), x.poly.end());
        x.weight = 1 / x.weight;
        x.weight.canonicalize();
    }
    out.index();
    return out;
}

namespace {

void check_route(const Network& net, const std::vector<int>& r, bool cycle, const std::string& op) {
    if (r.empty()) throw input_error(op + ": empty route");
    std::set<int> seen_e(r.begin(), r.end());
    if (seen_e.size() != r.size()) throw input_error(op + ": route repeats an edge");
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
        if (net.head(r[k]) != net.tail(r[k + 1]))
            throw input_error(op + ": edges '" + net.edges[r[k]].id + "' and '" + net.edges[r[k + 1]].id +
                              "' are not consecutive");
    std::set<int> verts;
    for (int e : r)
        if (!verts.insert(net.tail(e)).second) throw input_error(op + ": route is not simple");
    if (cycle) {
        if (net.head(r.back()) != net.tail(r.front())) throw input_error(op + ": route is not closed");
    } else {
        if (!net.is_source_edge(r.front())) throw input_error(op + ": path must start at a boundary source");
        if (!net.is_sink_edge(r.back())) throw input_error(op + ": path must end at a boundary sink");
        if (verts.count(net.head(r.back()))) throw input_error(op + ": route is not simple");
    }
}

bool boundary_edge_normal(const Network& net, const std::vector<EdgeGeo>& geo, int e) {
    return net.edges[e].poly.size() == 2 && net.edges[e].weight == 1 && geo[e].cross == 0;
}

// Rank test: v lies in the row span of A.
bool in_row_span(const QMat& A, const QVec& v) {
    auto rank = [](QMat m) {
        std::size_t r = 0;
        std::size_t cols = m.empty() ? 0 : m[0].size();
        for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
            std::size_t p = r;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[r]);
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Q f = m[i][c] / m[r][c];
                for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            }
            ++r;
        }
        return r;
    };
    QMat B = A;
    B.push_back(v);
    return rank(B) == rank(A);
}

void check_nulls(Report& r) {
    auto a = evec::solve_system(r.before).E;
    auto b = evec::solve_system(r.after).E;
    std::set<std::string> na, nb;
    for (std::size_t e = 0; e < a.size(); ++e)
        if (is_zero(a[e])) na.insert(r.before.edges[e].id);
    for (std::size_t e = 0; e < b.size(); ++e)
        if (is_zero(b[e])) nb.insert(r.after.edges[e].id);
    add_check(r, "null edges preserved", na == nb);
}

}  // namespace

bool path_needs_normalization(const Network& net, const std::vector<std::string>& path) {
    auto r = edge_indices(net, path);
    auto geo = edge_geometry(net);
    return !boundary_edge_normal(net, geo, r.front()) || !boundary_edge_normal(net, geo, r.back());
}

Report reverse_path(const Network& net, const std::vector<std::string>& path) {
    require_valid(net);
    auto r = edge_indices(net, path);
    check_route(net, r, false, "reverse_path");
    auto geo = edge_geometry(net);
    if (!boundary_edge_normal(net, geo, r.front()) || !boundary_edge_normal(net, geo, r.back()))
        throw input_error("reverse_path: boundary edges of the path must be straight, unit weight and uncrossed");
    Network after = reverse_route(net, r);
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("reverse_path: " + rep.violations.front());

    int i0 = net.vertices[net.tail(r.front())].label;
    int j0 = net.vertices[net.head(r.back())].label;
    auto bm = evec::boundary_matrix(net);
    auto E = evec::solve_system(net).E;
    std::size_t r0 = std::find(bm.pivots.begin(), bm.pivots.end(), i0) - bm.pivots.begin();
    const QVec& row = bm.A[r0];
    Q a = row[j0 - 1];
    if (a == 0) throw input_error("reverse_path: boundary measurement from source to sink vanishes");
    auto bc = evec::canonical_bc(net);
    bc[j0] = unit_vec(net.n, j0 - 1) - (1 / a) * row;
    auto Et = evec::solve_system(net, bc).E;

    Marking m = Marking::for_path(net, r);
    std::vector<int> pos(net.edges.size(), -1);
    for (std::size_t k = 0; k < r.size(); ++k) pos[r[k]] = static_cast<int>(k);
    Predictions pred;
    bool decomp = true;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        int ei = static_cast<int>(e);
        Q f;
        if (pos[e] >= 0) {
            int next = pos[e] + 1 < static_cast<int>(r.size()) ? r[pos[e] + 1] : -1;
            f = psign(gamma_on(net, m, ei, next)) / net.edges[e].weight;
        } else {
            f = psign(gamma_off(net, m, ei));
        }
        QVec v = f * Et[e];
        if (!in_row_span(bm.A, v - f * E[e])) decomp = false;
        pred[net.edges[e].id] = {f, v};
    }
    Report out = finish("reverse_path", net, after, pred);
    add_check(out, "new vector in span of old vector and boundary rows", decomp);
    check_same_point(out);
    check_nulls(out);
    return out;
}

Report reverse_cycle(const Network& net, const std::vector<std::string>& cycle) {
    require_valid(net);
    auto r = edge_indices(net, cycle);
    check_route(net, r, true, "reverse_cycle");
    Network after = reverse_route(net, r);
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("reverse_cycle: " + rep.violations.front());
    auto E = evec::solve_system(net).E;
    Marking m = Marking::for_cycle(net, r);
    std::vector<int> pos(net.edges.size(), -1);
    for (std::size_t k = 0; k < r.size(); ++k) pos[r[k]] = static_cast<int>(k);
    Predictions pred;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        int ei = static_cast<int>(e);
        Q f;
        if (pos[e] >= 0) {
            int next = r[(pos[e] + 1) % r.size()];
            f = psign(gamma_on(net, m, ei, next)) / net.edges[e].weight;
        } else {
            f = psign(gamma_off(net, m, ei));
        }
        pred[net.edges[e].id] = {f, f * E[e]};
    }
    Report out = finish("reverse_cycle", net, after, pred);
    check_same_point(out);
    check_nulls(out);
    return out;
}

std::vector<Report> reverse_path_normalized(const Network& net, std::vector<std::string> path) {
    std::vector<Report> out;
    Network cur = net;
    auto rays_hit = [&](const Network& n, const Point& a, const Point& b) {
        for (const auto& ray : gauge_rays(n))
            if (geom::ray_segment_hits(ray, a, b)) return true;
        return false;
    };
    auto on_ray = [&](const Network& n, const Point& p) {
        for (const auto& ray : gauge_rays(n)) {
            Dir d = p - ray.origin;
            if (!geom::is_zero(d) && geom::parallel(d, ray.dir)) return true;
        }
        return false;
    };
    auto geo = edge_geometry(cur);
    // Source side.
    {
        int e = cur.eid(path.front());
        if (!boundary_edge_normal(cur, geo, e)) {
            const auto& poly = cur.edges[e].poly;
            Dir d = poly[1] - poly[0];
            Q s(1, 2);
            while (rays_hit(cur, poly[0], poly[0] + s * d) || on_ray(cur, poly[0] + s * d)) s /= 2;
            Q w = cur.edges[e].weight;
            Report ins = insert_bivalent(cur, path.front(), poly[0] + s * d, Color::White);
            cur = ins.after;
            std::string second = cur.edges[cur.out_edges(cur.head(cur.eid(path.front())))[0]].id;
            path.insert(path.begin() + 1, second);
            out.push_back(std::move(ins));
            if (w != 1) {
                std::string x = cur.vertices[cur.head(cur.eid(path.front()))].id;
                Report g = weight_gauge(cur, {{x, w}});
                cur = g.after;
                out.push_back(std::move(g));
            }
        }
    }
    geo = edge_geometry(cur);
    // Sink side.
    {
        int e = cur.eid(path.back());
        if (!boundary_edge_normal(cur, geo, e)) {
            const auto& poly = cur.edges[e].poly;
            Point b = poly.back();
            Dir d = poly[poly.size() - 2] - b;
            Q s(1, 2);
            while (rays_hit(cur, b + s * d, b) || on_ray(cur, b + s * d)) s /= 2;
            Report ins = insert_bivalent(cur, path.back(), b + s * d, Color::White);
            cur = ins.after;
            std::string second = cur.edges[cur.out_edges(cur.head(cur.eid(path.back())))[0]].id;
            path.push_back(second);
            out.push_back(std::move(ins));
            int last = cur.eid(path.back());
            if (cur.edges[last].weight != 1) {
                std::string x = cur.vertices[cur.tail(last)].id;
                Report g = weight_gauge(cur, {{x, 1 / cur.edges[last].weight}});
                cur = g.after;
                out.push_back(std::move(g));
            }
        }
    }
    out.push_back(reverse_path(cur, path));
    return out;
}

std::optional<std::vector<int>> random_boundary_path(const Network& net, Rng& rng) {
    auto sources = source_base(net);
    std::shuffle(sources.begin(), sources.end(), rng);
    for (int i : sources) {
        int e0 = net.boundary_edge(i);
        std::vector<int> path{e0};
        std::vector<char> used(net.vertices.size(), 0);
        used[net.tail(e0)] = 1;
        long budget = 10000;
        auto rec = [&](auto&& self) -> bool {
            if (--budget < 0) return false;
            int h = net.head(path.back());
            if (net.is_boundary(h)) return true;
            if (used[h]) return false;
            used[h] = 1;
            auto outs = net.out_edges(h);
            std::shuffle(outs.begin(), outs.end(), rng);
            for (int f : outs) {
                path.push_back(f);
                if (self(self)) return true;
                path.pop_back();
            }
            used[h] = 0;
            return false;
        };
        if (rec(rec)) return path;
    }
    return std::nullopt;
}

std::vector<Report> reorient(const Network& net, const std::vector<std::string>& flip) {
    require_valid(net);
    std::vector<char> in_set(net.edges.size(), 0);
    for (int e : edge_indices(net, flip)) in_set[e] = 1;
    std::vector<int> din(net.vertices.size(), 0), dout(net.vertices.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (in_set[e]) ++dout[net.tail(static_cast<int>(e))], ++din[net.head(static_cast<int>(e))];
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (!net.is_boundary(static_cast<int>(v)) && din[v] != dout[v])
            throw input_error("reorient: reversing these edges breaks perfectness at '" + net.vertices[v].id + "'");
    auto next = [&](int v) {
        for (int f : net.out_edges(v))
            if (in_set[f]) return f;
        return -1;
    };
    std::vector<std::pair<std::vector<int>, bool>> routes;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        int ei = static_cast<int>(e);
        if (!in_set[e] || !net.is_source_edge(ei)) continue;
        std::vector<int> r{ei};
        in_set[e] = 0;
        while (!net.is_boundary(net.head(r.back()))) {
            int f = next(net.head(r.back()));
            in_set[f] = 0;
            r.push_back(f);
        }
        routes.push_back({r, false});
    }
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (!in_set[e]) continue;
        int start = net.tail(static_cast<int>(e));
        std::vector<int> r{static_cast<int>(e)};
        in_set[e] = 0;
        while (net.head(r.back()) != start) {
            int f = next(net.head(r.back()));
            in_set[f] = 0;
            r.push_back(f);
        }
        routes.push_back({r, true});
    }
    std::vector<Report> out;
    Network cur = net;
    for (const auto& [r, cycle] : routes) {
        auto ids = edge_ids(net, r);
        if (cycle) {
            out.push_back(reverse_cycle(cur, ids));
        } else {
            auto reps = reverse_path_normalized(cur, ids);
            for (auto& x : reps) out.push_back(std::move(x));
        }
        cur = out.back().after;
    }
    return out;
}

std::optional<std::vector<int>> boundary_path(const Network& net, int i0, int j0) {
    int v0 = net.boundary_vertex(i0);
    if (v0 < 0 || net.out_edges(v0).empty()) throw input_error("no boundary source with label " + std::to_string(i0));
    std::vector<int> path;
    std::vector<char> used(net.vertices.size(), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (net.is_boundary(v) && v != v0) return net.vertices[v].label == j0;
        if (used[v]) return false;
        used[v] = 1;
        for (int f : net.out_edges(v)) {
            path.push_back(f);
            if (self(self, net.head(f))) return true;
            path.pop_back();
        }
        used[v] = 0;
        return false;
    };
    if (rec(rec, v0)) return path;
    return std::nullopt;
}

}  // namespace plabic::xform
