#include "plabic/xform.hpp"

#include "xform_util.hpp"

#include <algorithm>
#include <set>

namespace plabic::xform {

using geom::Dir;
using geom::Point;
using namespace detail;

namespace {

// Direction in which e leaves v.
Dir leaving(const Network& net, int e, int v) {
    return net.tail(e) == v ? first_dir(net.edges[e]) : -last_dir(net.edges[e]);
}

std::vector<int> incident(const Network& net, int v) {
    std::vector<int> out = net.in_edges(v);
    for (int e : net.out_edges(v)) out.push_back(e);
    return out;
}

void erase_edges(Network& net, std::set<std::string> ids) {
    net.edges.erase(std::remove_if(net.edges.begin(), net.edges.end(),
                                   [&](const Edge& e) { return ids.count(e.id) > 0; }),
                    net.edges.end());
}

void erase_vertices(Network& net, std::set<std::string> ids) {
    net.vertices.erase(std::remove_if(net.vertices.begin(), net.vertices.end(),
                                      [&](const Vertex& v) { return ids.count(v.id) > 0; }),
                       net.vertices.end());
}

Edge& edge_by_id(Network& net, const std::string& id) { return net.edges[net.eid(id)]; }

// Predicted values satisfy the linear relations of the new network at the listed edges.
void check_local_relations(Report& r, const std::vector<std::string>& ids) {
    const Network& n = r.after;
    auto geo = edge_geometry(n);
    std::map<std::string, QVec> pv;
    for (const auto& c : r.edges) pv[c.edge] = c.predicted;
    auto bc = evec::canonical_bc(n);
    bool ok = true;
    std::string bad;
    for (const auto& id : ids) {
        int e = n.eid(id);
        QVec rhs;
        if (n.is_sink_edge(e)) {
            rhs = evec::sink_value(n, geo, e, bc);
        } else {
            rhs = zero_vec(n.n);
            for (int f : n.out_edges(n.head(e))) rhs = rhs + evec::transfer(n, geo, e, f) * pv[n.edges[f].id];
        }
        if (rhs != pv[id]) {
            ok = false;
            bad = id;
        }
    }
    add_check(r, "local relations", ok, ok ? "" : "fails at '" + bad + "'");
}

// Junction winding of the in-edges of t with g is uniformly shifted between the networks.
int tail_shift(const Network& a, const Network& b, int g, const std::string& op) {
    int t = a.tail(g);
    std::optional<int> d;
    for (int f : a.in_edges(t)) {
        int x = junction_wind(b, f, g) - junction_wind(a, f, g);
        if (d && par(*d) != par(x)) throw genericity_error(op + ": winding change at '" + a.vertices[t].id + "' is not uniform");
        d = x;
    }
    return d.value_or(0);
}

}  // namespace

// ---------------------------------------------------------------- bivalent vertices

Report insert_bivalent(const Network& net, const std::string& eid, const Point& p, Color c) {
    require_valid(net);
    if (c == Color::None) throw input_error("insert_bivalent: color must be white or black");
    int e = net.eid(eid);
    const Edge& old = net.edges[e];
    std::vector<Point> first, second;
    for (std::size_t i = 0; i + 1 < old.poly.size() && first.empty(); ++i) {
        if (p != old.poly[i] && p != old.poly[i + 1] && geom::on_segment(p, old.poly[i], old.poly[i + 1])) {
            first.assign(old.poly.begin(), old.poly.begin() + i + 1);
            first.push_back(p);
            second.push_back(p);
            second.insert(second.end(), old.poly.begin() + i + 1, old.poly.end());
        }
    }
    if (first.empty()) {
        for (const Point& q : all_points(net))
            if (q == p) throw input_error("insert_bivalent: point is occupied");
        if (geom::cross(p - old.poly[0], old.poly[1] - old.poly[0]) == 0)
            throw input_error("insert_bivalent: point lies on the line of the first segment but not on it");
        if (!triangle_empty(net, old.poly[0], p, old.poly[1]))
            throw input_error("insert_bivalent: detour triangle is not empty");
        first = {old.poly[0], p};
        second.push_back(p);
        second.insert(second.end(), old.poly.begin() + 1, old.poly.end());
    }
    Network after = net;
    std::string x = net.fresh_vertex_id("X");
    std::string f2 = net.fresh_edge_id(eid + "b");
    after.vertices.push_back({x, false, 0, c, p});
    Edge& a = after.edges[e];
    a.head = x;
    a.poly = first;
    after.edges.push_back({f2, x, old.head, Q(1), second});
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("insert_bivalent: " + rep.violations.front());

    auto E = evec::solve_system(net).E;
    Predictions pred;
    keep_rest(net, E, pred);
    int d = tail_shift(net, after, e, "insert_bivalent");
    QVec v1 = psign(d) * E[e];
    pred[eid] = {psign(d), v1};
    auto geo = edge_geometry(after);
    int e1 = after.eid(eid), e2 = after.eid(f2);
    QVec v2;
    if (after.is_sink_edge(e2)) {
        v2 = evec::sink_value(after, geo, e2, evec::canonical_bc(after));
    } else {
        Q t = evec::transfer(after, geo, e1, e2);
        v2 = (1 / t) * v1;
    }
    pred[f2] = {std::nullopt, v2};
    Report r = finish("insert_bivalent", net, after, pred);
    check_local_relations(r, {eid});
    check_same_point(r);
    return r;
}

Report remove_bivalent(const Network& net, const std::string& vid) {
    require_valid(net);
    int v = net.vid(vid);
    require_internal(net, v, "remove_bivalent");
    if (net.in_edges(v).size() != 1 || net.out_edges(v).size() != 1)
        throw input_error("remove_bivalent: '" + vid + "' is not bivalent with one in-edge and one out-edge");
    int g = net.in_edges(v)[0], h = net.out_edges(v)[0];
    if (net.tail(g) == net.head(h)) throw input_error("remove_bivalent: merged edge would be a loop");
    const Edge& eg = net.edges[g];
    const Edge& eh = net.edges[h];
    std::vector<Point> poly = eg.poly;
    poly.insert(poly.end(), eh.poly.begin() + 1, eh.poly.end());
    std::size_t k = eg.poly.size() - 1;
    Dir a = poly[k] - poly[k - 1], b = poly[k + 1] - poly[k];
    if (geom::antiparallel(a, b)) throw genericity_error("remove_bivalent: merged edge folds back at '" + vid + "'");
    if (geom::parallel(a, b)) poly.erase(poly.begin() + k);
    Network after = net;
    Edge& m = after.edges[g];
    m.head = eh.head;
    m.poly = poly;
    m.weight = eg.weight * eh.weight;
    erase_edges(after, {eh.id});
    erase_vertices(after, {vid});
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("remove_bivalent: " + rep.violations.front());
    auto E = evec::solve_system(net).E;
    Predictions pred;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (static_cast<int>(e) != h) pred[net.edges[e].id] = {Q(1), E[e]};
    int d = tail_shift(net, after, g, "remove_bivalent");
    pred[eg.id] = {psign(d), psign(d) * E[g]};
    Report r = finish("remove_bivalent", net, after, pred);
    check_same_point(r);
    return r;
}

// ---------------------------------------------------------------- reductions

Report reduce_parallel(const Network& net, const std::string& s2, const std::string& s3) {
    require_valid(net);
    int e2 = net.eid(s2), e3 = net.eid(s3);
    int u = net.tail(e2), v = net.head(e2);
    if (e2 == e3 || net.tail(e3) != u || net.head(e3) != v)
        throw input_error("reduce_parallel: edges are not parallel");
    require_internal(net, u, "reduce_parallel");
    require_internal(net, v, "reduce_parallel");
    if (net.vertices[u].color != Color::White || net.vertices[v].color != Color::Black || net.degree(u) != 3 ||
        net.degree(v) != 3)
        throw input_error("reduce_parallel: expects a trivalent white tail and a trivalent black head");
    int e1 = net.in_edges(u)[0], e4 = net.out_edges(v)[0];
    if (e1 == e4) throw input_error("reduce_parallel: the pair closes a loop");
    auto geo = edge_geometry(net);
    int p2 = edge_int(geo, e2) + junction_wind(net, e1, e2) + junction_wind(net, e2, e4);
    int p3 = edge_int(geo, e3) + junction_wind(net, e1, e3) + junction_wind(net, e3, e4);
    if (par(p2) != par(p3)) throw input_error("reduce_parallel: the two routes have different sign parity");
    const Edge &a = net.edges[e1], &b = net.edges[e2], &d = net.edges[e4];
    std::vector<Point> poly = a.poly;
    poly.insert(poly.end(), b.poly.begin() + 1, b.poly.end());
    poly.insert(poly.end(), d.poly.begin() + 1, d.poly.end());
    std::vector<Point> clean{poly[0]};
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        Dir x = poly[i] - clean.back(), y = poly[i + 1] - poly[i];
        if (geom::antiparallel(x, y)) throw genericity_error("reduce_parallel: merged edge folds back");
        if (!geom::parallel(x, y)) clean.push_back(poly[i]);
    }
    clean.push_back(poly.back());
    Network after = net;
    Edge& m = after.edges[e1];
    m.head = d.head;
    m.poly = clean;
    m.weight = a.weight * (b.weight + net.edges[e3].weight) * d.weight;
    erase_edges(after, {b.id, net.edges[e3].id, d.id});
    erase_vertices(after, {net.vertices[u].id, net.vertices[v].id});
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("reduce_parallel: " + rep.violations.front());
    auto E = evec::solve_system(net).E;
    Predictions pred;
    std::set<int> gone{e2, e3, e4};
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (!gone.count(static_cast<int>(e))) pred[net.edges[e].id] = {Q(1), E[e]};
    int sh = tail_shift(net, after, e1, "reduce_parallel");
    pred[a.id] = {psign(sh), psign(sh) * E[e1]};
    Report r = finish("reduce_parallel", net, after, pred);
    check_same_point(r);
    return r;
}

Report reduce_dipole(const Network& net, const std::string& sid) {
    require_valid(net);
    int e = net.eid(sid);
    int a = net.tail(e), b = net.head(e);
    if (net.is_boundary(a) || net.is_boundary(b) || net.degree(a) != 1 || net.degree(b) != 1)
        throw input_error("reduce_dipole: both ends of '" + sid + "' must be internal leaves");
    auto E = evec::solve_system(net).E;
    Network after = net;
    erase_edges(after, {sid});
    erase_vertices(after, {net.vertices[a].id, net.vertices[b].id});
    after.index();
    Predictions pred;
    for (std::size_t f = 0; f < net.edges.size(); ++f)
        if (static_cast<int>(f) != e) pred[net.edges[f].id] = {Q(1), E[f]};
    Report r = finish("reduce_dipole", net, after, pred);
    add_check(r, "removed edge vector vanishes", is_zero(E[e]));
    check_same_point(r);
    return r;
}

Report reduce_leaf(const Network& net, const std::string& leaf) {
    require_valid(net);
    int u = net.vid(leaf);
    require_internal(net, u, "reduce_leaf");
    if (net.degree(u) != 1) throw input_error("reduce_leaf: '" + leaf + "' is not a leaf");
    bool black = net.vertices[u].color == Color::Black;
    int e1 = black ? net.out_edges(u)[0] : net.in_edges(u)[0];
    int v1 = black ? net.head(e1) : net.tail(e1);
    if (net.is_boundary(v1) || net.degree(v1) != 3 || net.vertices[v1].color == net.vertices[u].color)
        throw input_error("reduce_leaf: neighbour must be an internal trivalent vertex of the other color");
    std::vector<int> others;
    for (int f : incident(net, v1))
        if (f != e1) others.push_back(f);
    auto geo = edge_geometry(net);
    if (geo[e1].cross != 0) throw input_error("reduce_leaf: leaf edge crosses a gauge ray");
    auto rays = gauge_rays(net);
    auto pts = all_points(net);

    Network after = net;
    const Point c = net.vertices[v1].pos;
    Q w1 = net.edges[e1].weight;
    std::vector<std::string> new_leaves;
    for (int f : others) {
        const Edge& ef = net.edges[f];
        Point far = black ? ef.poly[1] : ef.poly[ef.poly.size() - 2];
        Q s(1, 2);
        auto bad = [&](const Point& q) {
            for (const auto& r : rays)
                if (geom::ray_segment_hits(r, c, q)) return true;
            for (const auto& r : rays) {
                Dir d = q - r.origin;
                if (geom::parallel(d, r.dir)) return true;
            }
            return false;
        };
        Point q = c + s * (far - c);
        for (int k = 0; k < 40 && bad(q); ++k) {
            s /= 2;
            q = c + s * (far - c);
        }
        if (bad(q)) throw genericity_error("reduce_leaf: no uncrossed split point on '" + ef.id + "'");
        std::string nid = after.fresh_vertex_id(leaf + "_" + ef.id);
        after.vertices.push_back({nid, false, 0, net.vertices[u].color, q});
        after.index();
        Edge& ne = edge_by_id(after, ef.id);
        if (black) {
            ne.tail = nid;
            ne.poly.front() = q;
        } else {
            ne.head = nid;
            ne.poly.back() = q;
        }
        ne.weight = w1 * ef.weight;
        new_leaves.push_back(nid);
    }
    erase_edges(after, {net.edges[e1].id});
    erase_vertices(after, {leaf, net.vertices[v1].id});
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error("reduce_leaf: " + rep.violations.front());

    auto E = evec::solve_system(net).E;
    Predictions pred;
    for (std::size_t f = 0; f < net.edges.size(); ++f) {
        int fi = static_cast<int>(f);
        if (fi == e1) continue;
        bool moved = std::find(others.begin(), others.end(), fi) != others.end();
        if (moved && black)
            pred[net.edges[f].id] = {w1, w1 * E[f]};
        else if (moved)
            pred[net.edges[f].id] = {Q(0), zero_vec(net.n)};
        else
            pred[net.edges[f].id] = {Q(1), E[f]};
    }
    Report r = finish("reduce_leaf", net, after, pred);
    if (black) {
        QVec rhs = zero_vec(net.n);
        for (int f : others) rhs = rhs + evec::transfer(net, geo, e1, f) * E[f];
        add_check(r, "leaf edge relation", rhs == E[e1]);
    } else {
        add_check(r, "leaf edge vector vanishes", is_zero(E[e1]));
    }
    // Face law: the two faces separated by the first moved edge merge.
    {
        auto fo = faces(net);
        auto fn = faces(after);
        int f = others[0];
        std::vector<int> touch;
        for (std::size_t i = 0; i < fo.size(); ++i)
            for (const auto& s : fo[i].sides)
                if (s.edge == f) touch.push_back(static_cast<int>(i));
        std::sort(touch.begin(), touch.end());
        touch.erase(std::unique(touch.begin(), touch.end()), touch.end());
        if (touch.size() == 2) {
            int nf = after.eid(net.edges[f].id);
            std::optional<Q> merged;
            for (const auto& face : fn)
                for (const auto& s : face.sides)
                    if (s.edge == nf) merged = face_weight(after, face);
            Q prod = face_weight(net, fo[touch[0]]) * face_weight(net, fo[touch[1]]);
            add_check(r, "face weight law", merged && *merged == prod);
        }
    }
    check_same_point(r);
    return r;
}

// ---------------------------------------------------------------- square move

Report square_move(const Network& net, const std::string& sh1) {
    require_valid(net);
    const std::string op = "square_move";
    int h1 = net.eid(sh1);
    int Y = net.tail(h1), X = net.head(h1);
    auto internal3 = [&](int v, Color c) {
        return !net.is_boundary(v) && net.degree(v) == 3 && net.vertices[v].color == c;
    };
    if (!internal3(Y, Color::White) || !internal3(X, Color::Black))
        throw input_error(op + ": '" + sh1 + "' must run from a trivalent white to a trivalent black vertex");
    int e1 = net.in_edges(Y)[0];
    int h2 = net.out_edges(Y)[0] == h1 ? net.out_edges(Y)[1] : net.out_edges(Y)[0];
    int e2 = net.in_edges(X)[0] == h1 ? net.in_edges(X)[1] : net.in_edges(X)[0];
    int h3 = net.out_edges(X)[0];
    int W1 = net.head(h3), B1 = net.head(h2);
    if (!internal3(W1, Color::White) || !internal3(B1, Color::Black))
        throw input_error(op + ": pattern does not close into a square");
    int h4 = -1, e4 = -1;
    for (int f : net.out_edges(W1)) {
        if (net.head(f) == B1 && h4 < 0)
            h4 = f;
        else
            e4 = f;
    }
    if (h4 < 0 || e4 < 0) throw input_error(op + ": pattern does not close into a square");
    int e3 = net.out_edges(B1)[0];
    std::set<int> vs{Y, X, W1, B1};
    if (vs.size() != 4) throw input_error(op + ": square vertices are not distinct");
    std::set<int> hs{h1, h2, h3, h4};
    for (int e : {e1, e2, e3, e4})
        if (hs.count(e)) throw input_error(op + ": square has a chord");
    bool is_face = false;
    for (const auto& f : faces(net)) {
        std::set<int> es;
        for (const auto& s : f.sides) es.insert(s.edge);
        if (es == hs && f.sides.size() == 4) is_face = true;
    }
    if (!is_face) throw input_error(op + ": the square does not bound a face");
    const Edge &E1 = net.edges[h1], &E2 = net.edges[h2], &E3 = net.edges[h3], &E4 = net.edges[h4];
    if (geom::cyclic_order(first_dir(E4), first_dir(net.edges[e4]), -last_dir(E3)) != 0 ||
        geom::cyclic_order(-last_dir(E2), first_dir(net.edges[e3]), -last_dir(E4)) != 0)
        throw input_error(op + ": only the counterclockwise layout of the square is supported");

    Q a1 = E1.weight, a2 = E2.weight, a3 = E3.weight, a4 = E4.weight;
    Q n2 = a2 + a1 * a3 * a4;
    Q n1 = a3 * a4 / n2, n3 = a2 * a3 / n2, n4 = a1 * a3 / n2;
    Network after = net;
    auto flip_color = [&](int v) {
        Color& c = after.vertices[v].color;
        c = c == Color::White ? Color::Black : Color::White;
    };
    for (int v : vs) flip_color(v);
    for (int h : {h1, h4}) {
        Edge& x = after.edges[h];
        std::swap(x.tail, x.head);
        std::reverse(x.poly.begin(), x.poly.end());
    }
    after.edges[h1].weight = n1;
    after.edges[h2].weight = n2;
    after.edges[h3].weight = n3;
    after.edges[h4].weight = n4;
    for (int h : {h1, h2, h3, h4}) after.edges[h].weight.canonicalize();
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error(op + ": " + rep.violations.front());

    auto geo = edge_geometry(net);
    const Dir& l = net.gauge;
    int I1 = edge_int(geo, h1), I2 = edge_int(geo, h2), I3 = edge_int(geo, h3), I4 = edge_int(geo, h4);
    int g2 = geom::gamma2(first_dir(E4), l);
    int w34 = junction_wind(net, h3, h4);
    int w2m4 = geom::local_wind(last_dir(E2), -last_dir(E4), l);
    int wm12 = geom::local_wind(-first_dir(E1), first_dir(E2), l);
    auto E = evec::solve_system(net).E;
    const QVec &F3 = E[h3], &F4 = E[h4];
    QVec G4 = (n4 / a3 * psign(I3 + I4 + g2 + w34 + 1)) * F3 + (n4 * psign(I4 + g2)) * F4;
    QVec G2 = (a1 * psign(I1 + g2 + w2m4 + w34 + 1)) * F3 + (a2 / a4 * psign(1 + I2 + I4 + g2 + w2m4)) * F4;
    QVec G1 = (n1 * psign(I1 + wm12)) * G2;
    QVec G3 = (psign(I3 + I4 + g2 + w34 + 1) * (a2 / a1)) * G4;
    Predictions pred;
    pred[E1.id] = {std::nullopt, G1};
    pred[E2.id] = {std::nullopt, G2};
    pred[E3.id] = {std::nullopt, G3};
    pred[E4.id] = {std::nullopt, G4};
    keep_rest(net, E, pred);
    Report r = finish(op, net, after, pred);
    check_local_relations(r, {net.edges[e1].id, net.edges[e2].id, E1.id, E2.id, E3.id, E4.id});
    {
        std::optional<Q> f0, f1;
        for (const auto& f : faces(net)) {
            std::set<int> es;
            for (const auto& s : f.sides) es.insert(s.edge);
            if (es == hs) f0 = face_weight(net, f);
        }
        for (const auto& f : faces(after)) {
            std::set<int> es;
            for (const auto& s : f.sides) es.insert(s.edge);
            if (es == hs) f1 = face_weight(after, f);
        }
        add_check(r, "square face weight inverts", f0 && f1 && *f0 * *f1 == 1);
    }
    check_same_point(r);
    return r;
}

// ---------------------------------------------------------------- flip move

Report flip_move(const Network& net, const std::string& s0) {
    require_valid(net);
    const std::string op = "flip_move";
    int e0 = net.eid(s0);
    int U = net.tail(e0), V = net.head(e0);
    require_internal(net, U, op);
    require_internal(net, V, op);
    Color col = net.vertices[U].color;
    if (net.vertices[V].color != col || net.degree(U) != 3 || net.degree(V) != 3)
        throw input_error(op + ": ends of '" + s0 + "' must be trivalent of one color");
    auto geo = edge_geometry(net);
    const Edge& x0 = net.edges[e0];
    if (x0.poly.size() != 2 || x0.weight != 1 || geo[e0].cross != 0)
        throw input_error(op + ": edge must be straight, unit weight and uncrossed");
    bool white = col == Color::White;
    int S = white ? U : V, O = white ? V : U;
    int special = white ? net.in_edges(U)[0] : net.out_edges(V)[0];
    auto others = [&](int v) {
        std::vector<int> o;
        for (int f : incident(net, v))
            if (f != e0) o.push_back(f);
        return o;
    };
    auto ordered = [&](int v, int w) {
        auto o = others(v);
        Dir ref = net.vertices[w].pos - net.vertices[v].pos;
        if (geom::ccw_before(ref, leaving(net, o[1], v), leaving(net, o[0], v))) std::swap(o[0], o[1]);
        return o;
    };
    auto so = ordered(S, O), oo = ordered(O, S);
    int xm, ym;
    if (special == so[0]) {
        xm = so[1];
        ym = oo[1];
    } else {
        xm = so[0];
        ym = oo[0];
    }

    Network after = net;
    auto reattach = [&](int e, int from, int to) {
        Edge& x = after.edges[e];
        const std::string& tid = net.vertices[to].id;
        if (net.tail(e) == from) {
            x.tail = tid;
            x.poly.front() = net.vertices[to].pos;
        } else {
            x.head = tid;
            x.poly.back() = net.vertices[to].pos;
        }
    };
    reattach(xm, S, O);
    reattach(ym, O, S);
    after.index();
    auto rep = validate(after);
    if (!rep.ok) throw genericity_error(op + ": " + rep.violations.front());

    auto ngeo = edge_geometry(after);
    for (int e : {xm, ym}) {
        if (edge_int(geo, e) != edge_int(ngeo, e))
            throw input_error(op + ": moved edge '" + net.edges[e].id + "' changes its sign data");
        int far = (net.tail(e) == S || net.tail(e) == O) ? net.head(e) : net.tail(e);
        if (net.is_boundary(far)) continue;
        for (int f : incident(net, far)) {
            if (f == e) continue;
            int a = net.head(e) == far ? junction_wind(net, e, f) : junction_wind(net, f, e);
            int b = net.head(e) == far ? junction_wind(after, e, f) : junction_wind(after, f, e);
            bool rel = net.head(e) == far ? net.tail(f) == far : net.head(f) == far;
            if (rel && par(a) != par(b))
                throw input_error(op + ": moved edge '" + net.edges[e].id + "' changes a far-end winding");
        }
    }
    auto additive = [&](const Network& n) {
        int u = n.tail(e0), v = n.head(e0);
        for (int i : n.in_edges(u))
            for (int j : n.out_edges(v)) {
                int lhs = junction_wind(n, i, e0) + junction_wind(n, e0, j);
                int rhs = geom::local_wind(last_dir(n.edges[i]), first_dir(n.edges[j]), n.gauge);
                if (par(lhs) != par(rhs)) return false;
            }
        return true;
    };
    if (!additive(net) || !additive(after)) throw input_error(op + ": winding through the edge is not additive");

    auto E = evec::solve_system(net).E;
    Predictions pred;
    keep_rest(net, E, pred);
    if (white) {
        QVec v = E[e0] - evec::transfer(net, geo, e0, ym) * E[ym] + evec::transfer(after, ngeo, e0, xm) * E[xm];
        pred[s0] = {std::nullopt, v};
    }
    Report r = finish(op, net, after, pred);
    check_same_point(r);
    return r;
}

}  // namespace plabic::xform
