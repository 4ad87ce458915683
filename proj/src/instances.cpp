#include "plabic/instances.hpp"

#include "plabic/error.hpp"

#include <algorithm>

namespace plabic::gen {

using geom::Dir;
using geom::Point;

namespace {

Dir perp(const Dir& d) { return {-d.dy, d.dx}; }
Q l1(const Dir& d) { return abs(d.dx) + abs(d.dy); }
Dir unit1(const Dir& d) { return (1 / l1(d)) * d; }

// Polyline displaced to the left by delta (right for negative delta), segment by segment.
std::vector<Point> offset(const std::vector<Point>& poly, const Q& delta) {
    std::vector<Dir> d;
    std::vector<Dir> m;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        d.push_back(poly[i + 1] - poly[i]);
        m.push_back(delta * unit1(perp(d.back())));
    }
    std::vector<Point> out{poly.front() + m.front()};
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        Point p = poly[i - 1] + m[i - 1], q = poly[i] + m[i];
        Q den = geom::cross(d[i - 1], d[i]);
        if (den == 0) {
            out.push_back(poly[i] + m[i]);
            continue;
        }
        Q t = geom::cross(q - p, d[i]) / den;
        out.push_back(p + t * d[i - 1]);
    }
    out.push_back(poly.back() + m.back());
    return out;
}

// The offset keeps every segment direction (no fold at a sharp bend).
bool keeps_dirs(const std::vector<Point>& poly, const std::vector<Point>& off) {
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        if (geom::dot(off[i + 1] - off[i], poly[i + 1] - poly[i]) <= 0) return false;
    return true;
}

bool internal3(const Network& net, int v) { return !net.is_boundary(v) && net.degree(v) == 3; }

void set_head(Edge& e, const std::string& v, const Point& p) {
    e.head = v;
    e.poly.back() = p;
}

void set_tail(Edge& e, const std::string& v, const Point& p) {
    e.tail = v;
    e.poly.front() = p;
}

void drop(Network& net, const std::vector<std::string>& vertices, const std::vector<std::string>& edges) {
    auto& V = net.vertices;
    V.erase(std::remove_if(V.begin(), V.end(),
                           [&](const Vertex& v) { return std::count(vertices.begin(), vertices.end(), v.id) > 0; }),
            V.end());
    auto& E = net.edges;
    E.erase(std::remove_if(E.begin(), E.end(),
                           [&](const Edge& e) { return std::count(edges.begin(), edges.end(), e.id) > 0; }),
            E.end());
}

bool usable(Network& net) {
    try {
        net.index();
    } catch (const Error&) {
        return false;
    }
    return validate(net).ok;
}

std::vector<int> shuffled_edges(const Network& net, Rng& rng) {
    std::vector<int> out(net.edges.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

}  // namespace

std::optional<Instance> square_instance(const Network& net, Rng& rng) {
    for (int e0 : shuffled_edges(net, rng)) {
        int U = net.tail(e0), V = net.head(e0);
        if (!internal3(net, U) || !internal3(net, V)) continue;
        if (net.vertices[U].color != Color::Black || net.vertices[V].color != Color::White) continue;
        if (net.in_edges(U).size() != 2 || net.out_edges(V).size() != 2) continue;
        const Edge& x0 = net.edges[e0];
        int a = net.in_edges(U)[0], b = net.in_edges(U)[1];
        int c = net.out_edges(V)[0], d = net.out_edges(V)[1];
        if (a == c || a == d || b == c || b == d) continue;
        Dir ref = first_dir(x0);
        int e2 = geom::ccw_before(ref, -last_dir(net.edges[a]), -last_dir(net.edges[b])) ? a : b;
        int e1 = e2 == a ? b : a;
        Dir back = -last_dir(x0);
        int e3 = geom::ccw_before(back, first_dir(net.edges[c]), first_dir(net.edges[d])) ? c : d;
        int e4 = e3 == c ? d : c;
        Q delta(1, 4);
        for (int k = 0; k < 12; ++k, delta /= 2) {
            auto L = offset(x0.poly, delta), R = offset(x0.poly, -delta);
            if (!keeps_dirs(x0.poly, L) || !keeps_dirs(x0.poly, R)) continue;
            Network out = net;
            std::string y = net.fresh_vertex_id("Y"), x = net.fresh_vertex_id("X");
            std::string w = net.fresh_vertex_id("W"), bl = net.fresh_vertex_id("B");
            std::string h1 = net.fresh_edge_id("h1"), h2 = net.fresh_edge_id("h2");
            std::string h3 = net.fresh_edge_id("h3"), h4 = net.fresh_edge_id("h4");
            out.vertices.push_back({y, false, 0, Color::White, R.front()});
            out.vertices.push_back({x, false, 0, Color::Black, L.front()});
            out.vertices.push_back({w, false, 0, Color::White, L.back()});
            out.vertices.push_back({bl, false, 0, Color::Black, R.back()});
            set_head(out.edges[e1], y, R.front());
            set_head(out.edges[e2], x, L.front());
            set_tail(out.edges[e3], bl, R.back());
            set_tail(out.edges[e4], w, L.back());
            out.edges.push_back({h1, y, x, random_weight(rng, false), {R.front(), L.front()}});
            out.edges.push_back({h2, y, bl, random_weight(rng, false), R});
            out.edges.push_back({h3, x, w, random_weight(rng, false), L});
            out.edges.push_back({h4, w, bl, random_weight(rng, false), {L.back(), R.back()}});
            drop(out, {net.vertices[U].id, net.vertices[V].id}, {x0.id});
            if (!usable(out)) continue;
            const Edge &H2 = out.edges[out.eid(h2)], &H3 = out.edges[out.eid(h3)], &H4 = out.edges[out.eid(h4)];
            const Edge &E3 = out.edges[out.eid(net.edges[e3].id)], &E4 = out.edges[out.eid(net.edges[e4].id)];
            try {
                if (geom::cyclic_order(first_dir(H4), first_dir(E4), -last_dir(H3)) != 0) continue;
                if (geom::cyclic_order(-last_dir(H2), first_dir(E3), -last_dir(H4)) != 0) continue;
            } catch (const Error&) {
                continue;
            }
            return Instance{out, {h1}};
        }
    }
    return std::nullopt;
}

std::optional<Instance> flip_instance(const Network& net, Rng& rng) {
    for (int e0 : shuffled_edges(net, rng)) {
        int U = net.tail(e0), V = net.head(e0);
        if (!internal3(net, U) || !internal3(net, V)) continue;
        if (net.vertices[U].color != net.vertices[V].color) continue;
        Point pu = net.vertices[U].pos, pv = net.vertices[V].pos;
        Point mid{(pu.x + pv.x) / 2, (pu.y + pv.y) / 2};
        Q s(1, 2);
        for (int k = 0; k < 10; ++k, s /= 2) {
            Point nu = mid + s * (pu - mid), nv = mid + s * (pv - mid);
            Network out = net;
            out.vertices[U].pos = nu;
            out.vertices[V].pos = nv;
            for (std::size_t e = 0; e < out.edges.size(); ++e) {
                int ei = static_cast<int>(e);
                if (ei == e0) continue;
                for (int v : {U, V}) {
                    const Point& p = v == U ? nu : nv;
                    if (net.tail(ei) == v) out.edges[e].poly.front() = p;
                    if (net.head(ei) == v) out.edges[e].poly.back() = p;
                }
            }
            out.edges[e0].poly = {nu, nv};
            out.edges[e0].weight = 1;
            if (!usable(out)) continue;
            if (edge_geometry(out)[e0].cross != 0) continue;
            return Instance{out, {net.edges[e0].id}};
        }
    }
    return std::nullopt;
}

std::optional<Instance> lens_instance(const Network& net, Rng& rng) {
    for (int e : shuffled_edges(net, rng)) {
        const Edge& x = net.edges[e];
        Point a = x.poly[0], b = x.poly[1];
        Dir d = b - a;
        for (int k = 0; k < 8; ++k) {
            Q s1(1 + static_cast<int>(rng() % 3), 8 << (k / 2));
            Q s2 = s1 * 2;
            Q delta = Q(1, 8 << k);
            Point u = a + s1 * d, v = a + s2 * d;
            Point m = a + ((s1 + s2) / 2) * d + delta * unit1(perp(d));
            Network out = net;
            std::string U = net.fresh_vertex_id("U"), Vv = net.fresh_vertex_id("V");
            std::string e2 = net.fresh_edge_id(x.id + "_2"), e3 = net.fresh_edge_id(x.id + "_3");
            std::string e4 = net.fresh_edge_id(x.id + "_4");
            out.vertices.push_back({U, false, 0, Color::White, u});
            out.vertices.push_back({Vv, false, 0, Color::Black, v});
            Q w2 = random_weight(rng, false), w3 = random_weight(rng, false);
            Q w4 = 1 / (w2 + w3);
            std::vector<Point> rest{v};
            rest.insert(rest.end(), x.poly.begin() + 1, x.poly.end());
            Edge& first = out.edges[e];
            first.head = U;
            first.poly = {a, u};
            out.edges.push_back({e2, U, Vv, w2, {u, v}});
            out.edges.push_back({e3, U, Vv, w3, {u, m, v}});
            out.edges.push_back({e4, Vv, x.head, w4, rest});
            if (!usable(out)) continue;
            return Instance{out, {e2, e3}};
        }
    }
    return std::nullopt;
}

std::optional<Instance> leaf_instance(const Network& net, Rng& rng) {
    std::vector<int> vs;
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (internal3(net, static_cast<int>(v))) vs.push_back(static_cast<int>(v));
    std::shuffle(vs.begin(), vs.end(), rng);
    for (int v1 : vs) {
        bool white = net.vertices[v1].color == Color::White;
        // White V1: detach its in-edge and hang a black leaf. Black V1: detach its out-edge, hang a white leaf.
        int f = white ? net.in_edges(v1)[0] : net.out_edges(v1)[0];
        const Edge& ef = net.edges[f];
        Point c = net.vertices[v1].pos;
        Point p = white ? ef.poly[ef.poly.size() - 2] : ef.poly[1];
        Q s(1, 2);
        for (int k = 0; k < 10; ++k, s /= 2) {
            Point lp = c + s * (p - c), up = c + (s / 2) * (p - c);
            Network out = net;
            std::string L = net.fresh_vertex_id("L"), u = net.fresh_vertex_id("u");
            std::string e1 = net.fresh_edge_id("f");
            out.vertices.push_back({L, false, 0, white ? Color::White : Color::Black, lp});
            out.vertices.push_back({u, false, 0, white ? Color::Black : Color::White, up});
            if (white) {
                set_head(out.edges[f], L, lp);
                out.edges.push_back({e1, u, net.vertices[v1].id, random_weight(rng, false), {up, c}});
            } else {
                set_tail(out.edges[f], L, lp);
                out.edges.push_back({e1, net.vertices[v1].id, u, random_weight(rng, false), {c, up}});
            }
            if (!usable(out)) continue;
            if (edge_geometry(out)[out.eid(e1)].cross != 0) continue;
            return Instance{out, {u}};
        }
    }
    return std::nullopt;
}

std::optional<Instance> dipole_instance(const Network& net, Rng& rng) {
    for (int e : shuffled_edges(net, rng)) {
        const Edge& x = net.edges[e];
        std::size_t i = rng() % (x.poly.size() - 1);
        Point a = x.poly[i], b = x.poly[i + 1];
        Dir t = unit1(b - a), n = unit1(perp(b - a));
        Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
        Q delta(1, 8);
        for (int k = 0; k < 10; ++k, delta /= 2) {
            Point p = m + delta * n + (-delta / 2) * t, q = m + delta * n + (delta / 2) * t;
            Network out = net;
            std::string va = net.fresh_vertex_id("Da"), vb = net.fresh_vertex_id("Db");
            std::string id = net.fresh_edge_id("dp");
            out.vertices.push_back({va, false, 0, Color::Black, p});
            out.vertices.push_back({vb, false, 0, Color::White, q});
            out.edges.push_back({id, va, vb, random_weight(rng, false), {p, q}});
            if (!usable(out)) continue;
            return Instance{out, {id}};
        }
    }
    return std::nullopt;
}

}  // namespace plabic::gen
