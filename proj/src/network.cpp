#include "plabic/network.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plabic {

using geom::Dir;
using geom::Point;
using geom::Ray;

void Network::index() {
    vmap_.clear();
    emap_.clear();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vmap_.emplace(vertices[i].id, static_cast<int>(i)).second)
            throw input_error("duplicate vertex id '" + vertices[i].id + "'");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!emap_.emplace(edges[i].id, static_cast<int>(i)).second)
            throw input_error("duplicate edge id '" + edges[i].id + "'");
    }
    tail_.assign(edges.size(), -1);
    head_.assign(edges.size(), -1);
    out_.assign(vertices.size(), {});
    in_.assign(vertices.size(), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int t = vid(edges[i].tail);
        int h = vid(edges[i].head);
        tail_[i] = t;
        head_[i] = h;
        out_[t].push_back(static_cast<int>(i));
        in_[h].push_back(static_cast<int>(i));
    }
    bv_.assign(n + 1, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& v = vertices[i];
        if (!v.boundary) continue;
        if (v.label < 1 || v.label > n)
            throw input_error("boundary vertex '" + v.id + "' has label outside 1.." +
                              std::to_string(n));
        if (bv_[v.label] != -1)
            throw input_error("boundary label " + std::to_string(v.label) + " used twice");
        bv_[v.label] = static_cast<int>(i);
    }
}

int Network::vid(const std::string& id) const {
    auto it = vmap_.find(id);
    if (it == vmap_.end()) throw input_error("unknown vertex '" + id + "'");
    return it->second;
}

int Network::eid(const std::string& id) const {
    auto it = emap_.find(id);
    if (it == emap_.end()) throw input_error("unknown edge '" + id + "'");
    return it->second;
}

int Network::boundary_vertex(int label) const {
    if (label < 1 || label > n) return -1;
    return bv_[label];
}

int Network::boundary_edge(int label) const {
    int v = boundary_vertex(label);
    if (v < 0) return -1;
    if (!out_[v].empty()) return out_[v][0];
    if (!in_[v].empty()) return in_[v][0];
    return -1;
}

std::string Network::fresh_vertex_id(const std::string& stem) const {
    if (!has_vertex(stem)) return stem;
    for (int i = 1;; ++i) {
        std::string s = stem + "_" + std::to_string(i);
        if (!has_vertex(s)) return s;
    }
}

std::string Network::fresh_edge_id(const std::string& stem) const {
    if (!has_edge(stem)) return stem;
    for (int i = 1;; ++i) {
        std::string s = stem + "_" + std::to_string(i);
        if (!has_edge(s)) return s;
    }
}

std::vector<Dir> segment_dirs(const Edge& e) {
    std::vector<Dir> d;
    for (std::size_t i = 0; i + 1 < e.poly.size(); ++i) d.push_back(e.poly[i + 1] - e.poly[i]);
    return d;
}

Dir first_dir(const Edge& e) { return e.poly[1] - e.poly[0]; }
Dir last_dir(const Edge& e) { return e.poly[e.poly.size() - 1] - e.poly[e.poly.size() - 2]; }

std::vector<int> source_base(const Network& net) {
    std::vector<int> out;
    for (int j = 1; j <= net.n; ++j) {
        int v = net.boundary_vertex(j);
        if (v >= 0 && !net.out_edges(v).empty()) out.push_back(j);
    }
    return out;
}

std::vector<int> sink_labels(const Network& net) {
    std::vector<int> out;
    for (int j = 1; j <= net.n; ++j) {
        int v = net.boundary_vertex(j);
        if (v >= 0 && net.out_edges(v).empty()) out.push_back(j);
    }
    return out;
}

std::vector<Ray> gauge_rays(const Network& net) {
    std::vector<Ray> rays;
    for (int j : source_base(net)) rays.push_back({net.vertices[net.boundary_vertex(j)].pos, net.gauge});
    return rays;
}

int internal_wind(const Edge& e, const Dir& l) {
    auto d = segment_dirs(e);
    int w = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) w += geom::local_wind(d[i], d[i + 1], l);
    return w;
}

int ray_crossings(const Edge& e, const std::vector<Ray>& rays) {
    int c = 0;
    for (const Ray& r : rays)
        for (std::size_t i = 0; i + 1 < e.poly.size(); ++i)
            c += geom::ray_segment_hits(r, e.poly[i], e.poly[i + 1]);
    return c;
}

std::vector<EdgeGeo> edge_geometry(const Network& net) {
    auto rays = gauge_rays(net);
    std::vector<EdgeGeo> g(net.edges.size());
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const Edge& e = net.edges[i];
        g[i].first = first_dir(e);
        g[i].last = last_dir(e);
        g[i].iw = internal_wind(e, net.gauge);
        g[i].cross = ray_crossings(e, rays);
    }
    return g;
}

int junction_wind(const Network& net, int e, int f) {
    return geom::local_wind(last_dir(net.edges[e]), first_dir(net.edges[f]), net.gauge);
}

const char* color_name(Color c) {
    switch (c) {
        case Color::White: return "white";
        case Color::Black: return "black";
        default: return "none";
    }
}

namespace {

struct Seg {
    int edge;
    int idx;
    Point a, b;
};

void check_planarity(const Network& net, std::vector<std::string>& bad) {
    std::vector<Seg> segs;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& p = net.edges[e].poly;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            segs.push_back({static_cast<int>(e), static_cast<int>(i), p[i], p[i + 1]});
    }
    auto endpoint_vertex = [&](const Seg& s, const Point& p) -> int {
        const Edge& e = net.edges[s.edge];
        int last = static_cast<int>(e.poly.size()) - 2;
        if (s.idx == 0 && p == s.a) return net.tail(s.edge);
        if (s.idx == last && p == s.b) return net.head(s.edge);
        return -1;
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            if (!geom::segments_meet(s.a, s.b, t.a, t.b)) continue;
            // Allowed: a single shared endpoint that is a common vertex or a shared bend of one polyline.
            std::vector<Point> shared;
            for (const Point& p : {s.a, s.b})
                if (p == t.a || p == t.b) shared.push_back(p);
            bool ok = false;
            if (shared.size() == 1) {
                const Point& p = shared[0];
                Dir ds = (p == s.a) ? s.b - s.a : s.a - s.b;
                Dir dt = (p == t.a) ? t.b - t.a : t.a - t.b;
                bool overlap = geom::parallel(ds, dt);
                bool touch_only = !geom::on_segment(p == s.a ? s.b : s.a, t.a, t.b) &&
                                  !geom::on_segment(p == t.a ? t.b : t.a, s.a, s.b);
                if (!overlap && touch_only) {
                    if (s.edge == t.edge && std::abs(s.idx - t.idx) == 1) {
                        ok = true;
                    } else {
                        int vs = endpoint_vertex(s, p);
                        int vt = endpoint_vertex(t, p);
                        ok = vs >= 0 && vs == vt;
                    }
                }
            }
            if (!ok)
                bad.push_back("crossing: edges '" + net.edges[s.edge].id + "' and '" +
                              net.edges[t.edge].id + "' meet improperly near " +
                              geom::to_string(shared.empty() ? s.a : shared[0]));
        }
    }
}

}  // namespace

ValidationReport validate(const Network& net) {
    ValidationReport rep;
    auto& bad = rep.violations;
    auto& warn = rep.warnings;
    if (net.n < 1) bad.push_back("structure: n must be positive");
    if (geom::is_zero(net.gauge) || net.gauge.dy <= 0)
        bad.push_back("gauge: direction must point into the disk (dy > 0)");

    std::set<Point> positions;
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        const Vertex& x = net.vertices[v];
        if (!positions.insert(x.pos).second)
            bad.push_back("embedding: two vertices at " + geom::to_string(x.pos));
        int deg = net.degree(static_cast<int>(v));
        if (x.boundary) {
            if (x.pos.y != 0) bad.push_back("boundary: vertex '" + x.id + "' not on y=0");
            if (deg != 1) bad.push_back("boundary: vertex '" + x.id + "' must have degree 1");
            continue;
        }
        if (x.pos.y <= 0) bad.push_back("embedding: internal vertex '" + x.id + "' not in y>0");
        if (x.color == Color::None) bad.push_back("color: internal vertex '" + x.id + "' uncolored");
        if (deg == 0 || deg > 3)
            bad.push_back("degree: vertex '" + x.id + "' has degree " + std::to_string(deg));
        if (deg == 1) warn.push_back("leaf: vertex '" + x.id + "'");
        int in = static_cast<int>(net.in_edges(static_cast<int>(v)).size());
        int out = static_cast<int>(net.out_edges(static_cast<int>(v)).size());
        if (x.color == Color::White && in != 1)
            bad.push_back("perfectness: white vertex '" + x.id + "' has " + std::to_string(in) +
                          " incoming edges");
        if (x.color == Color::Black && out != 1)
            bad.push_back("perfectness: black vertex '" + x.id + "' has " + std::to_string(out) +
                          " outgoing edges");
    }
    for (int j = 1; j <= net.n; ++j)
        if (net.boundary_vertex(j) < 0) bad.push_back("boundary: label " + std::to_string(j) + " missing");
    for (int j = 1; j < net.n; ++j) {
        int a = net.boundary_vertex(j), b = net.boundary_vertex(j + 1);
        if (a >= 0 && b >= 0 && !(net.vertices[a].pos.x < net.vertices[b].pos.x))
            bad.push_back("boundary: labels must increase with x (" + std::to_string(j) + ")");
    }

    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const Edge& x = net.edges[e];
        if (x.weight <= 0) bad.push_back("weight: edge '" + x.id + "' must be positive");
        if (x.poly.size() < 2) {
            bad.push_back("polyline: edge '" + x.id + "' needs two points");
            continue;
        }
        if (x.poly.front() != net.vertices[net.tail(static_cast<int>(e))].pos ||
            x.poly.back() != net.vertices[net.head(static_cast<int>(e))].pos)
            bad.push_back("polyline: edge '" + x.id + "' endpoints differ from vertex positions");
        if (net.tail(static_cast<int>(e)) == net.head(static_cast<int>(e)))
            bad.push_back("structure: edge '" + x.id + "' is a loop");
        bool degenerate = false;
        for (std::size_t i = 0; i + 1 < x.poly.size(); ++i)
            if (x.poly[i] == x.poly[i + 1]) degenerate = true;
        if (degenerate) {
            bad.push_back("polyline: edge '" + x.id + "' has a zero-length segment");
            continue;
        }
        for (std::size_t i = 1; i + 1 < x.poly.size(); ++i) {
            if (x.poly[i].y <= 0) bad.push_back("embedding: edge '" + x.id + "' bend not in y>0");
            if (geom::antiparallel(x.poly[i] - x.poly[i - 1], x.poly[i + 1] - x.poly[i]))
                bad.push_back("polyline: antiparallel corner on edge '" + x.id + "'");
        }
        for (auto& d : segment_dirs(x))
            if (!geom::is_zero(net.gauge) && geom::collinear(d, net.gauge))
                bad.push_back("gauge: segment of edge '" + x.id + "' parallel to the gauge direction");
    }
    if (!bad.empty()) {
        rep.ok = false;
        return rep;
    }

    check_planarity(net, bad);

    // Rays must avoid every vertex and bend point.
    for (const Ray& r : gauge_rays(net)) {
        auto on_ray = [&](const Point& p) {
            Dir d = p - r.origin;
            return !geom::is_zero(d) && geom::parallel(d, r.dir);
        };
        for (const Vertex& v : net.vertices)
            if (on_ray(v.pos))
                bad.push_back("gauge: ray from " + geom::to_string(r.origin) + " passes through vertex '" +
                              v.id + "'");
        for (const Edge& e : net.edges)
            for (std::size_t i = 1; i + 1 < e.poly.size(); ++i)
                if (on_ray(e.poly[i]))
                    bad.push_back("gauge: ray from " + geom::to_string(r.origin) +
                                  " passes through a bend of edge '" + e.id + "'");
    }

    // Components without boundary vertices.
    std::vector<int> parent(net.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        parent[find(net.tail(static_cast<int>(e)))] = find(net.head(static_cast<int>(e)));
    std::set<int> with_boundary;
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (net.vertices[v].boundary) with_boundary.insert(find(static_cast<int>(v)));
    std::set<int> isolated;
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (!with_boundary.count(find(static_cast<int>(v)))) isolated.insert(find(static_cast<int>(v)));
    for (int c : isolated) warn.push_back("isolated component containing '" + net.vertices[c].id + "'");

    Counts& c = rep.counts;
    c.n = net.n;
    c.k = static_cast<int>(source_base(net).size());
    bool boundary_to_boundary = false;
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        const Vertex& x = net.vertices[v];
        if (x.boundary) continue;
        ++c.internal;
        int deg = net.degree(static_cast<int>(v));
        if (deg == 3) (x.color == Color::White ? c.tW : c.tB)++;
        if (deg == 2) (x.color == Color::White ? c.dW : c.dB)++;
    }
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        bool bt = net.is_boundary(net.tail(static_cast<int>(e)));
        bool bh = net.is_boundary(net.head(static_cast<int>(e)));
        if (!bt && !bh) ++c.nI;
        if (bt && bh) boundary_to_boundary = true;
    }
    c.g = c.nI + c.n - c.internal;
    if (bad.empty()) {
        try {
            c.faces = static_cast<int>(faces(net).size());
        } catch (const Error& e) {
            bad.push_back(std::string("faces: ") + e.what());
        }
    }
    if (warn.empty() && !boundary_to_boundary && bad.empty()) {
        if (3 * (c.tW + c.tB) + 2 * (c.dW + c.dB) != 2 * c.nI + c.n)
            bad.push_back("counts: degree identity fails");
        if (2 * c.tB + c.tW + c.dW + c.dB != c.nI + c.k) bad.push_back("counts: orientation identity fails");
        if (c.tW != c.g - c.k) bad.push_back("counts: t_W != g - k");
        if (c.tB != c.g - c.n + c.k) bad.push_back("counts: t_B != g - n + k");
        if (c.dW + c.dB != c.nI + 2 * c.n - 3 * c.g) bad.push_back("counts: d_W + d_B != n_I + 2n - 3g");
        if (c.faces != c.g + 1) bad.push_back("counts: face count differs from g + 1");
    } else if (boundary_to_boundary) {
        warn.push_back("edge joining two boundary vertices; count identities skipped");
    }
    rep.ok = bad.empty();
    return rep;
}

void require_valid(const Network& net) {
    auto rep = validate(net);
    if (!rep.ok) throw input_error("invalid network: " + rep.violations.front());
}

namespace {

struct Link {
    int a, b;  // vertex indices
    std::vector<Point> poly;
    int edge;  // -1 for disk boundary pieces
};

}  // namespace

std::vector<Face> faces(const Network& net) {
    std::vector<Link> links;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        links.push_back({net.tail(static_cast<int>(e)), net.head(static_cast<int>(e)), net.edges[e].poly,
                         static_cast<int>(e)});
    Q top = 1;
    for (const Vertex& v : net.vertices) top = std::max(top, Q(v.pos.y + 1));
    for (const Edge& e : net.edges)
        for (const Point& p : e.poly) top = std::max(top, Q(p.y + 1));
    for (int j = 1; j < net.n; ++j) {
        int a = net.boundary_vertex(j), b = net.boundary_vertex(j + 1);
        links.push_back({a, b, {net.vertices[a].pos, net.vertices[b].pos}, -1});
    }
    {
        int a = net.boundary_vertex(net.n), b = net.boundary_vertex(1);
        Point pa = net.vertices[a].pos, pb = net.vertices[b].pos;
        links.push_back({a, b,
                         {pa, {pa.x + 1, 0}, {pa.x + 1, top}, {pb.x - 1, top}, {pb.x - 1, 0}, pb},
                         -1});
    }
    // Dart 2i runs along link i, dart 2i+1 against it.
    auto start_of = [&](int d) { return d % 2 == 0 ? links[d / 2].a : links[d / 2].b; };
    auto poly_of = [&](int d) {
        auto p = links[d / 2].poly;
        if (d % 2) std::reverse(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<int>> rot(net.vertices.size());
    for (int d = 0; d < static_cast<int>(2 * links.size()); ++d) rot[start_of(d)].push_back(d);
    const Dir ref{1, 0};
    for (auto& r : rot) {
        std::vector<std::pair<Dir, int>> tmp;
        for (int d : r) {
            auto p = poly_of(d);
            tmp.push_back({p[1] - p[0], d});
        }
        std::sort(tmp.begin(), tmp.end(),
                  [&](const auto& x, const auto& y) { return geom::ccw_before(ref, x.first, y.first); });
        for (std::size_t i = 0; i + 1 < tmp.size(); ++i)
            if (geom::parallel(tmp[i].first, tmp[i + 1].first))
                throw input_error("overlapping edge ends at a vertex");
        r.clear();
        for (auto& t : tmp) r.push_back(t.second);
    }
    std::vector<int> pos_in_rot(2 * links.size());
    for (auto& r : rot)
        for (std::size_t i = 0; i < r.size(); ++i) pos_in_rot[r[i]] = static_cast<int>(i);

    std::vector<char> seen(2 * links.size(), 0);
    std::vector<Face> out;
    for (int d0 = 0; d0 < static_cast<int>(2 * links.size()); ++d0) {
        if (seen[d0]) continue;
        Face f;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            auto p = poly_of(d);
            f.outline.insert(f.outline.end(), p.begin(), p.end() - 1);
            const Link& L = links[d / 2];
            if (L.edge < 0)
                f.touches_boundary = true;
            else
                f.sides.push_back({L.edge, d % 2 == 0});
            int rev = d ^ 1;
            const auto& r = rot[start_of(rev)];
            int k = pos_in_rot[rev];
            d = r[(k + r.size() - 1) % r.size()];
        }
        if (geom::signed_area2(f.outline) > 0) out.push_back(std::move(f));
    }
    return out;
}

Q face_weight(const Network& net, const Face& f) {
    Q w = 1;
    for (const auto& s : f.sides) {
        if (s.forward)
            w /= net.edges[s.edge].weight;
        else
            w *= net.edges[s.edge].weight;
    }
    return w;
}

Network apply_weight_gauge(const Network& net, const std::map<std::string, Q>& t) {
    for (const auto& [id, val] : t) {
        int v = net.vid(id);
        if (val <= 0) throw input_error("gauge value at '" + id + "' must be positive");
        if (net.vertices[v].boundary && val != 1)
            throw input_error("gauge value at boundary vertex '" + id + "' must be 1");
    }
    auto at = [&](const std::string& id) {
        auto it = t.find(id);
        return it == t.end() ? Q(1) : it->second;
    };
    Network out = net;
    for (Edge& e : out.edges) {
        e.weight = e.weight * at(e.tail) / at(e.head);
        e.weight.canonicalize();
    }
    out.index();
    return out;
}

}  // namespace plabic
