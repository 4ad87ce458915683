#include "plabic/generate.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace plabic::gen {

using geom::Dir;
using geom::Point;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

using Tri = std::array<int, 3>;

void make_ccw(Tri& t, const std::vector<Point>& pts) {
    if (geom::cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]) < 0) std::swap(t[1], t[2]);
}

std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::map<std::pair<int, int>, std::vector<int>> edge_map(const std::vector<Tri>& tris) {
    std::map<std::pair<int, int>, std::vector<int>> m;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (int k = 0; k < 3; ++k) m[key(tris[i][k], tris[i][(k + 1) % 3])].push_back(static_cast<int>(i));
    return m;
}

Point centroid(const std::vector<Point>& pts, const Tri& t) {
    return {(pts[t[0]].x + pts[t[1]].x + pts[t[2]].x) / 3, (pts[t[0]].y + pts[t[1]].y + pts[t[2]].y) / 3};
}

Point along(const Point& a, const Point& b, const Q& s) { return a + s * (b - a); }

}  // namespace

Q random_weight(Rng& rng, bool small) {
    Q w(uniform(rng, 1, 5), uniform(rng, 1, 5));
    w.canonicalize();
    if (small) {
        w = Q(uniform(rng, 1, 4), uniform(rng, 3, 12) * 4);
        w.canonicalize();
        if (w > Q(1, 3)) w = Q(1, 3);
    }
    return w;
}

Dir random_gauge(Rng& rng) {
    for (;;) {
        Dir d{uniform(rng, -7, 7), uniform(rng, 1, 7)};
        d.dx /= uniform(rng, 1, 3);
        if (!geom::is_zero(d)) return d;
    }
}

bool has_cycle(const Network& net) {
    std::vector<int> state(net.vertices.size(), 0);
    bool found = false;
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (int e : net.out_edges(v)) {
            int h = net.head(e);
            if (state[h] == 1) found = true;
            if (state[h] == 0) self(self, h);
            if (found) return;
        }
        state[v] = 2;
    };
    for (std::size_t v = 0; v < net.vertices.size() && !found; ++v)
        if (state[v] == 0) dfs(dfs, static_cast<int>(v));
    return found;
}

bool orient_randomly(Network& net, Rng& rng) {
    net.index();
    std::size_t nv = net.vertices.size(), ne = net.edges.size();
    std::vector<int> need(nv, -1), have(nv, 0), left(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        const Vertex& x = net.vertices[v];
        int deg = net.degree(static_cast<int>(v));
        if (!x.boundary) need[v] = (x.color == Color::White) ? 1 : deg - 1;
        left[v] = deg;
    }
    std::vector<int> a(ne), b(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        a[e] = net.tail(static_cast<int>(e));
        b[e] = net.head(static_cast<int>(e));
    }
    std::vector<int> order(ne);
    for (std::size_t i = 0; i < ne; ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> choice(ne, -1);  // head endpoint
    auto feasible = [&](int v) {
        if (need[v] < 0) return true;
        return have[v] <= need[v] && have[v] + left[v] >= need[v];
    };
    long budget = 200000;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (--budget < 0) return false;
        if (i == ne) return true;
        int e = order[i];
        int opts[2] = {b[e], a[e]};
        if (uniform(rng, 0, 1)) std::swap(opts[0], opts[1]);
        for (int h : opts) {
            int t = (h == a[e]) ? b[e] : a[e];
            --left[a[e]];
            --left[b[e]];
            ++have[h];
            if (feasible(h) && feasible(t)) {
                choice[e] = h;
                if (self(self, i + 1)) return true;
            }
            --have[h];
            ++left[a[e]];
            ++left[b[e]];
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    for (std::size_t e = 0; e < ne; ++e) {
        Edge& x = net.edges[e];
        if (net.vid(x.head) != choice[e]) {
            std::swap(x.tail, x.head);
            std::reverse(x.poly.begin(), x.poly.end());
        }
    }
    net.index();
    return true;
}

Network random_network(Rng& rng, const Options& opt) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int b = uniform(rng, opt.min_sides, opt.max_sides);
        int m = uniform(rng, 1, opt.max_top);
        int r = uniform(rng, 0, opt.max_interior);
        std::vector<Point> pts;
        int x = 0;
        for (int i = 0; i <= b; ++i) {
            pts.push_back({x, 0});
            x += uniform(rng, 2, 4);
        }
        Q W = pts[b].x;
        Q mid = W / 2;
        Q H = W / 4 + uniform(rng, 1, 3);
        std::set<int> tx;
        while (static_cast<int>(tx.size()) < m) tx.insert(uniform(rng, 1, 4 * static_cast<int>(W.get_num().get_si()) - 1));
        std::vector<int> txs(tx.rbegin(), tx.rend());
        for (int t : txs) {
            Q px(t, 4);
            px.canonicalize();
            Q py = H - (px - mid) * (px - mid) / W;
            pts.push_back({px, py});
        }
        int np = static_cast<int>(pts.size());
        std::vector<Tri> tris;
        int T = b + 1;
        std::vector<int> seq;
        for (int i = T + 1; i < np; ++i) seq.push_back(i);
        for (int i = 0; i <= b; ++i) seq.push_back(i);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) tris.push_back({T, seq[i], seq[i + 1]});
        for (int k = 0; k < r; ++k) {
            int ti = uniform(rng, 0, static_cast<int>(tris.size()) - 1);
            Tri t = tris[ti];
            int wa = uniform(rng, 1, 4), wb = uniform(rng, 1, 4), wc = uniform(rng, 1, 4);
            Q s = wa + wb + wc;
            Point p{(wa * pts[t[0]].x + wb * pts[t[1]].x + wc * pts[t[2]].x) / s,
                    (wa * pts[t[0]].y + wb * pts[t[1]].y + wc * pts[t[2]].y) / s};
            int pi = static_cast<int>(pts.size());
            pts.push_back(p);
            tris[ti] = {t[0], t[1], pi};
            tris.push_back({t[1], t[2], pi});
            tris.push_back({t[2], t[0], pi});
        }
        for (auto& t : tris) make_ccw(t, pts);
        for (int f = 0; f < opt.flips; ++f) {
            auto em = edge_map(tris);
            std::vector<std::pair<int, int>> inner;
            for (auto& [k, v] : em)
                if (v.size() == 2) inner.push_back(k);
            if (inner.empty()) break;
            auto [ea, eb] = inner[uniform(rng, 0, static_cast<int>(inner.size()) - 1)];
            auto& ts = em[{ea, eb}];
            auto opp = [&](const Tri& t) {
                for (int v : t)
                    if (v != ea && v != eb) return v;
                return -1;
            };
            int c = opp(tris[ts[0]]), d = opp(tris[ts[1]]);
            auto side = [&](int p, int q, int s) { return sgn(geom::cross(pts[q] - pts[p], pts[s] - pts[p])); };
            if (side(c, d, ea) * side(c, d, eb) >= 0 || side(ea, eb, c) * side(ea, eb, d) >= 0) continue;
            tris[ts[0]] = {c, d, ea};
            tris[ts[1]] = {d, c, eb};
            make_ccw(tris[ts[0]], pts);
            make_ccw(tris[ts[1]], pts);
        }

        // Dual network.
        Network net;
        net.n = b;
        auto em = edge_map(tris);
        std::vector<int> deg(tris.size(), 0);
        struct UEdge {
            int t1, t2;  // t2 = -1 - label for a boundary edge
            Point side;
        };
        std::vector<UEdge> ues;
        for (auto& [k, v] : em) {
            Point s = along(pts[k.first], pts[k.second], Q(uniform(rng, 2, 5), 7));
            if (v.size() == 2) {
                ues.push_back({v[0], v[1], s});
            } else if (pts[k.first].y == 0 && pts[k.second].y == 0) {
                int label = std::min(k.first, k.second) + 1;
                ues.push_back({v[0], -1 - label, s});
            }
        }
        std::vector<char> alive(tris.size(), 1), ue_alive(ues.size(), 1);
        bool changed = true;
        while (changed) {
            changed = false;
            std::fill(deg.begin(), deg.end(), 0);
            for (std::size_t i = 0; i < ues.size(); ++i) {
                if (!ue_alive[i]) continue;
                ++deg[ues[i].t1];
                if (ues[i].t2 >= 0) ++deg[ues[i].t2];
            }
            for (std::size_t t = 0; t < tris.size(); ++t) {
                if (alive[t] && deg[t] <= 1) {
                    alive[t] = 0;
                    changed = true;
                    for (std::size_t i = 0; i < ues.size(); ++i)
                        if (ue_alive[i] && (ues[i].t1 == static_cast<int>(t) || ues[i].t2 == static_cast<int>(t)))
                            ue_alive[i] = 0;
                }
            }
        }
        std::set<int> labels;
        for (std::size_t i = 0; i < ues.size(); ++i)
            if (ue_alive[i] && ues[i].t2 < 0) labels.insert(-1 - ues[i].t2);
        if (static_cast<int>(labels.size()) != b) continue;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            if (!alive[t]) continue;
            Vertex v;
            v.id = "V" + std::to_string(t);
            v.color = uniform(rng, 0, 1) ? Color::White : Color::Black;
            v.pos = centroid(pts, tris[t]);
            net.vertices.push_back(v);
        }
        for (std::size_t i = 0; i < ues.size(); ++i) {
            if (!ue_alive[i]) continue;
            const UEdge& u = ues[i];
            Edge e;
            e.id = "e" + std::to_string(net.edges.size());
            e.weight = random_weight(rng, opt.small_weights);
            Point c1 = centroid(pts, tris[u.t1]);
            if (u.t2 >= 0) {
                e.tail = "V" + std::to_string(u.t1);
                e.head = "V" + std::to_string(u.t2);
                Point c2 = centroid(pts, tris[u.t2]);
                e.poly = {c1, u.side, c2};
                if (geom::collinear(u.side - c1, c2 - u.side)) e.poly = {c1, c2};
            } else {
                int label = -1 - u.t2;
                Vertex bvx;
                bvx.id = "b" + std::to_string(label);
                bvx.boundary = true;
                bvx.label = label;
                bvx.pos = u.side;
                net.vertices.push_back(bvx);
                e.tail = bvx.id;
                e.head = "V" + std::to_string(u.t1);
                e.poly = {u.side, c1};
            }
            net.edges.push_back(e);
        }
        if (net.edges.size() > opt.max_edges) continue;
        std::sort(net.vertices.begin(), net.vertices.end(), [](const Vertex& a, const Vertex& c) {
            if (a.boundary != c.boundary) return a.boundary;
            if (a.boundary) return a.label < c.label;
            return a.id < c.id;
        });
        try {
            net.index();
        } catch (const Error&) {
            continue;
        }
        if (!orient_randomly(net, rng)) continue;
        bool ok = false;
        for (int g = 0; g < 20 && !ok; ++g) {
            net.gauge = random_gauge(rng);
            ok = validate(net).ok;
        }
        if (ok) return net;
    }
    throw internal_error("random network generation failed");
}

}  // namespace plabic::gen
