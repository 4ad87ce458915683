#include "plabic/fixtures.hpp"

namespace plabic::fixtures {

namespace {

Vertex bv(const std::string& id, int label, int x) { return {id, true, label, Color::None, {x, 0}}; }
Vertex iv(const std::string& id, Color c, const Q& x, const Q& y) { return {id, false, 0, c, {x, y}}; }

Edge straight(const Network& net, const std::string& id, const std::string& t, const std::string& h,
              const Q& w) {
    Edge e{id, t, h, w, {}};
    for (const auto& v : net.vertices) {
        if (v.id == t) e.poly.insert(e.poly.begin(), v.pos);
        if (v.id == h) e.poly.push_back(v.pos);
    }
    return e;
}

// Edge through one bend at the midpoint of its ends shifted by (dx, dy).
Edge bent(const Network& net, const std::string& id, const std::string& t, const std::string& h, const Q& w,
          const Q& dx, const Q& dy) {
    Edge e = straight(net, id, t, h, w);
    const auto &a = e.poly.front(), &b = e.poly.back();
    geom::Point m{(a.x + b.x) / 2 + dx, (a.y + b.y) / 2 + dy};
    e.poly.insert(e.poly.begin() + 1, m);
    return e;
}

}  // namespace

Network null_example(const Q& p, const Q& q) {
    Network net;
    net.n = 2;
    net.gauge = {5, 4};
    net.vertices = {bv("b1", 1, -2),
                    bv("b2", 2, 10),
                    iv("V", Color::White, Q(15, 2), Q(15, 2)),
                    iv("A", Color::White, Q(3, 2), Q(7, 2)),
                    iv("Z", Color::Black, Q(7, 2), 5),
                    iv("D1", Color::Black, Q(13, 2), 4),
                    iv("D2", Color::White, 6, Q(3, 2)),
                    iv("M", Color::Black, Q(-1, 2), Q(5, 2))};
    net.edges = {straight(net, "u2", "b2", "D1", 1),
                 straight(net, "u1", "M", "b1", 1),
                 bent(net, "up", "V", "A", p, -1, Q(5, 4)),
                 bent(net, "uq", "V", "D1", q, Q(1, 2), 0),
                 bent(net, "v", "A", "Z", 1, Q(1, 2), Q(-3, 2)),
                 straight(net, "y", "A", "M", 1),
                 straight(net, "u", "Z", "V", 1),
                 bent(net, "d1", "D1", "D2", 1, Q(1, 4), Q(-1, 2)),
                 straight(net, "w", "D2", "Z", 1),
                 bent(net, "t", "D2", "M", 1, 1, Q(-3, 2))};
    net.index();
    return net;
}

Network null_free_example(const Q& p, const Q& q, const Q& s) {
    Network net = null_example(p, q);
    Q den = 1 + p + q;
    auto set = [&](const std::string& id, const Q& w) {
        Q c = w;
        c.canonicalize();
        net.edges[net.eid(id)].weight = c;
    };
    set("u", s);
    set("up", p / s);
    set("uq", q / s);
    set("t", p / den);
    set("y", (1 + 2 * p + q + p * p + 2 * p * q) / (p * den));
    return net;
}

std::vector<std::string> null_example_path() { return {"u2", "d1", "w", "u", "up", "y", "u1"}; }

Network single_path() {
    Network net;
    net.n = 2;
    net.gauge = {1, 2};
    net.vertices = {bv("b1", 1, 0), bv("b2", 2, 4), iv("X", Color::White, 2, 2)};
    net.edges = {straight(net, "e1", "b1", "X", 1), straight(net, "e2", "X", "b2", 1)};
    net.index();
    return net;
}

}  // namespace plabic::fixtures
