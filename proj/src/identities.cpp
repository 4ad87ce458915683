#include "plabic/flows.hpp"
#include "plabic/xform.hpp"

#include "xform_util.hpp"

#include <set>

namespace plabic::xform {

using geom::Dir;
using namespace detail;

long IdentityTally::total_violations() const {
    long t = 0;
    for (const auto& [k, v] : violated) t += v;
    return t;
}

namespace {

void record(IdentityTally& t, const std::string& name, int lhs, int rhs, const std::string& where) {
    ++t.checked[name];
    t.violated[name];  // keep the key
    if (par(lhs) != par(rhs)) {
        ++t.violated[name];
        if (t.examples.size() < 8) t.examples.push_back(name + ": " + where);
    }
}

std::string dirs(const Dir& e1, const Dir& e2, const Dir& f, const Dir& l) {
    return "e1=" + geom::to_string(e1) + " e2=" + geom::to_string(e2) + " f=" + geom::to_string(f) +
           " l=" + geom::to_string(l);
}

int wind(const Dir& a, const Dir& b, const Dir& l) { return geom::local_wind(a, b, l); }

// e1 incoming, e2 outgoing, f incoming at a black vertex.
void black2(const Dir& e1, const Dir& e2, const Dir& f, const Dir& l, IdentityTally& t) {
    int lhs = wind(e1, e2, l) + wind(f, e2, l) + wind(f, -e1, l) + geom::gamma2(e1, l);
    record(t, "black2", lhs, geom::cyclic_order(e1, -e2, f), dirs(e1, e2, f, l));
}

// e1 incoming, e2 and f outgoing at a white vertex.
void white2(const Dir& e1, const Dir& e2, const Dir& f, const Dir& l, IdentityTally& t) {
    int lhs = wind(e1, f, l) + wind(-e2, f, l) + wind(-e2, -e1, l) + geom::gamma2(e1, l);
    record(t, "white2", lhs, 1 - geom::cyclic_order(e1, -e2, -f), dirs(e1, e2, f, l));
}

void a10(const Dir& e1, const Dir& e2, const Dir& l, IdentityTally& t) {
    int lhs = wind(e1, e2, l) + wind(-e2, -e1, l) + geom::gamma2(e1, l) + geom::gamma2(e2, l);
    record(t, "a10", lhs, 0, dirs(e1, e2, Dir{0, 0}, l));
}

bool generic(const std::vector<Dir>& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (geom::is_zero(ds[i])) return false;
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (geom::collinear(ds[i], ds[j])) return false;
    }
    return true;
}

}  // namespace

void check_direction_identities(Rng& rng, long trials, IdentityTally& tally) {
    std::uniform_int_distribution<int> c(-9, 9), pos(1, 9);
    for (long k = 0; k < trials;) {
        Dir e1{c(rng), c(rng)}, e2{c(rng), c(rng)}, f{c(rng), c(rng)}, l{c(rng), pos(rng)};
        if (!generic({e1, e2, f, l}) || geom::collinear(e1, e2) || geom::collinear(e1, f) || geom::collinear(e2, f))
            continue;
        ++k;
        black2(e1, e2, f, l, tally);
        white2(e1, e2, f, l, tally);
        a10(e1, e2, l, tally);
    }
}

void check_marking_identities(const Network& net, const Reversal& rev, IdentityTally& tally) {
    const auto& r = rev.route;
    Network after = reverse_route(net, r);
    Marking m = rev.cycle ? Marking::for_cycle(net, r) : Marking::for_path(net, r);
    auto rays0 = gauge_rays(net);
    auto rays1 = gauge_rays(after);
    const Dir& l = net.gauge;
    auto cr0 = [&](int e) { return ray_crossings(net.edges[e], rays0); };
    auto cr1 = [&](int e) { return ray_crossings(after.edges[e], rays1); };
    std::set<int> on_route(r.begin(), r.end());
    std::set<int> route_vertices;
    for (int e : r) {
        route_vertices.insert(net.tail(e));
        route_vertices.insert(net.head(e));
    }
    std::size_t len = r.size();
    std::size_t inner = rev.cycle ? len : len - 1;
    for (std::size_t k = 0; k < inner; ++k) {
        int e1 = r[k], e2 = r[(k + 1) % len];
        int v = net.head(e1);
        Dir d1 = last_dir(net.edges[e1]), d2 = first_dir(net.edges[e2]);
        std::string where = "vertex '" + net.vertices[v].id + "'" + (rev.cycle ? " on cycle" : " on path") + " at step " + std::to_string(k) + "/" + std::to_string(len);
        a10(d1, d2, l, tally);
        int g1 = gamma1(net, m, e1, e2);
        bool black = net.vertices[v].color == Color::Black;
        if (black) {
            for (int f : net.in_edges(v)) {
                if (f == e1) continue;
                Dir df = last_dir(net.edges[f]);
                int lhs = cr1(f) + cr0(f) + gamma_off(net, m, f) + g1;
                record(tally, "black1", lhs, geom::cyclic_order(d1, -d2, df), where);
                black2(d1, d2, df, l, tally);
            }
        } else {
            for (int f : net.out_edges(v)) {
                if (f == e2) continue;
                Dir df = first_dir(net.edges[f]);
                int lhs = gamma_off(net, m, f) + g1;
                record(tally, "white1", lhs, geom::cyclic_order(d1, -d2, -df), where);
                white2(d1, d2, df, l, tally);
            }
        }
    }
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        int vi = static_cast<int>(v);
        if (net.is_boundary(vi) || route_vertices.count(vi)) continue;
        for (int f : net.in_edges(vi))
            for (int g : net.out_edges(vi)) {
                int lhs = cr0(f) - cr1(f);
                int rhs = gamma_off(net, m, f) - gamma_off(net, m, g);
                record(tally, "int_vert_eq", lhs, rhs, "vertex '" + net.vertices[v].id + "'");
            }
    }
}

IdentityTally check_vertex_identities(const Network& net, long trials, Rng& rng) {
    require_valid(net);
    IdentityTally tally;
    auto cycles = flows::simple_cycles(net, flows::default_limits());
    for (long k = 0; k < trials; ++k) {
        Reversal rev;
        if (!cycles.empty() && rng() % 2) {
            rev.route = cycles[rng() % cycles.size()];
            rev.cycle = true;
        } else if (auto p = random_boundary_path(net, rng)) {
            rev.route = *p;
        } else {
            break;
        }
        try {
            check_marking_identities(net, rev, tally);
        } catch (const Error&) {
            // skip non-generic routes
        }
    }
    return tally;
}

}  // namespace plabic::xform
