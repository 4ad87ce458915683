#include "plabic/checks.hpp"

#include "plabic/error.hpp"
#include "plabic/flows.hpp"
#include "plabic/instances.hpp"

#include <set>

namespace plabic::checks {

namespace {

int par(int x) { return ((x % 2) + 2) % 2; }
Q psign(int x) { return par(x) ? Q(-1) : Q(1); }
int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string at(const std::string& where, const std::string& what) { return where + ": " + what; }

}  // namespace

void Tally::record(const std::string& name, bool ok, const std::string& where) {
    ++checked[name];
    failed[name];
    if (!ok) {
        ++failed[name];
        if (examples.size() < 10) examples.push_back(name + " @ " + where);
    }
}

long Tally::failures() const {
    long n = 0;
    for (const auto& [k, v] : failed) n += v;
    return n;
}

void Tally::merge(const Tally& o) {
    for (const auto& [k, v] : o.checked) checked[k] += v;
    for (const auto& [k, v] : o.failed) failed[k] += v;
    for (const auto& [k, v] : o.skipped) skipped[k] += v;
    for (const auto& x : o.examples)
        if (examples.size() < 10) examples.push_back(x);
}

io::Json tally_json(const std::string& suite, const Tally& t) {
    io::Json j;
    j["suite"] = suite;
    j["ok"] = t.ok();
    j["failures"] = t.failures();
    io::Json rows = io::Json::array();
    for (const auto& [name, n] : t.checked) {
        auto f = t.failed.find(name);
        rows.push_back({{"check", name}, {"checked", n}, {"failed", f == t.failed.end() ? 0 : f->second}});
    }
    j["checks"] = rows;
    io::Json skipped = io::Json::object();
    for (const auto& [name, n] : t.skipped) skipped[name] = n;
    j["skipped"] = skipped;
    j["examples"] = t.examples;
    return j;
}

void geometry_checks(const Network& net, Tally& t, const std::string& where) {
    auto rep = validate(net);
    t.record("network validates", rep.ok, at(where, rep.ok ? "" : rep.violations.front()));
    if (!rep.ok) return;
    t.record("face count is g+1", static_cast<int>(faces(net).size()) == rep.counts.g + 1, where);
    auto geo = edge_geometry(net);
    for (const auto& c : flows::simple_cycles(net, flows::default_limits())) {
        auto s = flows::cycle_stats(net, geo, c);
        std::string id = at(where, "cycle starting at '" + net.edges[c.front()].id + "'");
        t.record("simple cycle winding is odd", par(s.wind) == 1, id);
        t.record("simple cycle ray crossings are even", par(s.intc) == 0, id);
    }
}

void flow_checks(const Network& net, Tally& t, const std::string& where) {
    auto sys = evec::solve_system(net);
    auto cf = flows::enum_conservative(net, flows::default_limits());
    t.record("detM equals the conservative flow total", sys.det == flows::conservative_total(cf), where);
    if (!gen::has_cycle(net)) t.record("detM is 1 without cycles", sys.det == 1, where);
}

void source_row_checks(const Network& net, Tally& t, const std::string& where) {
    auto lim = flows::default_limits();
    auto sys = evec::solve_system(net);
    auto bm = evec::boundary_matrix(net, sys.E);
    Q total = flows::conservative_total(flows::enum_conservative(net, lim));
    auto sinks = sink_labels(net);
    for (std::size_t r = 0; r < bm.pivots.size(); ++r) {
        int i = bm.pivots[r];
        int e = net.boundary_edge(i);
        QVec row = zero_vec(net.n);
        row[i - 1] = 1;
        for (int j : sinks) {
            auto fl = flows::enum_edge_flows(net, e, j, lim);
            int N = evec::sources_between(bm.pivots, i, j);
            std::string id = at(where, "source " + std::to_string(i) + ", sink " + std::to_string(j));
            Q sum = 0;
            std::set<int> parities;
            for (const auto& f : fl) {
                sum += f.stats.weight;
                parities.insert(par(f.stats.wind + f.stats.intc));
            }
            if (!fl.empty()) {
                t.record("source flows share one parity", parities.size() == 1, id);
                t.record("source flow parity counts sources in between", *parities.begin() == par(N), id);
            }
            row[j - 1] = psign(N) * sum / total;
        }
        t.record("source edge vector is the matrix row minus the source unit vector",
                 sys.E[e] == row - unit_vec(net.n, i - 1), at(where, "source " + std::to_string(i)));
        t.record("flow row equals boundary matrix row", bm.A[r] == row, at(where, "source " + std::to_string(i)));
    }
}

void vector_checks(const Network& net, Rng& rng, Tally& t, const std::string& where) {
    auto bc = evec::canonical_bc(net);
    auto sys = evec::solve_system(net, bc);
    auto tal = evec::talaska_all(net, bc, flows::default_limits());
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        t.record("flow formula equals linear system", tal[e] == sys.E[e], at(where, "edge '" + net.edges[e].id + "'"));
    auto sources = source_base(net);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        bool zero = true;
        for (int i : sources) zero = zero && sys.E[e][i - 1] == 0;
        t.record("components at source labels vanish", zero, at(where, "edge '" + net.edges[e].id + "'"));
    }
    for (int k = 0; k < 20; ++k) {
        Network other = net;
        other.gauge = gen::random_gauge(rng);
        if (other.gauge == net.gauge || !validate(other).ok) continue;
        auto E2 = evec::solve_system(other).E;
        for (int i : sources) {
            int e = net.boundary_edge(i);
            t.record("source edge vectors ignore the gauge", E2[e] == sys.E[e], at(where, "source " + std::to_string(i)));
        }
        break;
    }
}

void truncated_checks(const Network& net, int depth, Tally& t, const std::string& where) {
    auto E = evec::solve_system(net).E;
    auto tr = evec::truncated_all(net, depth);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (!tr[e].bounded) {
            t.skip("truncated sum within its bound");
            continue;
        }
        bool ok = true;
        for (int c = 0; c < net.n; ++c) ok = ok && abs(E[e][c] - tr[e].value[c]) <= tr[e].bound[c];
        t.record("truncated sum within its bound", ok, at(where, "edge '" + net.edges[e].id + "'"));
    }
}

const std::vector<std::string>& transform_kinds() {
    static const std::vector<std::string> kinds{"rotate_gauge",  "weight_gauge",    "move_vertex",
                                                "reverse_path",  "reverse_cycle",   "square_move",
                                                "flip_move",     "bivalent",        "reduce_parallel",
                                                "reduce_dipole", "reduce_leaf"};
    return kinds;
}

std::vector<xform::Report> random_transform(const std::string& kind, const Network& net, Rng& rng) {
    using R = std::vector<xform::Report>;
    if (kind == "rotate_gauge") {
        for (int k = 0; k < 30; ++k) {
            Network other = net;
            other.gauge = gen::random_gauge(rng);
            if (other.gauge == net.gauge || !validate(other).ok) continue;
            try {
                return {xform::rotate_gauge(net, other.gauge)};
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Genericity) throw;
            }
        }
        return {};
    }
    if (kind == "weight_gauge") {
        std::map<std::string, Q> g;
        for (const auto& v : net.vertices)
            if (!v.boundary) g[v.id] = gen::random_weight(rng, false);
        return {xform::weight_gauge(net, g)};
    }
    if (kind == "move_vertex") {
        std::vector<int> internal;
        for (std::size_t v = 0; v < net.vertices.size(); ++v)
            if (!net.vertices[v].boundary) internal.push_back(static_cast<int>(v));
        if (internal.empty()) return {};
        for (int k = 0; k < 30; ++k) {
            const Vertex& v = net.vertices[internal[rng() % internal.size()]];
            geom::Dir d{Q(uniform(rng, -4, 4), 8 << (k / 6)), Q(uniform(rng, -4, 4), 8 << (k / 6))};
            geom::Point to = v.pos + d;
            if (to.y <= 0 || geom::is_zero(d)) continue;
            try {
                return {xform::move_vertex(net, v.id, to)};
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Internal) throw;
            }
        }
        return {};
    }
    if (kind == "reverse_path") {
        auto p = xform::random_boundary_path(net, rng);
        if (!p) return {};
        return xform::reverse_path_normalized(net, xform::edge_ids(net, *p));
    }
    if (kind == "reverse_cycle") {
        auto cs = flows::simple_cycles(net, flows::default_limits());
        if (cs.empty()) return {};
        return {xform::reverse_cycle(net, xform::edge_ids(net, cs[rng() % cs.size()]))};
    }
    if (kind == "bivalent") {
        const Edge& e = net.edges[rng() % net.edges.size()];
        std::size_t i = rng() % (e.poly.size() - 1);
        const auto &a = e.poly[i], &b = e.poly[i + 1];
        geom::Dir d = b - a;
        geom::Point p = a + Q(uniform(rng, 1, 3), 4) * d;
        bool bent = rng() % 2;
        if (bent) p = p + Q(1, 16 * uniform(rng, 1, 4)) * geom::Dir{-d.dy, d.dx};
        auto ins = xform::insert_bivalent(net, e.id, p, rng() % 2 ? Color::White : Color::Black);
        auto rem = xform::remove_bivalent(ins.after, ins.after.vertices.back().id);
        if (bent) return {ins, rem};
        auto E0 = evec::solve_system(net).E, E1 = evec::solve_system(rem.after).E;
        bool same = rem.after.edges.size() == net.edges.size();
        for (std::size_t k = 0; same && k < net.edges.size(); ++k)
            same = rem.after.has_edge(net.edges[k].id) && E1[rem.after.eid(net.edges[k].id)] == E0[k];
        rem.checks.push_back({"removal after insertion restores every vector", same, ""});
        return {ins, rem};
    }
    std::optional<gen::Instance> inst;
    if (kind == "square_move") inst = gen::square_instance(net, rng);
    if (kind == "flip_move") inst = gen::flip_instance(net, rng);
    if (kind == "reduce_parallel") inst = gen::lens_instance(net, rng);
    if (kind == "reduce_dipole") inst = gen::dipole_instance(net, rng);
    if (kind == "reduce_leaf") inst = gen::leaf_instance(net, rng);
    if (!inst) {
        if (kind == "square_move" || kind == "flip_move" || kind == "reduce_parallel" || kind == "reduce_dipole" ||
            kind == "reduce_leaf")
            return {};
        throw input_error("unknown transform kind '" + kind + "'");
    }
    const auto& a = inst->args;
    if (kind == "square_move") return R{xform::square_move(inst->net, a[0])};
    if (kind == "flip_move") return R{xform::flip_move(inst->net, a[0])};
    if (kind == "reduce_parallel") return R{xform::reduce_parallel(inst->net, a[0], a[1])};
    if (kind == "reduce_dipole") return R{xform::reduce_dipole(inst->net, a[0])};
    return R{xform::reduce_leaf(inst->net, a[0])};
}

bool transform_checks(const std::string& kind, const Network& net, Rng& rng, Tally& t, const std::string& where) {
    auto reps = random_transform(kind, net, rng);
    if (reps.empty()) return false;
    for (const auto& r : reps) {
        std::string bad;
        for (const auto& e : r.edges)
            if (!e.ok && bad.empty()) bad = "edge '" + e.edge + "'";
        t.record(kind + ": predicted vectors equal recomputed (" + r.op + ")", bad.empty(), at(where, bad));
        for (const auto& c : r.checks) t.record(kind + ": " + c.name + " (" + r.op + ")", c.ok, at(where, c.detail));
    }
    return true;
}

void appendix_checks(const Network& net, Rng& rng, long routes, Tally& t, const std::string& where) {
    auto it = xform::check_vertex_identities(net, routes, rng);
    for (const auto& [name, n] : it.checked) {
        t.checked[name] += n;
        t.failed[name] += it.violated[name];
    }
    for (const auto& x : it.examples)
        if (t.examples.size() < 10) t.examples.push_back(x + " @ " + where);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"geometry", "flows", "vectors", "transforms", "appendix"};
    return names;
}

Tally run_suite(const std::string& suite, const SuiteOptions& opt) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw input_error("unknown suite '" + suite + "'");
    Rng rng(opt.seed);
    Tally t;
    if (suite == "appendix") {
        xform::IdentityTally dir;
        xform::check_direction_identities(rng, opt.trials * 20, dir);
        for (const auto& [name, n] : dir.checked) {
            t.checked[name] += n;
            t.failed[name] += dir.violated[name];
        }
        for (const auto& x : dir.examples) t.examples.push_back(x);
    }
    for (long k = 0; k < opt.trials; ++k) {
        Network net = opt.net ? *opt.net : gen::random_network(rng);
        std::string where = "trial " + std::to_string(k);
        try {
            if (suite == "geometry") geometry_checks(net, t, where);
            if (suite == "flows") {
                flow_checks(net, t, where);
                source_row_checks(net, t, where);
            }
            if (suite == "vectors") {
                vector_checks(net, rng, t, where);
                gen::Options small;
                small.small_weights = true;
                truncated_checks(opt.net ? *opt.net : gen::random_network(rng, small), 24, t, where);
            }
            if (suite == "transforms")
                for (const auto& kind : transform_kinds()) {
                    try {
                        if (!transform_checks(kind, net, rng, t, where)) t.skip(kind);
                    } catch (const Error& e) {
                        if (e.kind() == ErrorKind::Internal) throw;
                        t.skip(kind);
                    }
                }
            if (suite == "appendix") appendix_checks(net, rng, 4, t, where);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Resource) throw;
            t.skip(suite + " (size cap)");
        }
    }
    return t;
}

}  // namespace plabic::checks
