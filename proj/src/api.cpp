#include "plabic/api.hpp"

#include "plabic/checks.hpp"
#include "plabic/error.hpp"
#include "plabic/evec.hpp"
#include "plabic/export.hpp"
#include "plabic/fixtures.hpp"
#include "plabic/generate.hpp"
#include "plabic/xform.hpp"

#include <algorithm>

namespace plabic::api {

namespace {

Q rat(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error(what + ": expected a rational string");
}

const Json& arg(const Json& spec, const std::string& key) {
    auto it = spec.find(key);
    if (it == spec.end()) throw input_error("transform '" + spec.value("op", "") + "' needs '" + key + "'");
    return *it;
}

std::string str(const Json& spec, const std::string& key) {
    const Json& j = arg(spec, key);
    if (!j.is_string()) throw input_error("'" + key + "' must be a string");
    return j.get<std::string>();
}

std::vector<std::string> strs(const Json& spec, const std::string& key) {
    const Json& j = arg(spec, key);
    if (!j.is_array()) throw input_error("'" + key + "' must be a list of ids");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(x.get<std::string>());
    return out;
}

geom::Point point(const Json& spec, const std::string& key) {
    const Json& j = arg(spec, key);
    if (!j.is_array() || j.size() != 2) throw input_error("'" + key + "' must be a pair of rationals");
    return {rat(j[0], key), rat(j[1], key)};
}

Color color(const std::string& c) {
    if (c == "white") return Color::White;
    if (c == "black") return Color::Black;
    throw input_error("color must be 'white' or 'black'");
}

flows::Limits limits(std::optional<std::size_t> max_flows) {
    auto lim = flows::default_limits();
    if (max_flows) lim.max_flows = *max_flows;
    return lim;
}

Json edge_block(const Network& net, const std::vector<QVec>& E) {
    Json out = Json::object();
    for (std::size_t e = 0; e < net.edges.size(); ++e) out[net.edges[e].id] = io::vec_json(E[e]);
    return out;
}

Json ids_json(const Network& net, const std::vector<int>& edges) {
    Json a = Json::array();
    for (int e : edges) a.push_back(net.edges[e].id);
    return a;
}

std::string normalize_op(std::string op) {
    std::replace(op.begin(), op.end(), '-', '_');
    return op;
}

}  // namespace

Json validate_report(const Network& net) {
    auto rep = validate(net);
    Json j;
    j["ok"] = rep.ok;
    j["violations"] = rep.violations;
    j["warnings"] = rep.warnings;
    const Counts& c = rep.counts;
    j["counts"] = {{"n", c.n},   {"k", c.k},   {"g", c.g},   {"t_W", c.tW},       {"t_B", c.tB},
                   {"d_W", c.dW}, {"d_B", c.dB}, {"n_I", c.nI}, {"internal", c.internal}, {"faces", c.faces}};
    return j;
}

Json vectors(const Network& net, const std::string& method, std::optional<int> depth, const std::optional<Json>& bc_json,
             std::optional<std::size_t> max_flows) {
    require_valid(net);
    evec::BC bc = bc_json ? io::bc_from_json(*bc_json, net.n) : evec::canonical_bc(net);
    Json j;
    j["method"] = method;
    if (method == "solve") {
        auto sys = evec::solve_system(net, bc);
        j["vectors"] = edge_block(net, sys.E);
        j["detM"] = to_string(sys.det);
    } else if (method == "talaska") {
        auto lim = limits(max_flows);
        j["vectors"] = edge_block(net, evec::talaska_all(net, bc, lim));
        j["detM"] = to_string(flows::conservative_total(flows::enum_conservative(net, lim)));
    } else if (method == "truncate") {
        if (!depth) throw input_error("method 'truncate' needs a depth");
        if (bc_json) throw input_error("method 'truncate' uses the canonical boundary conditions");
        auto tr = evec::truncated_all(net, *depth);
        Json vecs = Json::object(), bounds = Json::object();
        std::string warning;
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            vecs[net.edges[e].id] = io::vec_json(tr[e].value);
            bounds[net.edges[e].id] = tr[e].bounded ? io::vec_json(tr[e].bound) : Json(nullptr);
            if (warning.empty()) warning = tr[e].warning;
        }
        j["depth"] = *depth;
        j["vectors"] = vecs;
        j["bounds"] = bounds;
        if (!warning.empty()) j["warning"] = warning;
    } else {
        throw input_error("unknown method '" + method + "' (talaska, solve, truncate)");
    }
    return j;
}

Json measure(const Network& net) {
    require_valid(net);
    auto sys = evec::solve_system(net);
    auto bm = evec::boundary_matrix(net, sys.E);
    auto tnn = evec::tnn_check(bm, net.n);
    Json j;
    j["pivots"] = bm.pivots;
    Json rows = Json::array();
    for (const auto& r : bm.A) rows.push_back(io::vec_json(r));
    j["A"] = rows;
    Json minors = Json::array();
    for (const auto& [set, value] : tnn.minors) minors.push_back({{"columns", set}, {"value", to_string(value)}});
    j["minors"] = minors;
    j["matroid"] = tnn.matroid;
    j["tnn"] = tnn.tnn;
    j["null_edges"] = ids_json(net, evec::null_edges(net, sys.E));
    j["detM"] = to_string(sys.det);
    return j;
}

Json faces_json(const Network& net) {
    require_valid(net);
    Json out = Json::array();
    for (const auto& f : faces(net)) {
        Json sides = Json::array();
        for (const auto& s : f.sides) sides.push_back({{"edge", net.edges[s.edge].id}, {"forward", s.forward}});
        out.push_back({{"sides", sides},
                       {"touches_boundary", f.touches_boundary},
                       {"weight", to_string(face_weight(net, f))}});
    }
    return out;
}

Json conservative_flows(const Network& net, std::optional<std::size_t> max_flows) {
    require_valid(net);
    auto cf = flows::enum_conservative(net, limits(max_flows));
    Json out;
    Json list = Json::array();
    for (const auto& c : cf) list.push_back({{"edges", ids_json(net, c.edges)}, {"weight", to_string(c.weight)}});
    out["flows"] = list;
    out["total"] = to_string(flows::conservative_total(cf));
    return out;
}

Json edge_flows(const Network& net, const std::string& edge, int sink, std::optional<std::size_t> max_flows) {
    require_valid(net);
    auto fl = flows::enum_edge_flows(net, net.eid(edge), sink, limits(max_flows));
    Json out = Json::array();
    for (const auto& f : fl)
        out.push_back({{"path", ids_json(net, f.path)},
                       {"cycles", ids_json(net, f.cycle_edges)},
                       {"weight", to_string(f.stats.weight)},
                       {"wind", f.stats.wind},
                       {"int", f.stats.intc}});
    return out;
}

Json transform(const Network& net, const Json& spec) {
    if (!spec.is_object()) throw input_error("transform spec must be an object");
    const std::string op = normalize_op(str(spec, "op"));
    std::vector<xform::Report> steps;
    if (op == "rotate_gauge") {
        auto p = point(spec, "dir");
        steps.push_back(xform::rotate_gauge(net, {p.x, p.y}));
    } else if (op == "weight_gauge") {
        const Json& t = arg(spec, "t");
        if (!t.is_object()) throw input_error("'t' must map vertex ids to rationals");
        std::map<std::string, Q> g;
        for (auto it = t.begin(); it != t.end(); ++it) g[it.key()] = rat(it.value(), "t");
        steps.push_back(xform::weight_gauge(net, g));
    } else if (op == "move_vertex") {
        steps.push_back(xform::move_vertex(net, str(spec, "vertex"), point(spec, "to")));
    } else if (op == "reverse_path") {
        std::vector<std::string> path;
        if (spec.contains("edges")) {
            path = strs(spec, "edges");
        } else {
            int i0 = arg(spec, "i0").get<int>(), j0 = arg(spec, "j0").get<int>();
            auto p = xform::boundary_path(net, i0, j0);
            if (!p) throw input_error("no directed path from source " + std::to_string(i0) + " to sink " + std::to_string(j0));
            path = xform::edge_ids(net, *p);
        }
        steps = xform::reverse_path_normalized(net, path);
    } else if (op == "reverse_cycle") {
        steps.push_back(xform::reverse_cycle(net, strs(spec, "edges")));
    } else if (op == "reorient") {
        steps = xform::reorient(net, strs(spec, "edges"));
    } else if (op == "square_move") {
        steps.push_back(xform::square_move(net, str(spec, "edge")));
    } else if (op == "flip_move") {
        steps.push_back(xform::flip_move(net, str(spec, "edge")));
    } else if (op == "insert_bivalent") {
        steps.push_back(xform::insert_bivalent(net, str(spec, "edge"), point(spec, "at"), color(str(spec, "color"))));
    } else if (op == "remove_bivalent") {
        steps.push_back(xform::remove_bivalent(net, str(spec, "vertex")));
    } else if (op == "reduce_parallel") {
        auto e = strs(spec, "edges");
        if (e.size() != 2) throw input_error("reduce_parallel needs two edges");
        steps.push_back(xform::reduce_parallel(net, e[0], e[1]));
    } else if (op == "reduce_dipole") {
        steps.push_back(xform::reduce_dipole(net, str(spec, "edge")));
    } else if (op == "reduce_leaf") {
        steps.push_back(xform::reduce_leaf(net, str(spec, "vertex")));
    } else {
        throw input_error("unknown transform '" + op + "'");
    }
    Json j;
    bool ok = true;
    Json reps = Json::array();
    for (const auto& r : steps) {
        ok = ok && r.ok();
        reps.push_back(xform::report_json(r));
    }
    j["ok"] = ok;
    j["steps"] = reps;
    j["network"] = io::to_json(steps.empty() ? net : steps.back().after);
    return j;
}

Json check(const std::string& suite, long trials, std::uint64_t seed, const std::optional<Network>& net) {
    if (net) require_valid(*net);
    std::vector<std::string> suites;
    if (suite == "all")
        suites = checks::suite_names();
    else
        suites = {suite};
    Json j;
    bool ok = true;
    Json list = Json::array();
    for (const auto& s : suites) {
        checks::SuiteOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        opt.net = net;
        auto t = checks::run_suite(s, opt);
        ok = ok && t.ok();
        list.push_back(checks::tally_json(s, t));
    }
    j["ok"] = ok;
    j["seed"] = seed;
    j["trials"] = trials;
    j["suites"] = list;
    return j;
}

std::string export_network(const Network& net, const std::string& format, bool with_vectors) {
    if (format == "dot") return exporter::to_dot(net);
    if (format == "svg") {
        exporter::SvgOptions opt;
        if (with_vectors) opt.vectors = evec::solve_system(net).E;
        return exporter::to_svg(net, opt);
    }
    throw input_error("unknown export format '" + format + "' (dot, svg)");
}

Network fixture(const std::string& name, const Json& params) {
    auto get = [&](const char* k, const Q& dflt) { return params.contains(k) ? rat(params[k], k) : dflt; };
    Q p = get("p", 1), q = get("q", 2), s = get("s", 1);
    if (name == "null") return fixtures::null_example(p, q);
    if (name == "null_free") return fixtures::null_free_example(p, q, s);
    if (name == "single_path") return fixtures::single_path();
    throw input_error("unknown fixture '" + name + "' (null, null_free, single_path)");
}

Network random_network(std::uint64_t seed, const Json& options) {
    gen::Rng rng(seed);
    gen::Options opt;
    if (options.contains("max_edges")) opt.max_edges = options["max_edges"].get<std::size_t>();
    if (options.contains("small_weights")) opt.small_weights = options["small_weights"].get<bool>();
    if (options.contains("max_interior")) opt.max_interior = options["max_interior"].get<int>();
    if (options.contains("max_sides")) opt.max_sides = options["max_sides"].get<int>();
    return gen::random_network(rng, opt);
}

}  // namespace plabic::api
