#include "plabic/api.hpp"
#include "plabic/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace plabic;
using api::Json;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Resource: return 2;
        case ErrorKind::Parse: return 3;
        default: return 1;
    }
}

Network load(const std::string& path) { return io::read_network(io::read_file(path)); }

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        io::write_file(out, text);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Json pair(const std::string& s, const std::string& what) {
    auto p = split(s, ',');
    if (p.size() != 2) throw input_error(what + " must be 'x,y'");
    return Json::array({p[0], p[1]});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge vectors, flows and transformations of plabic networks"};
    app.require_subcommand(1);

    std::string file, out, format = "json", method = "solve", bc_file, suite = "all", op;
    int depth = -1;
    std::size_t max_flows = 0;
    long trials = 50;
    std::uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "Check a network file and print Euler counts");
    validate->add_option("file", file, "network JSON")->required();

    auto* vectors = app.add_subcommand("vectors", "Edge vectors of every edge");
    vectors->add_option("file", file, "network JSON")->required();
    vectors->add_option("--method", method, "talaska | solve | truncate")
        ->check(CLI::IsMember({"talaska", "solve", "truncate"}));
    vectors->add_option("--depth", depth, "walk length cap for truncate");
    vectors->add_option("--bc", bc_file, "boundary conditions JSON keyed by sink label");
    vectors->add_option("--max-flows", max_flows, "cap on enumerated flows");
    vectors->add_option("--out", out, "write output here");

    auto* measure = app.add_subcommand("measure", "Boundary matrix, minors, matroid and null edges");
    measure->add_option("file", file, "network JSON")->required();

    auto* faces = app.add_subcommand("faces", "Faces with their edge sides and weights");
    faces->add_option("file", file, "network JSON")->required();

    auto* flows = app.add_subcommand("flows", "Conservative flows and their total");
    flows->add_option("file", file, "network JSON")->required();
    flows->add_option("--max-flows", max_flows, "cap on enumerated flows");

    std::string dir, vertex, to, edges, edge, at, color, gauge, spec;
    int i0 = 0, j0 = 0;
    auto* transform = app.add_subcommand("transform", "Apply a transformation and verify its predicted vectors");
    transform->add_option("file", file, "network JSON")->required();
    transform->add_option("op", op,
                          "rotate-gauge | weight-gauge | move-vertex | reverse-path | reverse-cycle | reorient | "
                          "square-move | flip-move | insert-bivalent | remove-bivalent | reduce-parallel | "
                          "reduce-dipole | reduce-leaf");
    transform->add_option("--spec", spec, "full transform spec as JSON (instead of op and flags)");
    transform->add_option("--dir", dir, "new gauge direction 'dx,dy'");
    transform->add_option("--vertex", vertex, "vertex id");
    transform->add_option("--to", to, "target point 'x,y'");
    transform->add_option("--edges", edges, "comma separated edge ids");
    transform->add_option("--edge", edge, "edge id");
    transform->add_option("--at", at, "point 'x,y' on the edge");
    transform->add_option("--color", color, "white | black");
    transform->add_option("--gauge", gauge, "weight gauge 'V=t,W=s'");
    transform->add_option("--i0", i0, "source label of the path");
    transform->add_option("--j0", j0, "sink label of the path");
    transform->add_option("--out", out, "write the transformed network here");

    auto* check = app.add_subcommand("check", "Run invariant suites on a file or on random networks");
    check->add_option("file", file, "network JSON (random networks when omitted)");
    check->add_option("--suite", suite, "geometry | flows | vectors | transforms | appendix | all")
        ->check(CLI::IsMember({"geometry", "flows", "vectors", "transforms", "appendix", "all"}));
    check->add_option("--trials", trials, "number of trials");
    check->add_option("--seed", seed, "random seed");

    bool with_vectors = false;
    auto* exp = app.add_subcommand("export", "DOT or SVG drawing of a network");
    exp->add_option("file", file, "network JSON")->required();
    exp->add_option("--format", format, "dot | svg")->check(CLI::IsMember({"dot", "svg"}));
    exp->add_flag("--vectors", with_vectors, "label edges with their vectors (svg)");
    exp->add_option("--out", out, "write output here");

    std::string fixture_name, params = "{}";
    auto* fixture = app.add_subcommand("fixture", "Write a built-in example network");
    fixture->add_option("name", fixture_name, "null | null_free | single_path")->required();
    fixture->add_option("--params", params, "JSON object with p, q, s");
    fixture->add_option("--out", out, "write output here");

    auto* random = app.add_subcommand("random", "Write a random valid network");
    random->add_option("--seed", seed, "random seed");
    random->add_option("--params", params, "JSON object with max_edges, small_weights, max_interior, max_sides");
    random->add_option("--out", out, "write output here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        auto flows_cap = [&]() -> std::optional<std::size_t> {
            if (max_flows) return max_flows;
            return std::nullopt;
        };
        if (validate->parsed()) {
            Json rep = api::validate_report(load(file));
            std::cout << rep.dump(2) << "\n";
            if (!rep["ok"].get<bool>()) {
                for (const auto& v : rep["violations"]) std::cerr << "invalid: " << v.get<std::string>() << "\n";
                return 1;
            }
        } else if (vectors->parsed()) {
            std::optional<Json> bc;
            if (!bc_file.empty()) bc = io::parse_text(io::read_file(bc_file));
            std::optional<int> d;
            if (depth >= 0) d = depth;
            emit(api::vectors(load(file), method, d, bc, flows_cap()).dump(2) + "\n", out);
        } else if (measure->parsed()) {
            std::cout << api::measure(load(file)).dump(2) << "\n";
        } else if (faces->parsed()) {
            std::cout << api::faces_json(load(file)).dump(2) << "\n";
        } else if (flows->parsed()) {
            std::cout << api::conservative_flows(load(file), flows_cap()).dump(2) << "\n";
        } else if (transform->parsed()) {
            Json s;
            if (!spec.empty()) {
                s = io::parse_text(spec);
            } else {
                if (op.empty()) throw input_error("transform needs an op or --spec");
                s["op"] = op;
                if (!dir.empty()) s["dir"] = pair(dir, "--dir");
                if (!vertex.empty()) s["vertex"] = vertex;
                if (!to.empty()) s["to"] = pair(to, "--to");
                if (!edges.empty()) s["edges"] = split(edges, ',');
                if (!edge.empty()) s["edge"] = edge;
                if (!at.empty()) s["at"] = pair(at, "--at");
                if (!color.empty()) s["color"] = color;
                if (i0) s["i0"] = i0;
                if (j0) s["j0"] = j0;
                if (!gauge.empty()) {
                    Json t = Json::object();
                    for (const auto& kv : split(gauge, ',')) {
                        auto eq = kv.find('=');
                        if (eq == std::string::npos) throw input_error("--gauge entries must be 'vertex=t'");
                        t[kv.substr(0, eq)] = kv.substr(eq + 1);
                    }
                    s["t"] = t;
                }
            }
            Json r = api::transform(load(file), s);
            if (!out.empty()) io::write_file(out, r["network"].dump(2) + "\n");
            Json shown = r;
            if (!out.empty()) shown.erase("network");
            std::cout << shown.dump(2) << "\n";
            if (!r["ok"].get<bool>()) return 1;
        } else if (check->parsed()) {
            std::optional<Network> net;
            if (!file.empty()) net = load(file);
            Json r = api::check(suite, trials, seed, net);
            std::cout << r.dump(2) << "\n";
            if (!r["ok"].get<bool>()) return 1;
        } else if (exp->parsed()) {
            emit(api::export_network(load(file), format, with_vectors), out);
        } else if (fixture->parsed()) {
            emit(io::write_network(api::fixture(fixture_name, io::parse_text(params))), out);
        } else if (random->parsed()) {
            emit(io::write_network(api::random_network(seed, io::parse_text(params))), out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
