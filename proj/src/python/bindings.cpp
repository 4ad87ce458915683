#include "plabic/api.hpp"
#include "plabic/error.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using plabic::api::Json;

namespace {

Json parse_opt(const std::optional<std::string>& text) {
    return text ? plabic::io::parse_text(*text) : Json::object();
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact edge vectors on directed plabic networks (JSON string interface)";

    static py::exception<plabic::Error> base(m, "PlabicError", PyExc_ValueError);
    static py::exception<plabic::Error> input(m, "InputError", base.ptr());
    static py::exception<plabic::Error> genericity(m, "GenericityError", base.ptr());
    static py::exception<plabic::Error> resource(m, "ResourceError", base.ptr());
    static py::exception<plabic::Error> parse(m, "ParseError", base.ptr());
    static py::exception<plabic::Error> internal(m, "InternalError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const plabic::Error& e) {
            switch (e.kind()) {
                case plabic::ErrorKind::Input: PyErr_SetString(input.ptr(), e.what()); break;
                case plabic::ErrorKind::Genericity: PyErr_SetString(genericity.ptr(), e.what()); break;
                case plabic::ErrorKind::Resource: PyErr_SetString(resource.ptr(), e.what()); break;
                case plabic::ErrorKind::Parse: PyErr_SetString(parse.ptr(), e.what()); break;
                case plabic::ErrorKind::Internal: PyErr_SetString(internal.ptr(), e.what()); break;
            }
        }
    });

    m.def("validate", [](const std::string& net) {
        return dump(plabic::api::validate_report(plabic::io::read_network(net)));
    }, py::arg("network"));

    m.def("vectors",
          [](const std::string& net, const std::string& method, std::optional<int> depth,
             const std::optional<std::string>& bc, std::optional<std::size_t> max_flows) {
              std::optional<Json> b;
              if (bc) b = plabic::io::parse_text(*bc);
              return dump(plabic::api::vectors(plabic::io::read_network(net), method, depth, b, max_flows));
          },
          py::arg("network"), py::arg("method") = "solve", py::arg("depth") = py::none(),
          py::arg("bc") = py::none(), py::arg("max_flows") = py::none());

    m.def("measure", [](const std::string& net) {
        return dump(plabic::api::measure(plabic::io::read_network(net)));
    }, py::arg("network"));

    m.def("faces", [](const std::string& net) {
        return dump(plabic::api::faces_json(plabic::io::read_network(net)));
    }, py::arg("network"));

    m.def("flows",
          [](const std::string& net, std::optional<std::size_t> max_flows) {
              return dump(plabic::api::conservative_flows(plabic::io::read_network(net), max_flows));
          },
          py::arg("network"), py::arg("max_flows") = py::none());

    m.def("edge_flows",
          [](const std::string& net, const std::string& edge, int sink, std::optional<std::size_t> max_flows) {
              return dump(plabic::api::edge_flows(plabic::io::read_network(net), edge, sink, max_flows));
          },
          py::arg("network"), py::arg("edge"), py::arg("sink"), py::arg("max_flows") = py::none());

    m.def("transform", [](const std::string& net, const std::string& spec) {
        return dump(plabic::api::transform(plabic::io::read_network(net), plabic::io::parse_text(spec)));
    }, py::arg("network"), py::arg("spec"));

    m.def("check",
          [](const std::string& suite, long trials, std::uint64_t seed, const std::optional<std::string>& net) {
              std::optional<plabic::Network> n;
              if (net) n = plabic::io::read_network(*net);
              return dump(plabic::api::check(suite, trials, seed, n));
          },
          py::arg("suite") = "all", py::arg("trials") = 100, py::arg("seed") = 1, py::arg("network") = py::none());

    m.def("export", [](const std::string& net, const std::string& format, bool with_vectors) {
        return plabic::api::export_network(plabic::io::read_network(net), format, with_vectors);
    }, py::arg("network"), py::arg("format") = "svg", py::arg("with_vectors") = false);

    m.def("fixture", [](const std::string& name, const std::optional<std::string>& params) {
        return plabic::io::write_network(plabic::api::fixture(name, parse_opt(params)));
    }, py::arg("name"), py::arg("params") = py::none());

    m.def("random", [](std::uint64_t seed, const std::optional<std::string>& options) {
        return plabic::io::write_network(plabic::api::random_network(seed, parse_opt(options)));
    }, py::arg("seed"), py::arg("options") = py::none());
}
