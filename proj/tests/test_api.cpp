#include "plabic/api.hpp"
#include "plabic/export.hpp"
#include "plabic/fixtures.hpp"
#include "plabic/generate.hpp"

#include "support.hpp"

#include <regex>

using namespace plabic;
using namespace plabic::testing;
using api::Json;

namespace {

// Opening and closing tags balance, ignoring self-closing ones.
bool balanced_tags(const std::string& xml) {
    std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
    std::vector<std::string> stack;
    for (auto it = std::sregex_iterator(xml.begin(), xml.end(), tag); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (m[3] == "/") continue;
        if (m[1] == "/") {
            if (stack.empty() || stack.back() != m[2]) return false;
            stack.pop_back();
        } else {
            stack.push_back(m[2]);
        }
    }
    return stack.empty();
}

}  // namespace

TEST(Export, DotKeepsTopology) {
    gen::Rng rng(61);
    for (int k = 0; k < 10; ++k) {
        Network net = gen::random_network(rng);
        Network back = exporter::topology_from_dot(exporter::to_dot(net));
        EXPECT_EQ(back.n, net.n);
        ASSERT_EQ(back.vertices.size(), net.vertices.size());
        ASSERT_EQ(back.edges.size(), net.edges.size());
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            const Edge& b = back.edges[back.eid(net.edges[e].id)];
            EXPECT_EQ(b.tail, net.edges[e].tail);
            EXPECT_EQ(b.head, net.edges[e].head);
            EXPECT_EQ(b.weight, net.edges[e].weight);
        }
        for (const auto& v : net.vertices) {
            const Vertex& b = back.vertices[back.vid(v.id)];
            EXPECT_EQ(b.boundary, v.boundary);
            EXPECT_EQ(b.color, v.color);
            EXPECT_EQ(b.label, v.label);
        }
    }
}

TEST(Export, SvgIsWellFormed) {
    Network net = fixtures::null_example(1, 2);
    std::string svg = api::export_network(net, "svg", true);
    EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
    EXPECT_TRUE(balanced_tags(svg));
    EXPECT_NE(svg.find("u2"), std::string::npos);
    EXPECT_NE(svg.find("b1"), std::string::npos);
    EXPECT_EQ(error_kind([&] { api::export_network(net, "png", false); }), ErrorKind::Input);
}

TEST(Api, VectorsAgreeAcrossMethods) {
    Network net = fixtures::null_example(1, 2);
    Json a = api::vectors(net, "solve"), b = api::vectors(net, "talaska");
    EXPECT_EQ(a["vectors"], b["vectors"]);
    EXPECT_EQ(a["detM"], "4");
    EXPECT_EQ(a["vectors"]["u"], Json::array({"1/4", "0"}));
    EXPECT_EQ(error_kind([&] { api::vectors(net, "truncate"); }), ErrorKind::Input);
    Json t = api::vectors(fixtures::null_example(Q(1, 3), Q(1, 3)), "truncate", 20);
    EXPECT_TRUE(t["bounds"]["u"].is_array());
}

TEST(Api, CustomBoundaryConditions) {
    Network net = fixtures::null_example(1, 2);
    Json bc = Json::parse(R"({"1": ["2", "3"]})");
    Json v = api::vectors(net, "solve", std::nullopt, bc);
    EXPECT_EQ(v["vectors"]["u"], Json::array({"1/2", "3/4"}));
}

TEST(Api, MeasureNullExample) {
    Json m = api::measure(fixtures::null_example(1, 2));
    EXPECT_EQ(m["A"], Json::parse(R"([["3/4", "1"]])"));
    EXPECT_EQ(m["pivots"], Json::array({2}));
    EXPECT_TRUE(m["tnn"].get<bool>());
    EXPECT_TRUE(m["null_edges"].empty());
    Json eq = api::measure(fixtures::null_example(1, 1));
    EXPECT_EQ(eq["null_edges"], Json::array({"v", "u", "w"}));
}

TEST(Api, TransformSpecs) {
    Network net = fixtures::null_example(1, 2);
    Json r = api::transform(net, Json::parse(R"({"op": "reverse-path", "i0": 2, "j0": 1})"));
    EXPECT_TRUE(r["ok"].get<bool>());
    Json last = r["steps"].back();
    for (const auto& e : last["edges"])
        if (e["edge"] == "up") {
            EXPECT_EQ(e["recomputed"], Json::array({"0", "5/3"}));
        }
    Json w = api::transform(net, Json::parse(R"({"op": "weight_gauge", "t": {"V": "3", "A": "1/2"}})"));
    EXPECT_TRUE(w["ok"].get<bool>());
    EXPECT_EQ(error_kind([&] { api::transform(net, Json::parse(R"({"op": "spin"})")); }), ErrorKind::Input);
    EXPECT_EQ(error_kind([&] { api::transform(net, Json::parse(R"({"op": "square_move"})")); }), ErrorKind::Input);
    EXPECT_EQ(error_kind([&] { api::transform(net, Json::parse(R"({"op": "square_move", "edge": "u"})")); }),
              ErrorKind::Input);
}

TEST(Api, FlowsAndFaces) {
    Network net = fixtures::null_example(1, 2);
    Json f = api::conservative_flows(net);
    EXPECT_EQ(f["total"], "4");
    EXPECT_EQ(f["flows"].size(), 3u);
    EXPECT_EQ(api::faces_json(net).size(), 5u);
    Json ef = api::edge_flows(net, "u2", 1);
    EXPECT_EQ(ef.size(), 3u);
}

TEST(Api, ChecksOnRandomNetworks) {
    Json r = api::check("all", 5, 3, std::nullopt);
    EXPECT_TRUE(r["ok"].get<bool>()) << r.dump(2);
    EXPECT_EQ(r["suites"].size(), 5u);
    EXPECT_EQ(error_kind([] { api::check("nope", 1, 1, std::nullopt); }), ErrorKind::Input);
}

TEST(Api, FixturesAndRandom) {
    Network n = api::fixture("null", Json::parse(R"({"p": "1/2", "q": "3"})"));
    EXPECT_EQ(n.edges[n.eid("up")].weight, Q(1, 2));
    EXPECT_EQ(error_kind([] { api::fixture("missing", Json::object()); }), ErrorKind::Input);
    Network a = api::random_network(9, Json::object()), b = api::random_network(9, Json::object());
    EXPECT_EQ(io::write_network(a), io::write_network(b));
}
