#include "plabic/evec.hpp"
#include "plabic/fixtures.hpp"
#include "plabic/generate.hpp"
#include "plabic/io.hpp"
#include "plabic/network.hpp"
#include "plabic/xform.hpp"

#include "support.hpp"

using namespace plabic;
using namespace plabic::testing;

namespace {

void reverse_edge(Network& net, const std::string& id) {
    Edge& e = net.edges[net.eid(id)];
    std::swap(e.tail, e.head);
    std::reverse(e.poly.begin(), e.poly.end());
    net.index();
}

std::map<std::string, Q> random_gauge_map(const Network& net, gen::Rng& rng) {
    std::map<std::string, Q> t;
    for (const auto& v : net.vertices)
        if (!v.boundary) t[v.id] = gen::random_weight(rng, false);
    return t;
}

}  // namespace

TEST(Validate, NullExampleIsOneByTwo) {
    auto rep = validate(fixtures::null_example(1, 2));
    ASSERT_TRUE(rep.ok) << rep.violations.front();
    EXPECT_EQ(rep.counts.k, 1);
    EXPECT_EQ(rep.counts.n, 2);
}

TEST(Validate, SinglePathThroughBivalentVertex) {
    auto rep = validate(fixtures::single_path());
    ASSERT_TRUE(rep.ok);
    EXPECT_EQ(rep.counts.k, 1);
    EXPECT_EQ(rep.counts.dW, 1);
    EXPECT_EQ(rep.counts.tW + rep.counts.tB, 0);
}

TEST(Validate, TwoIncomingAtWhiteVertexBreaksPerfectness) {
    Network net = fixtures::null_example(1, 2);
    reverse_edge(net, "up");
    auto rep = validate(net);
    ASSERT_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.violations) found = found || v.rfind("perfectness", 0) == 0;
    EXPECT_TRUE(found);
    EXPECT_EQ(error_kind([&] { require_valid(net); }), ErrorKind::Input);
}

TEST(Validate, CrossingEdgesAreReported) {
    Network net = fixtures::null_example(1, 2);
    Edge& e = net.edges[net.eid("u1")];
    e.poly.insert(e.poly.begin() + 1, geom::Point{Q(20), Q(1)});
    EXPECT_FALSE(validate(net).ok);
}

TEST(Validate, EulerIdentitiesOnRandomNetworks) {
    gen::Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        Network net = gen::random_network(rng);
        auto rep = validate(net);
        ASSERT_TRUE(rep.ok);
        const Counts& c = rep.counts;
        EXPECT_EQ(3 * (c.tW + c.tB) + 2 * (c.dW + c.dB), 2 * c.nI + c.n);
        EXPECT_EQ(2 * c.tB + c.tW + c.dW + c.dB, c.nI + c.k);
        EXPECT_EQ(static_cast<int>(faces(net).size()), c.g + 1);
    }
}

TEST(Faces, FixtureCounts) {
    EXPECT_EQ(faces(fixtures::single_path()).size(), 2u);
    EXPECT_EQ(faces(fixtures::null_example(1, 2)).size(), 5u);
}

TEST(Faces, WeightsMultiplyToOneOverAllFaces) {
    gen::Rng rng(4);
    for (int k = 0; k < 30; ++k) {
        Network net = gen::random_network(rng);
        Q prod = 1;
        for (const auto& f : faces(net)) prod *= face_weight(net, f);
        EXPECT_EQ(prod, 1);
    }
}

TEST(SourceBase, NullExampleAndReversal) {
    Network net = fixtures::null_example(1, 2);
    EXPECT_EQ(source_base(net), std::vector<int>{2});
    EXPECT_EQ(sink_labels(net), std::vector<int>{1});
    auto reps = xform::reverse_path_normalized(net, fixtures::null_example_path());
    EXPECT_EQ(source_base(reps.back().after), std::vector<int>{1});
}

TEST(SourceBase, NoSources) {
    Network net = cycle_feeding_sink(Q(1, 2));
    ASSERT_TRUE(validate(net).ok);
    EXPECT_TRUE(source_base(net).empty());
}

TEST(WeightGauge, UnitGaugeIsIdentity) {
    Network net = fixtures::null_example(Q(2, 3), Q(5));
    std::map<std::string, Q> t;
    for (const auto& v : net.vertices)
        if (!v.boundary) t[v.id] = 1;
    Network g = apply_weight_gauge(net, t);
    EXPECT_EQ(io::write_network(g), io::write_network(net));
}

TEST(WeightGauge, ScalesEdgesAtOneWhiteVertex) {
    Network net = fixtures::null_example(1, 2);
    Network g = apply_weight_gauge(net, {{"V", Q(2)}});
    EXPECT_EQ(g.edges[g.eid("u")].weight, Q(1, 2));
    EXPECT_EQ(g.edges[g.eid("up")].weight, Q(2));
    EXPECT_EQ(g.edges[g.eid("uq")].weight, Q(4));
    EXPECT_EQ(g.edges[g.eid("v")].weight, Q(1));
}

TEST(WeightGauge, RejectsNonpositiveAndBoundary) {
    Network net = fixtures::null_example(1, 2);
    EXPECT_EQ(error_kind([&] { apply_weight_gauge(net, {{"V", Q(0)}}); }), ErrorKind::Input);
    EXPECT_EQ(error_kind([&] { apply_weight_gauge(net, {{"b1", Q(2)}}); }), ErrorKind::Input);
}

TEST(WeightGauge, CompositionAndInvariantMatrix) {
    gen::Rng rng(8);
    for (int k = 0; k < 40; ++k) {
        Network net = gen::random_network(rng);
        auto t = random_gauge_map(net, rng), s = random_gauge_map(net, rng);
        std::map<std::string, Q> ts;
        for (const auto& [v, x] : t) ts[v] = x * s[v];
        Network two = apply_weight_gauge(apply_weight_gauge(net, t), s), one = apply_weight_gauge(net, ts);
        for (std::size_t e = 0; e < net.edges.size(); ++e) EXPECT_EQ(two.edges[e].weight, one.edges[e].weight);
        auto a = evec::boundary_matrix(net), b = evec::boundary_matrix(one);
        EXPECT_EQ(a.pivots, b.pivots);
        EXPECT_EQ(a.A, b.A);
    }
}

TEST(Io, RoundTripIsStable) {
    gen::Rng rng(2);
    for (int k = 0; k < 20; ++k) {
        Network net = gen::random_network(rng);
        std::string once = io::write_network(net);
        EXPECT_EQ(io::write_network(io::read_network(once)), once);
    }
}

TEST(Io, RationalsAreCanonical) {
    EXPECT_EQ(to_string(parse_rational("-6/8")), "-3/4");
    EXPECT_EQ(to_string(parse_rational("4/2")), "2");
    EXPECT_EQ(error_kind([] { parse_rational("0.5"); }), ErrorKind::Parse);
}

TEST(Io, SyntaxErrorsCarryLineAndColumn) {
    try {
        io::parse_text("{\n  \"n\": 2,\n  \"gauge_dir\": [\"1\" \"2\"]\n}");
        FAIL() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
}

TEST(Io, MissingFieldIsParseError) {
    auto j = io::to_json(fixtures::single_path());
    j.erase("gauge_dir");
    EXPECT_EQ(error_kind([&] { io::from_json(j); }), ErrorKind::Parse);
}
