#include "plabic/checks.hpp"
#include "plabic/fixtures.hpp"
#include "plabic/generate.hpp"
#include "plabic/instances.hpp"
#include "plabic/xform.hpp"

#include "support.hpp"

#include <set>

using namespace plabic;
using namespace plabic::testing;

namespace {

QVec after_vec(const xform::Report& r, const std::string& id) {
    for (const auto& e : r.edges)
        if (e.edge == id) return e.recomputed;
    ADD_FAILURE() << "no edge " << id;
    return {};
}

bool has_passing_check(const xform::Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.ok;
    return false;
}

std::string describe(const xform::Report& r) {
    std::string s = r.op;
    for (const auto& e : r.edges)
        if (!e.ok) s += " edge " + e.edge + " predicted " + to_string(e.predicted) + " got " + to_string(e.recomputed);
    for (const auto& c : r.checks)
        if (!c.ok) s += " check '" + c.name + "' " + c.detail;
    return s;
}

void set_weight(Network& net, int e, const Q& w) { net.edges[e].weight = w; }

// Runs one transform kind on fresh random networks until it applies `want` times.
int run_kind(const std::string& kind, int want, std::uint64_t seed) {
    gen::Rng rng(seed);
    checks::Tally t;
    int applied = 0;
    for (int k = 0; k < 40 * want && applied < want; ++k) {
        Network net = gen::random_network(rng);
        try {
            if (checks::transform_checks(kind, net, rng, t, "net " + std::to_string(k))) ++applied;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Internal) throw;
        }
    }
    for (const auto& x : t.examples) ADD_FAILURE() << x;
    EXPECT_TRUE(t.ok());
    return applied;
}

}  // namespace

TEST(RotateGauge, SameDirectionIsIdentity) {
    Network net = fixtures::null_example(1, 2);
    auto r = xform::rotate_gauge(net, net.gauge);
    EXPECT_TRUE(r.ok()) << describe(r);
    for (const auto& e : r.edges) EXPECT_EQ(e.factor, Q(1));
    EXPECT_TRUE(has_passing_check(r, "boundary matrix invariant"));
}

TEST(RotateGauge, RejectsDownwardDirections) {
    Network net = fixtures::null_example(1, 2);
    EXPECT_EQ(error_kind([&] { xform::rotate_gauge(net, {Q(1), Q(-1)}); }), ErrorKind::Input);
}

TEST(RotateGauge, RandomPredictionsHold) { EXPECT_EQ(run_kind("rotate_gauge", 40, 101), 40); }

TEST(WeightGauge, RandomPredictionsHold) { EXPECT_EQ(run_kind("weight_gauge", 30, 102), 30); }

TEST(MoveVertex, NoMotionIsIdentity) {
    Network net = fixtures::null_example(1, 2);
    const Vertex& v = net.vertices[net.vid("A")];
    auto r = xform::move_vertex(net, v.id, v.pos);
    EXPECT_TRUE(r.ok()) << describe(r);
    for (const auto& e : r.edges) EXPECT_EQ(e.factor, Q(1));
}

TEST(MoveVertex, RandomMotionsSometimesFlipSigns) {
    gen::Rng rng(103);
    int applied = 0, flipped = 0;
    for (int k = 0; k < 200 && applied < 60; ++k) {
        auto reps = checks::random_transform("move_vertex", gen::random_network(rng), rng);
        if (reps.empty()) continue;
        ++applied;
        EXPECT_TRUE(reps[0].ok()) << describe(reps[0]);
        for (const auto& e : reps[0].edges)
            if (e.factor && *e.factor == -1) ++flipped;
    }
    EXPECT_EQ(applied, 60);
    EXPECT_GT(flipped, 0);
}

TEST(ReversePath, NullExampleNewOrientation) {
    for (const auto& [p, q] : pq_samples()) {
        Network net = fixtures::null_example(p, q);
        auto reps = xform::reverse_path_normalized(net, fixtures::null_example_path());
        for (const auto& r : reps) EXPECT_TRUE(r.ok()) << describe(r);
        const auto& r = reps.back();
        Q den = 2 * p + 1;
        EXPECT_EQ(after_vec(r, "u2"), qv({0, 1}));
        EXPECT_EQ(after_vec(r, "u"), qv({0, (p - q) / den}));
        EXPECT_EQ(after_vec(r, "v"), qv({0, (q - p) / den}));
        EXPECT_EQ(after_vec(r, "up"), qv({0, (1 + 2 * q) / den}));
        EXPECT_EQ(after_vec(r, "u1"), qv({0, (1 + p + q) / den}));
        auto cf = flows::enum_conservative(r.after, flows::default_limits());
        std::multiset<Q> w;
        for (const auto& c : cf)
            if (!c.edges.empty()) w.insert(c.weight);
        EXPECT_EQ(w, (std::multiset<Q>{Q(1), 1 / p}));
    }
}

TEST(ReversePath, RejectsNonPaths) {
    Network net = fixtures::null_example(1, 2);
    EXPECT_EQ(error_kind([&] { xform::reverse_path(net, {"u2", "w"}); }), ErrorKind::Input);
}

TEST(ReversePath, RandomPredictionsHold) { EXPECT_GE(run_kind("reverse_path", 30, 104), 25); }

TEST(ReverseCycle, BothCyclesOfTheNullExample) {
    Network net = fixtures::null_example(Q(2, 3), Q(5, 4));
    for (const auto& c : flows::simple_cycles(net, flows::default_limits())) {
        auto r = xform::reverse_cycle(net, xform::edge_ids(net, c));
        EXPECT_TRUE(r.ok()) << describe(r);
        EXPECT_TRUE(has_passing_check(r, "null edges preserved"));
    }
    EXPECT_EQ(error_kind([&] { xform::reverse_cycle(net, {"u", "v"}); }), ErrorKind::Input);
}

TEST(ReverseCycle, RandomPredictionsHold) { EXPECT_GE(run_kind("reverse_cycle", 40, 105), 30); }

TEST(Reorient, PathOfTheNullExample) {
    Network net = fixtures::null_example(1, 2);
    auto reps = xform::reorient(net, fixtures::null_example_path());
    ASSERT_FALSE(reps.empty());
    for (const auto& r : reps) EXPECT_TRUE(r.ok()) << describe(r);
    EXPECT_EQ(source_base(reps.back().after), std::vector<int>{1});
}

TEST(Reorient, UnbalancedSetIsRejected) {
    Network net = fixtures::null_example(1, 2);
    EXPECT_EQ(error_kind([&] { xform::reorient(net, {"u2"}); }), ErrorKind::Input);
}

TEST(SquareMove, UnitWeights) {
    gen::Rng rng(106);
    int done = 0;
    for (int k = 0; k < 300 && done < 5; ++k) {
        auto inst = gen::square_instance(gen::random_network(rng), rng);
        if (!inst) continue;
        Network& net = inst->net;
        int h1 = net.eid(inst->args[0]);
        int Y = net.tail(h1), X = net.head(h1);
        int h2 = net.out_edges(Y)[0] == h1 ? net.out_edges(Y)[1] : net.out_edges(Y)[0];
        int h3 = net.out_edges(X)[0];
        int h4 = -1;
        for (int f : net.out_edges(net.head(h3)))
            if (net.head(f) == net.head(h2)) h4 = f;
        ASSERT_GE(h4, 0);
        for (int h : {h1, h2, h3, h4}) set_weight(net, h, 1);
        auto r = xform::square_move(net, inst->args[0]);
        EXPECT_TRUE(r.ok()) << describe(r);
        EXPECT_TRUE(has_passing_check(r, "square face weight inverts"));
        EXPECT_TRUE(has_passing_check(r, "boundary point invariant"));
        const Network& a = r.after;
        EXPECT_EQ(a.edges[a.eid(net.edges[h2].id)].weight, 2);
        for (int h : {h1, h3, h4}) EXPECT_EQ(a.edges[a.eid(net.edges[h].id)].weight, Q(1, 2));
        ++done;
    }
    EXPECT_EQ(done, 5);
}

TEST(SquareMove, RandomPredictionsHold) { EXPECT_EQ(run_kind("square_move", 40, 107), 40); }

TEST(FlipMove, BlackFlipKeepsTheVector) {
    gen::Rng rng(108);
    int black = 0;
    for (int k = 0; k < 400 && black < 10; ++k) {
        auto inst = gen::flip_instance(gen::random_network(rng), rng);
        if (!inst) continue;
        const Network& net = inst->net;
        int e0 = net.eid(inst->args[0]);
        if (net.vertices[net.tail(e0)].color != Color::Black) continue;
        xform::Report r;
        try {
            r = xform::flip_move(net, inst->args[0]);
        } catch (const Error& e) {
            ASSERT_NE(e.kind(), ErrorKind::Internal) << e.what();
            continue;
        }
        EXPECT_TRUE(r.ok()) << describe(r);
        EXPECT_EQ(after_vec(r, inst->args[0]), evec::solve_system(net).E[e0]);
        ++black;
    }
    EXPECT_EQ(black, 10);
}

TEST(FlipMove, WhiteFlipCanCreateANullVector) {
    gen::Rng rng(5);
    bool created = false;
    for (int k = 0; k < 300 && !created; ++k) {
        auto inst = gen::flip_instance(gen::random_network(rng), rng);
        if (!inst) continue;
        xform::Report r;
        try {
            r = xform::flip_move(inst->net, inst->args[0]);
        } catch (const Error& e) {
            ASSERT_NE(e.kind(), ErrorKind::Internal) << e.what();
            continue;
        }
        EXPECT_TRUE(r.ok()) << describe(r);
        int e0 = inst->net.eid(inst->args[0]);
        created = is_zero(after_vec(r, inst->args[0])) && !is_zero(evec::solve_system(inst->net).E[e0]);
    }
    EXPECT_TRUE(created);
}

TEST(FlipMove, RandomPredictionsHold) { EXPECT_EQ(run_kind("flip_move", 40, 109), 40); }

TEST(Bivalent, CollinearSplitKeepsEveryVector) {
    Network net = fixtures::null_example(1, 2);
    const Edge& e = net.edges[net.eid("u2")];
    geom::Point mid{(e.poly[0].x + e.poly[1].x) / 2, (e.poly[0].y + e.poly[1].y) / 2};
    auto ins = xform::insert_bivalent(net, "u2", mid, Color::White);
    EXPECT_TRUE(ins.ok()) << describe(ins);
    auto E = evec::solve_system(net).E;
    for (std::size_t k = 0; k < net.edges.size(); ++k) EXPECT_EQ(after_vec(ins, net.edges[k].id), E[k]);
    auto rem = xform::remove_bivalent(ins.after, ins.after.vertices.back().id);
    EXPECT_TRUE(rem.ok()) << describe(rem);
    EXPECT_EQ(evec::solve_system(rem.after).E, E);
}

TEST(Bivalent, RandomPredictionsHold) { EXPECT_EQ(run_kind("bivalent", 40, 110), 40); }

TEST(ReduceParallel, UnitWeightsMergeToTwo) {
    gen::Rng rng(111);
    int done = 0;
    for (int k = 0; k < 100 && done < 5; ++k) {
        auto inst = gen::lens_instance(gen::random_network(rng), rng);
        if (!inst) continue;
        Network& net = inst->net;
        int e2 = net.eid(inst->args[0]), e3 = net.eid(inst->args[1]);
        int e1 = net.in_edges(net.tail(e2))[0], e4 = net.out_edges(net.head(e2))[0];
        for (int e : {e1, e2, e3, e4}) set_weight(net, e, 1);
        auto r = xform::reduce_parallel(net, inst->args[0], inst->args[1]);
        EXPECT_TRUE(r.ok()) << describe(r);
        EXPECT_EQ(r.after.edges[r.after.eid(net.edges[e1].id)].weight, 2);
        ++done;
    }
    EXPECT_EQ(done, 5);
}

TEST(ReduceParallel, RandomPredictionsHold) { EXPECT_EQ(run_kind("reduce_parallel", 40, 112), 40); }

TEST(ReduceDipole, RandomPredictionsHold) { EXPECT_EQ(run_kind("reduce_dipole", 30, 113), 30); }

TEST(ReduceLeaf, FaceWeightLaw) {
    gen::Rng rng(114);
    int done = 0;
    for (int k = 0; k < 100 && done < 20; ++k) {
        auto inst = gen::leaf_instance(gen::random_network(rng), rng);
        if (!inst) continue;
        auto r = xform::reduce_leaf(inst->net, inst->args[0]);
        EXPECT_TRUE(r.ok()) << describe(r);
        EXPECT_TRUE(has_passing_check(r, "boundary point invariant"));
        ++done;
    }
    EXPECT_EQ(done, 20);
}

TEST(ReduceLeaf, RandomPredictionsHold) { EXPECT_EQ(run_kind("reduce_leaf", 40, 115), 40); }

TEST(Identities, DirectionFans) {
    xform::Rng rng(116);
    xform::IdentityTally t;
    xform::check_direction_identities(rng, 4000, t);
    for (const auto& name : {"black2", "white2", "a10"}) EXPECT_GT(t.checked[name], 0) << name;
    EXPECT_EQ(t.total_violations(), 0) << (t.examples.empty() ? "" : t.examples.front());
}

TEST(Identities, MarkingsOnNetworks) {
    xform::Rng rng(117);
    xform::IdentityTally total;
    auto add = [&](const xform::IdentityTally& t) {
        for (const auto& [k, v] : t.checked) total.checked[k] += v;
        for (const auto& [k, v] : t.violated) total.violated[k] += v;
        for (const auto& x : t.examples) total.examples.push_back(x);
    };
    add(xform::check_vertex_identities(fixtures::null_example(1, 2), 20, rng));
    for (int k = 0; k < 40; ++k) add(xform::check_vertex_identities(gen::random_network(rng), 6, rng));
    for (const auto& name : {"black1", "white1", "int_vert_eq"}) EXPECT_GT(total.checked[name], 0) << name;
    EXPECT_EQ(total.total_violations(), 0) << (total.examples.empty() ? "" : total.examples.front());
}
