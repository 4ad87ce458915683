// Acceptance run: one PASS/FAIL line per criterion, exact rational comparisons throughout.
#include "plabic/checks.hpp"
#include "plabic/error.hpp"
#include "plabic/evec.hpp"
#include "plabic/fixtures.hpp"
#include "plabic/flows.hpp"
#include "plabic/generate.hpp"
#include "plabic/xform.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace plabic;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::vector<std::pair<Q, Q>> samples() {
    return {{Q(1), Q(2)}, {Q(1), Q(1)}, {Q(1, 3), Q(1, 3)}, {Q(2, 5), Q(7, 3)}, {Q(5), Q(1, 2)}, {Q(3, 4), Q(3, 4)},
            {Q(9, 2), Q(11, 7)}};
}

std::string pq(const Q& p, const Q& q) { return "p=" + to_string(p) + ",q=" + to_string(q); }

QVec v2(const Q& a, const Q& b) { return {a, b}; }

QVec edge_vec(const Network& net, const std::vector<QVec>& E, const std::string& id) { return E[net.eid(id)]; }

std::vector<Network> random_batch(std::uint64_t seed, int count, bool small) {
    gen::Rng rng(seed);
    gen::Options opt;
    opt.small_weights = small;
    std::vector<Network> out;
    for (int k = 0; k < count; ++k) out.push_back(gen::random_network(rng, opt));
    return out;
}

int par(int x) { return ((x % 2) + 2) % 2; }

void null_closed_forms(Outcome& o) {
    int equal = 0;
    for (const auto& [p, q] : samples()) {
        Network net = fixtures::null_example(p, q);
        Q den = 1 + p + q;
        auto sys = evec::solve_system(net);
        auto tal = evec::talaska_all(net, evec::canonical_bc(net), flows::default_limits());
        std::string at = pq(p, q);
        o.require(sys.det == den, "detM at " + at);
        o.require(flows::conservative_total(flows::enum_conservative(net, flows::default_limits())) == den,
                  "conservative total at " + at);
        for (const auto* E : {&sys.E, &tal}) {
            o.require(edge_vec(net, *E, "u") == v2((q - p) / den, 0), "E_u at " + at);
            o.require(edge_vec(net, *E, "v") == v2((q - p) / den, 0), "E_v at " + at);
            o.require(edge_vec(net, *E, "w") == v2((p - q) / den, 0), "E_w at " + at);
            o.require(edge_vec(net, *E, "u2") == v2((1 + 2 * p) / den, 0), "E_u2 at " + at);
            o.require(edge_vec(net, *E, "up") == v2((p + 2 * p * q) / den, 0), "E_up at " + at);
            o.require(edge_vec(net, *E, "u1") == v2(1, 0), "E_u1 at " + at);
        }
        auto bm = evec::boundary_matrix(net, sys.E);
        o.require(bm.pivots == std::vector<int>{2} && bm.A == QMat{v2((1 + 2 * p) / den, 1)}, "A at " + at);
        if (p == q) ++equal;
    }
    o.require(equal > 0, "no p=q sample");
    o.detail << samples().size() << " samples, " << equal << " with p=q; solve and flow formula both checked";
}

void null_orientation(Outcome& o) {
    for (const auto& [p, q] : samples()) {
        Network net = fixtures::null_example(p, q);
        std::string at = pq(p, q);
        auto path = fixtures::null_example_path();
        o.require(net.is_source_edge(net.eid(path.front())) && net.vertices[net.tail(net.eid(path.front()))].label == 2 &&
                      net.vertices[net.head(net.eid(path.back()))].label == 1,
                  "path does not run from b2 to b1");
        auto reps = xform::reverse_path_normalized(net, path);
        for (const auto& r : reps) o.require(r.ok(), r.op + " prediction at " + at);
        const auto& r = reps.back();
        auto E = evec::solve_system(r.after).E;
        const Network& a = r.after;
        Q den = 2 * p + 1;
        o.require(edge_vec(a, E, "u2") == v2(0, 1), "E_-u2 at " + at);
        o.require(edge_vec(a, E, "u") == v2(0, (p - q) / den), "E_-u at " + at);
        o.require(edge_vec(a, E, "v") == v2(0, (q - p) / den), "E_v at " + at);
        o.require(edge_vec(a, E, "up") == v2(0, (1 + 2 * q) / den), "E_-up at " + at);
        o.require(edge_vec(a, E, "u1") == v2(0, (1 + p + q) / den), "E_-u1 at " + at);
        std::multiset<Q> w;
        for (const auto& c : flows::enum_conservative(a, flows::default_limits()))
            if (!c.edges.empty()) w.insert(c.weight);
        o.require(w == std::multiset<Q>{Q(1), 1 / p}, "nontrivial conservative flows at " + at);
    }
    o.detail << samples().size() << " samples; predicted and recomputed vectors agree";
}

void determinant_identity(const std::vector<Network>& nets, Outcome& o) {
    int cyclic = 0, acyclic = 0;
    for (std::size_t k = 0; k < nets.size(); ++k) {
        const Network& net = nets[k];
        o.require(net.edges.size() <= 20, "network larger than 20 edges");
        auto det = evec::solve_system(net).det;
        o.require(det == flows::conservative_total(flows::enum_conservative(net, flows::default_limits())),
                  "detM != flow total on net " + std::to_string(k));
        if (gen::has_cycle(net)) {
            ++cyclic;
        } else {
            ++acyclic;
            o.require(det == 1, "detM != 1 on acyclic net " + std::to_string(k));
        }
    }
    o.require(cyclic > 0 && acyclic > 0, "batch is not mixed");
    o.detail << nets.size() << " networks (" << cyclic << " cyclic, " << acyclic << " acyclic)";
}

void cross_method(const std::vector<Network>& nets, std::uint64_t seed, Outcome& o) {
    long edges = 0;
    for (std::size_t k = 0; k < nets.size(); ++k) {
        const Network& net = nets[k];
        auto bc = evec::canonical_bc(net);
        auto E = evec::solve_system(net, bc).E;
        auto T = evec::talaska_all(net, bc, flows::default_limits());
        for (std::size_t e = 0; e < E.size(); ++e, ++edges)
            o.require(E[e] == T[e], "flow formula != solve on net " + std::to_string(k) + " edge " + net.edges[e].id);
    }
    long bounded = 0, instances = 0;
    Q max_cycle = 0;
    gen::Rng rng(seed);
    gen::Options small;
    small.small_weights = true;
    for (int k = 0; instances < 100 && k < 2000; ++k) {
        Network net = gen::random_network(rng, k % 2 ? small : gen::Options{});
        auto cycles = flows::simple_cycles(net, flows::default_limits());
        if (cycles.empty()) continue;
        Q heaviest = 0;
        for (const auto& c : cycles) {
            Q w = 1;
            for (int e : c) w *= net.edges[e].weight;
            if (w > heaviest) heaviest = w;
        }
        if (heaviest > Q(1, 2)) continue;
        if (heaviest > max_cycle) max_cycle = heaviest;
        ++instances;
        auto E = evec::solve_system(net).E;
        auto tr = evec::truncated_all(net, 24);
        for (std::size_t e = 0; e < E.size(); ++e) {
            o.require(tr[e].bounded, "no bound on a light cyclic instance: " + tr[e].warning);
            if (!tr[e].bounded) continue;
            ++bounded;
            for (int c = 0; c < net.n; ++c)
                o.require(abs(E[e][c] - tr[e].value[c]) <= tr[e].bound[c], "truncated sum outside its bound");
        }
    }
    o.require(instances >= 100, "too few light cyclic instances");
    o.detail << edges << " edges compared; " << bounded << " truncated vectors (depth 24) on " << instances
             << " cyclic instances, largest cycle weight " << to_string(max_cycle);
}

void source_rows(const std::vector<Network>& nets, Outcome& o) {
    checks::Tally t;
    for (std::size_t k = 0; k < nets.size(); ++k) checks::source_row_checks(nets[k], t, "net " + std::to_string(k));
    long n = 0;
    for (const auto& [name, c] : t.checked) n += c;
    o.require(t.ok(), t.examples.empty() ? "" : t.examples.front());
    o.require(t.checked["source flows share one parity"] > 0, "no source flows checked");
    o.detail << n << " checks on " << nets.size() << " networks";
}

void transformation_suite(std::uint64_t seed, Outcome& o) {
    const std::vector<std::pair<std::string, std::string>> kinds{
        {"rotate_gauge", "rotate_gauge"}, {"reverse_cycle", "reverse_cycle"}, {"weight_gauge", "weight_gauge"},
        {"move_vertex", "move_vertex"},   {"square_move", "M1"},              {"flip_move", "M2"},
        {"bivalent", "M3"},               {"reduce_parallel", "R1"},          {"reduce_dipole", "R2"},
        {"reduce_leaf", "R3"}};
    const std::set<std::string> moves{"square_move", "flip_move", "bivalent", "reduce_parallel", "reduce_dipole",
                                      "reduce_leaf"};
    gen::Rng rng(seed);
    for (const auto& [kind, label] : kinds) {
        checks::Tally t;
        int applied = 0;
        for (int k = 0; applied < 100 && k < 4000; ++k) {
            Network net = gen::random_network(rng);
            try {
                if (checks::transform_checks(kind, net, rng, t, kind + " net " + std::to_string(k))) ++applied;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Internal) throw;
            }
        }
        long invariant = 0;
        for (const auto& [name, n] : t.checked)
            if (name.find("boundary point invariant") != std::string::npos) invariant += n;
        o.require(applied >= 100, label + ": only " + std::to_string(applied) + " applications");
        o.require(t.ok(), t.examples.empty() ? "" : t.examples.front());
        if (moves.count(kind)) o.require(invariant >= applied, label + ": boundary point not checked every time");
        o.detail << label << "=" << applied << " ";
    }
}

void appendix(std::uint64_t seed, Outcome& o) {
    xform::Rng rng(seed);
    xform::IdentityTally dir;
    xform::check_direction_identities(rng, 10000, dir);
    xform::IdentityTally mark;
    long marked = 0;
    for (int k = 0; marked < 10000 && k < 5000; ++k) {
        auto t = xform::check_vertex_identities(gen::random_network(rng), 4, rng);
        for (const auto& [name, n] : t.checked) {
            mark.checked[name] += n;
            marked += n;
        }
        for (const auto& [name, n] : t.violated) mark.violated[name] += n;
        for (const auto& x : t.examples) mark.examples.push_back(x);
    }
    for (const char* name : {"black2", "white2", "a10"})
        o.require(dir.checked[name] > 0, std::string("direction identity never exercised: ") + name);
    for (const char* name : {"black1", "white1", "int_vert_eq"})
        o.require(mark.checked[name] > 0, std::string("marking identity never exercised: ") + name);
    o.require(dir.total_violations() == 0, dir.examples.empty() ? "" : dir.examples.front());
    o.require(mark.total_violations() == 0, mark.examples.empty() ? "" : mark.examples.front());
    o.require(marked >= 10000, "too few marking configurations");
    o.detail << "direction fans:";
    for (const auto& [name, n] : dir.checked) o.detail << " " << name << "=" << n;
    o.detail << "; markings:";
    for (const auto& [name, n] : mark.checked) o.detail << " " << name << "=" << n;
    o.detail << "; violations 0";
}

void null_vectors(Outcome& o) {
    int equal = 0;
    for (const auto& [p, q] : samples()) {
        if (p != q) continue;
        ++equal;
        Network net = fixtures::null_example(p, q);
        std::set<std::string> got;
        for (int e : evec::null_edges(net)) got.insert(net.edges[e].id);
        o.require(got == std::set<std::string>{"u", "v", "w"}, "null set at " + pq(p, q));
    }
    int reweighted = 0;
    for (const auto& [p, q] : samples())
        for (Q s : {Q(1), Q(5, 2)}) {
            Network net = fixtures::null_free_example(p, q, s);
            auto E = evec::solve_system(net).E;
            Q val = (1 + p) / (1 + p + q);
            std::string at = pq(p, q) + ",s=" + to_string(s);
            o.require(edge_vec(net, E, "w") == v2(val, 0), "E_w at " + at);
            o.require(edge_vec(net, E, "u") == v2(-val, 0), "E_u at " + at);
            o.require(edge_vec(net, E, "v") == v2(-val, 0), "E_v at " + at);
            o.require(evec::null_edges(net, E).empty(), "null edges at " + at);
            o.require(evec::same_point(evec::boundary_matrix(net, E),
                                       evec::boundary_matrix(fixtures::null_example(p, q)), 2),
                      "different point at " + at);
            ++reweighted;
        }
    o.detail << equal << " samples with p=q; " << reweighted << " reweighted networks without null edges";
}

void cycle_parity(const std::vector<Network>& nets, Outcome& o) {
    long cycles = 0;
    for (std::size_t k = 0; k < nets.size(); ++k) {
        auto geo = edge_geometry(nets[k]);
        for (const auto& c : flows::simple_cycles(nets[k], flows::default_limits())) {
            auto s = flows::cycle_stats(nets[k], geo, c);
            o.require(par(s.wind) == 1 && par(s.intc) == 0, "cycle parity on net " + std::to_string(k));
            ++cycles;
        }
    }
    o.require(cycles > 0, "no cycles");
    o.detail << cycles << " simple cycles on " << nets.size() << " networks";
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    auto nets = random_batch(seed, 200, false);
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all{
        {1, "two-cycle example closed forms", null_closed_forms},
        {2, "two-cycle example after path reversal", null_orientation},
        {3, "detM equals conservative flow total", [&](Outcome& o) { determinant_identity(nets, o); }},
        {4, "flow formula, linear system and truncated sums agree", [&](Outcome& o) { cross_method(nets, seed + 1, o); }},
        {5, "boundary source flows and rows", [&](Outcome& o) { source_rows(nets, o); }},
        {6, "transformation predictions and invariance", [&](Outcome& o) { transformation_suite(seed + 2, o); }},
        {7, "vertex and marking identities", [&](Outcome& o) { appendix(seed + 3, o); }},
        {8, "null edge vectors", null_vectors},
        {9, "simple cycle parity", [&](Outcome& o) { cycle_parity(nets, o); }},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " | tolerance: exact | "
                  << o.detail.str() << " | " << std::fixed << std::setprecision(2) << secs << "s" << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << all.size() - failed << "/" << all.size() << " (seed " << seed
              << ")" << std::endl;
    return failed ? 1 : 0;
}
