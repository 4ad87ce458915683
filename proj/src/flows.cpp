#include "plabic/flows.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace plabic::flows {

Limits default_limits() {
    Limits lim;
    if (const char* s = std::getenv("PLABIC_MAX_EDGES")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0) lim.max_edges = static_cast<std::size_t>(v);
    }
    return lim;
}

void check_size(const Network& net, const Limits& lim) {
    if (net.edges.size() > lim.max_edges)
        throw resource_error("network has " + std::to_string(net.edges.size()) + " edges, cap is " +
                             std::to_string(lim.max_edges));
}

bool EdgeSet::disjoint(const EdgeSet& o) const {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i)
        if (w_[i] & o.w_[i]) return false;
    return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Walk loop_erase(const Walk& w) {
    Walk out;
    std::unordered_map<int, std::size_t> at;
    for (int e : w) {
        auto it = at.find(e);
        if (it != at.end()) {
            for (std::size_t i = it->second + 1; i < out.size(); ++i) at.erase(out[i]);
            out.resize(it->second + 1);
            continue;
        }
        at[e] = out.size();
        out.push_back(e);
    }
    return out;
}

bool is_walk(const Network& net, const Walk& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (net.head(w[i]) != net.tail(w[i + 1])) return false;
    return true;
}

FlowStats path_stats(const Network& net, const std::vector<EdgeGeo>& geo, const Walk& w) {
    FlowStats s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s.weight *= net.edges[w[i]].weight;
        s.wind += geo[w[i]].iw;
        s.intc += geo[w[i]].cross;
        if (i + 1 < w.size()) s.wind += geom::local_wind(geo[w[i]].last, geo[w[i + 1]].first, net.gauge);
    }
    return s;
}

FlowStats path_stats(const Network& net, const Walk& w) {
    if (!is_walk(net, w)) throw input_error("edges do not form a directed walk");
    return path_stats(net, edge_geometry(net), w);
}

FlowStats cycle_stats(const Network& net, const std::vector<EdgeGeo>& geo, const Walk& c) {
    FlowStats s = path_stats(net, geo, c);
    s.wind += geom::local_wind(geo[c.back()].last, geo[c.front()].first, net.gauge);
    return s;
}

namespace {

bool internal_edge(const Network& net, int e) {
    return !net.is_boundary(net.tail(e)) && !net.is_boundary(net.head(e));
}

}  // namespace

std::vector<Walk> simple_cycles(const Network& net, const Limits& lim) {
    check_size(net, lim);
    std::vector<Walk> out;
    int nv = static_cast<int>(net.vertices.size());
    std::vector<char> on(nv, 0);
    Walk stack;
    for (int s = 0; s < nv; ++s) {
        if (net.is_boundary(s)) continue;
        auto dfs = [&](auto&& self, int v) -> void {
            for (int e : net.out_edges(v)) {
                if (!internal_edge(net, e)) continue;
                int h = net.head(e);
                if (h == s) {
                    stack.push_back(e);
                    out.push_back(stack);
                    stack.pop_back();
                    if (out.size() > lim.max_flows) throw resource_error("simple cycle count exceeds cap");
                    continue;
                }
                if (h < s || on[h]) continue;
                on[h] = 1;
                stack.push_back(e);
                self(self, h);
                stack.pop_back();
                on[h] = 0;
            }
        };
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }
    return out;
}

std::vector<ConservativeFlow> enum_conservative(const Network& net, const Limits& lim) {
    auto cycles = simple_cycles(net, lim);
    std::size_t ne = net.edges.size();
    std::size_t nv = net.vertices.size();
    std::vector<EdgeSet> cmask, vmask;
    std::vector<Q> cw;
    for (const Walk& c : cycles) {
        EdgeSet m(ne), vm(nv);
        Q w = 1;
        for (int e : c) {
            m.set(e);
            vm.set(net.tail(e));
            w *= net.edges[e].weight;
        }
        cmask.push_back(m);
        vmask.push_back(vm);
        cw.push_back(w);
    }
    std::vector<ConservativeFlow> out;
    out.push_back({{}, 1, EdgeSet(ne)});
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t start, const EdgeSet& used_v, const EdgeSet& used_e,
                   const Q& w) -> void {
        for (std::size_t i = start; i < cycles.size(); ++i) {
            if (!vmask[i].disjoint(used_v)) continue;
            EdgeSet uv = used_v;
            uv |= vmask[i];
            EdgeSet ue = used_e;
            ue |= cmask[i];
            Q nw = w * cw[i];
            chosen.push_back(static_cast<int>(i));
            ConservativeFlow f;
            for (int c : chosen) f.edges.insert(f.edges.end(), cycles[c].begin(), cycles[c].end());
            std::sort(f.edges.begin(), f.edges.end());
            f.weight = nw;
            f.mask = ue;
            out.push_back(std::move(f));
            if (out.size() > lim.max_flows) throw resource_error("conservative flow count exceeds cap");
            self(self, i + 1, uv, ue, nw);
            chosen.pop_back();
        }
    };
    rec(rec, 0, EdgeSet(nv), EdgeSet(ne), Q(1));
    return out;
}

Q conservative_total(const std::vector<ConservativeFlow>& cf) {
    Q s = 0;
    for (const auto& f : cf) s += f.weight;
    return s;
}

std::vector<Walk> le_walks(const Network& net, int e, int j, const Limits& lim) {
    check_size(net, lim);
    std::vector<Walk> out;
    int ve = net.tail(e);
    std::vector<char> seen(net.vertices.size(), 0);
    std::vector<char> used(net.edges.size(), 0);
    bool returned = false;
    Walk path{e};
    used[e] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
        if (net.is_boundary(v)) {
            if (net.vertices[v].label == j) {
                out.push_back(path);
                if (out.size() > lim.max_flows) throw resource_error("walk count exceeds cap");
            }
            return;
        }
        for (int f : net.out_edges(v)) {
            if (used[f]) continue;
            int h = net.head(f);
            bool back = (h == ve);
            if (back && returned) continue;
            if (!back && seen[h]) continue;
            used[f] = 1;
            path.push_back(f);
            if (back)
                returned = true;
            else
                seen[h] = 1;
            self(self, h);
            if (back)
                returned = false;
            else
                seen[h] = 0;
            path.pop_back();
            used[f] = 0;
        }
    };
    int h = net.head(e);
    if (h == ve) return out;
    seen[h] = 1;
    dfs(dfs, h);
    return out;
}

std::vector<EdgeFlow> enum_edge_flows(const Network& net, int e, int j, const Limits& lim) {
    auto walks = le_walks(net, e, j, lim);
    auto cons = enum_conservative(net, lim);
    auto geo = edge_geometry(net);
    std::vector<EdgeFlow> out;
    for (const Walk& p : walks) {
        EdgeSet pm(net.edges.size());
        for (int x : p) pm.set(x);
        FlowStats ps = path_stats(net, geo, p);
        for (const auto& c : cons) {
            if (!c.mask.disjoint(pm)) continue;
            EdgeFlow f;
            f.path = p;
            f.cycle_edges = c.edges;
            f.edges = p;
            f.edges.insert(f.edges.end(), c.edges.begin(), c.edges.end());
            std::sort(f.edges.begin(), f.edges.end());
            f.stats = ps;
            f.stats.weight = ps.weight * c.weight;
            out.push_back(std::move(f));
            if (out.size() > lim.max_flows) throw resource_error("edge flow count exceeds cap");
        }
    }
    return out;
}

}  // namespace plabic::flows
