#pragma once

#include "plabic/geom.hpp"
#include "plabic/rational.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace plabic {

enum class Color { None, White, Black };

struct Vertex {
    std::string id;
    bool boundary = false;
    int label = 0;  // 1..n for boundary vertices
    Color color = Color::None;
    geom::Point pos;
};

struct Edge {
    std::string id;
    std::string tail, head;
    Q weight = 1;
    std::vector<geom::Point> poly;  // tail position first, head position last
};

// Embedded oriented network with gauge direction. Call index() after any structural edit.
struct Network {
    int n = 0;
    geom::Dir gauge{0, 1};
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    void index();
    int vid(const std::string& id) const;
    int eid(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return vmap_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return emap_.count(id) > 0; }
    int tail(int e) const { return tail_[e]; }
    int head(int e) const { return head_[e]; }
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_[v]; }
    int degree(int v) const { return static_cast<int>(out_[v].size() + in_[v].size()); }
    bool is_boundary(int v) const { return vertices[v].boundary; }
    int boundary_vertex(int label) const;  // -1 if absent
    int boundary_edge(int label) const;    // -1 if absent
    bool is_sink_edge(int e) const { return vertices[head_[e]].boundary; }
    bool is_source_edge(int e) const { return vertices[tail_[e]].boundary; }
    std::string fresh_vertex_id(const std::string& stem) const;
    std::string fresh_edge_id(const std::string& stem) const;

private:
    std::unordered_map<std::string, int> vmap_, emap_;
    std::vector<int> tail_, head_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> bv_;
};

std::vector<geom::Dir> segment_dirs(const Edge& e);
geom::Dir first_dir(const Edge& e);
geom::Dir last_dir(const Edge& e);

// Boundary source labels in increasing order, and sink labels.
std::vector<int> source_base(const Network& net);
std::vector<int> sink_labels(const Network& net);
std::vector<geom::Ray> gauge_rays(const Network& net);

struct EdgeGeo {
    geom::Dir first, last;
    int iw = 0;     // winding summed over the polyline bends
    int cross = 0;  // gauge ray crossings summed over segments
};
int internal_wind(const Edge& e, const geom::Dir& l);
int ray_crossings(const Edge& e, const std::vector<geom::Ray>& rays);
std::vector<EdgeGeo> edge_geometry(const Network& net);
// Winding at the junction of e followed by f.
int junction_wind(const Network& net, int e, int f);

struct Counts {
    int n = 0, k = 0, g = 0, tW = 0, tB = 0, dW = 0, dB = 0, nI = 0, internal = 0, faces = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    Counts counts;
};

ValidationReport validate(const Network& net);
void require_valid(const Network& net);

struct FaceSide {
    int edge;
    bool forward;  // traversed tail to head with the face on the left
};
struct Face {
    std::vector<FaceSide> sides;
    bool touches_boundary = false;
    std::vector<geom::Point> outline;
};
std::vector<Face> faces(const Network& net);
// Product of weights of edges with the face on their right over those with it on their left.
Q face_weight(const Network& net, const Face& f);

Network apply_weight_gauge(const Network& net, const std::map<std::string, Q>& t);

const char* color_name(Color c);

}  // namespace plabic
