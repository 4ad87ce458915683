#pragma once

#include "plabic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plabic::geom {

struct Dir {
    Q dx, dy;
    Dir operator-() const { return {-dx, -dy}; }
    bool operator==(const Dir& o) const { return dx == o.dx && dy == o.dy; }
};

struct Point {
    Q x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct Ray {
    Point origin;
    Dir dir;
};

inline Dir operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Dir& d) { return {p.x + d.dx, p.y + d.dy}; }
inline Dir operator*(const Q& s, const Dir& d) { return {s * d.dx, s * d.dy}; }
inline Dir operator+(const Dir& a, const Dir& b) { return {a.dx + b.dx, a.dy + b.dy}; }

Q cross(const Dir& u, const Dir& v);
Q dot(const Dir& u, const Dir& v);
bool is_zero(const Dir& d);
bool parallel(const Dir& u, const Dir& v);       // same direction
bool antiparallel(const Dir& u, const Dir& v);   // opposite direction
bool collinear(const Dir& u, const Dir& v);      // either

// Sign of u x v; 0 when collinear.
int orient_sign(const Dir& u, const Dir& v);
// Local winding of the ordered pair (u,v) with respect to l.
int local_wind(const Dir& u, const Dir& v, const Dir& l);
// 0 for a counterclockwise triple, 1 for a clockwise one.
int cyclic_order(const Dir& f, const Dir& g, const Dir& h);
// (1 - s(d,l)) / 2
int gamma2(const Dir& d, const Dir& l);
// 1 iff the open ray properly crosses the open segment [a,b].
// A segment endpoint equal to the ray origin never counts.
int ray_segment_hits(const Ray& r, const Point& a, const Point& b);

// True iff the counterclockwise angle from ref to a is smaller than to b.
bool ccw_before(const Dir& ref, const Dir& a, const Dir& b);
// Strictly inside the open counterclockwise sector from a to b (a != b).
bool in_open_sector(const Dir& a, const Dir& b, const Dir& d);

Dir l1_normalize(const Dir& d);

bool on_segment(const Point& p, const Point& a, const Point& b);
// Closed segments share at least one point.
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d);
// Parameter t in (0, inf) at which a + t*(b-a) meets segment [c,d] transversally, if any.
std::optional<Q> ray_param_hit(const Point& o, const Dir& d, const Point& c, const Point& e);

// Even-odd containment; p must not lie on the boundary.
bool inside_polygon(const Point& p, const std::vector<Point>& poly);
bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c);
Q signed_area2(const std::vector<Point>& poly);

std::string to_string(const Point& p);
std::string to_string(const Dir& d);

}  // namespace plabic::geom
