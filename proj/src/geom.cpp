#include "plabic/geom.hpp"

#include "plabic/error.hpp"

#include <algorithm>

namespace plabic::geom {

Q cross(const Dir& u, const Dir& v) { return u.dx * v.dy - u.dy * v.dx; }
Q dot(const Dir& u, const Dir& v) { return u.dx * v.dx + u.dy * v.dy; }
bool is_zero(const Dir& d) { return d.dx == 0 && d.dy == 0; }
bool collinear(const Dir& u, const Dir& v) { return cross(u, v) == 0; }
bool parallel(const Dir& u, const Dir& v) { return cross(u, v) == 0 && dot(u, v) > 0; }
bool antiparallel(const Dir& u, const Dir& v) { return cross(u, v) == 0 && dot(u, v) < 0; }

static void require_nonzero(const Dir& d) {
    if (is_zero(d)) throw input_error("zero direction");
}

int orient_sign(const Dir& u, const Dir& v) {
    require_nonzero(u);
    require_nonzero(v);
    return sgn(cross(u, v));
}

int local_wind(const Dir& u, const Dir& v, const Dir& l) {
    require_nonzero(l);
    int s1 = orient_sign(u, v);
    if (s1 == 0 && dot(u, v) < 0)
        throw genericity_error("antiparallel pair " + to_string(u) + ", " + to_string(v));
    int s2 = orient_sign(u, l);
    int s3 = orient_sign(l, v);
    if (s1 != 0 && s1 == s2 && s2 == s3) return s1;
    return 0;
}

bool ccw_before(const Dir& ref, const Dir& a, const Dir& b) {
    auto half = [&](const Dir& x) {
        Q c = cross(ref, x);
        return (c > 0 || (c == 0 && dot(ref, x) > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool in_open_sector(const Dir& a, const Dir& b, const Dir& d) {
    if (parallel(a, d)) return false;
    return ccw_before(a, d, b);
}

int cyclic_order(const Dir& f, const Dir& g, const Dir& h) {
    require_nonzero(f);
    require_nonzero(g);
    require_nonzero(h);
    if (parallel(f, g) || parallel(g, h) || parallel(f, h))
        throw genericity_error("cyclic order of parallel directions");
    return ccw_before(f, g, h) ? 0 : 1;
}

int gamma2(const Dir& d, const Dir& l) { return (1 - orient_sign(d, l)) / 2; }

int ray_segment_hits(const Ray& r, const Point& a, const Point& b) {
    const Dir& d = r.dir;
    require_nonzero(d);
    const Point& o = r.origin;
    Dir w = b - a;
    if (is_zero(w)) throw input_error("degenerate segment " + to_string(a));
    auto fail = [&]() {
        return genericity_error("ray from " + to_string(o) + " dir " + to_string(d) +
                                " meets segment " + to_string(a) + "-" + to_string(b) +
                                " non-generically");
    };
    if (a == o || b == o) {
        const Point& other = (a == o) ? b : a;
        if (parallel(other - o, d)) throw fail();
        return 0;
    }
    Q den = cross(d, w);
    if (den == 0) {
        if (cross(a - o, d) == 0 && (dot(a - o, d) > 0 || dot(b - o, d) > 0)) throw fail();
        return 0;
    }
    Q t = cross(a - o, w) / den;
    Q s = cross(a - o, d) / den;
    if (t < 0) return 0;
    if (t == 0) {
        if (s > 0 && s < 1) throw fail();
        return 0;
    }
    if (s == 0 || s == 1) throw fail();
    return (s > 0 && s < 1) ? 1 : 0;
}

Dir l1_normalize(const Dir& d) {
    Q n = abs(d.dx) + abs(d.dy);
    return {d.dx / n, d.dy / n};
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (cross(b - a, p - a) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = sgn(cross(b - a, c - a));
    int o2 = sgn(cross(b - a, d - a));
    int o3 = sgn(cross(d - c, a - c));
    int o4 = sgn(cross(d - c, b - c));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

std::optional<Q> ray_param_hit(const Point& o, const Dir& d, const Point& c, const Point& e) {
    Dir w = e - c;
    Q den = cross(d, w);
    if (den == 0) return std::nullopt;
    Q t = cross(c - o, w) / den;
    Q s = cross(c - o, d) / den;
    if (t > 0 && s >= 0 && s <= 1) return t;
    return std::nullopt;
}

bool inside_polygon(const Point& p, const std::vector<Point>& poly) {
    bool in = false;
    std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            Q xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xi) in = !in;
        }
    }
    return in;
}

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int s1 = sgn(cross(b - a, p - a));
    int s2 = sgn(cross(c - b, p - b));
    int s3 = sgn(cross(a - c, p - c));
    bool neg = s1 < 0 || s2 < 0 || s3 < 0;
    bool pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(neg && pos);
}

Q signed_area2(const std::vector<Point>& poly) {
    Q s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

std::string to_string(const Point& p) {
    return "(" + plabic::to_string(p.x) + "," + plabic::to_string(p.y) + ")";
}

std::string to_string(const Dir& d) {
    return "<" + plabic::to_string(d.dx) + "," + plabic::to_string(d.dy) + ">";
}

}  // namespace plabic::geom
