#include "plabic/export.hpp"

#include "plabic/error.hpp"

#include <algorithm>
#include <cstdio>
#include <regex>
#include <sstream>

namespace plabic::exporter {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string unquote(const std::string& s) {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) ++i;
        out += s[i];
    }
    return out;
}

std::string xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string to_dot(const Network& net) {
    std::ostringstream os;
    os << "digraph plabic {\n";
    os << "  graph [n=" << net.n << ", gauge=" << quote(to_string(net.gauge.dx) + "," + to_string(net.gauge.dy))
       << "];\n";
    for (const Vertex& v : net.vertices) {
        os << "  " << quote(v.id) << " [";
        if (v.boundary)
            os << "shape=box, boundary=" << v.label << ", label=" << quote(std::to_string(v.label));
        else
            os << "shape=circle, style=filled, color=" << quote(color_name(v.color))
               << ", fillcolor=" << quote(color_name(v.color)) << ", label=\"\"";
        os << "];\n";
    }
    for (const Edge& e : net.edges)
        os << "  " << quote(e.tail) << " -> " << quote(e.head) << " [id=" << quote(e.id)
           << ", plabic_weight=" << quote(to_string(e.weight)) << ", label=" << quote(e.id + ": " + to_string(e.weight))
           << "];\n";
    os << "}\n";
    return os.str();
}

Network topology_from_dot(const std::string& dot) {
    static const std::string str = R"("(?:[^"\\]|\\.)*")";
    static const std::regex graph_re(R"(graph \[n=(\d+), gauge=)" + str + R"(\];)");
    static const std::regex edge_re("(" + str + ") -> (" + str + R"() \[id=()" + str + "), plabic_weight=(" + str + ")");
    static const std::regex vertex_re("^\\s*(" + str + R"() \[(.*)\];$)");
    static const std::regex boundary_re(R"(boundary=(\d+))");
    static const std::regex color_re(R"re(color="(white|black|none)")re");
    Network net;
    std::istringstream in(dot);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (std::regex_search(line, m, graph_re)) {
            net.n = std::stoi(m[1]);
        } else if (std::regex_search(line, m, edge_re)) {
            Edge e;
            e.tail = unquote(m[1]);
            e.head = unquote(m[2]);
            e.id = unquote(m[3]);
            e.weight = parse_rational(unquote(m[4]));
            net.edges.push_back(std::move(e));
        } else if (std::regex_search(line, m, vertex_re)) {
            Vertex v;
            v.id = unquote(m[1]);
            std::string attrs = m[2];
            std::smatch a;
            if (std::regex_search(attrs, a, boundary_re)) {
                v.boundary = true;
                v.label = std::stoi(a[1]);
            } else if (std::regex_search(attrs, a, color_re)) {
                v.color = a[1] == "white" ? Color::White : a[1] == "black" ? Color::Black : Color::None;
            }
            net.vertices.push_back(std::move(v));
        }
    }
    if (net.vertices.empty()) throw parse_error("dot: no vertices found");
    net.index();
    return net;
}

std::string to_svg(const Network& net, const SvgOptions& opt) {
    double x0 = 0, x1 = 0, y1 = 0;
    bool first = true;
    auto grow = [&](const geom::Point& p) {
        double x = p.x.get_d(), y = p.y.get_d();
        if (first) x0 = x1 = x, first = false;
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    };
    for (const auto& v : net.vertices) grow(v.pos);
    for (const auto& e : net.edges)
        for (const auto& p : e.poly) grow(p);
    double size = std::max({x1 - x0, y1, 1.0});
    double margin = size * 0.12;
    double left = x0 - margin, right = x1 + margin, top = y1 + margin, bottom = -margin;
    double stroke = size / 250, r = size / 60, font = size / 45;
    auto X = [](const geom::Point& p) { return num(p.x.get_d()); };
    auto Y = [](const geom::Point& p) { return num(-p.y.get_d()); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(left) << " " << num(-top) << " "
       << num(right - left) << " " << num(top - bottom) << "\" width=\"800\" height=\""
       << static_cast<int>(800 * (top - bottom) / (right - left)) << "\">\n";
    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
          "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
    os << "<rect x=\"" << num(left) << "\" y=\"" << num(-top) << "\" width=\"" << num(right - left) << "\" height=\""
       << num(top - bottom) << "\" fill=\"#fbfbf7\"/>\n";
    os << "<line class=\"boundary\" x1=\"" << num(left) << "\" y1=\"0\" x2=\"" << num(right) << "\" y2=\"0\" stroke=\"#888\" stroke-width=\""
       << num(stroke * 2) << "\"/>\n";
    if (opt.rays) {
        for (const auto& ray : gauge_rays(net)) {
            double dx = ray.dir.dx.get_d(), dy = ray.dir.dy.get_d();
            double t = (top - ray.origin.y.get_d()) / dy;
            double ex = ray.origin.x.get_d() + t * dx, ey = top;
            os << "<line class=\"ray\" x1=\"" << X(ray.origin) << "\" y1=\"" << Y(ray.origin) << "\" x2=\"" << num(ex)
               << "\" y2=\"" << num(-ey) << "\" stroke=\"#c33\" stroke-dasharray=\"" << num(stroke * 4) << "\" stroke-width=\""
               << num(stroke) << "\"/>\n";
        }
    }
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const Edge& e = net.edges[i];
        os << "<polyline class=\"edge\" id=" << quote(xml(e.id)) << " points=\"";
        for (std::size_t k = 0; k < e.poly.size(); ++k) os << (k ? " " : "") << X(e.poly[k]) << "," << Y(e.poly[k]);
        os << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"" << num(stroke) << "\" marker-end=\"url(#arrow)\"/>\n";
        std::string label;
        if (opt.edge_ids) label = e.id;
        if (opt.vectors && i < opt.vectors->size()) label += (label.empty() ? "" : " ") + to_string((*opt.vectors)[i]);
        if (!label.empty()) {
            const auto &a = e.poly[0], &b = e.poly[1];
            geom::Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
            os << "<text x=\"" << X(m) << "\" y=\"" << Y(m) << "\" font-size=\"" << num(font)
               << "\" fill=\"#246\">" << xml(label) << "</text>\n";
        }
    }
    for (const Vertex& v : net.vertices) {
        if (v.boundary) {
            os << "<rect class=\"boundary-vertex\" x=\"" << num(v.pos.x.get_d() - r) << "\" y=\"" << num(-r) << "\" width=\""
               << num(2 * r) << "\" height=\"" << num(2 * r) << "\" fill=\"#888\"/>\n";
            os << "<text x=\"" << X(v.pos) << "\" y=\"" << num(3 * r + font / 2) << "\" font-size=\"" << num(font)
               << "\" text-anchor=\"middle\">b" << v.label << "</text>\n";
        } else {
            const char* fill = v.color == Color::Black ? "#000" : "#fff";
            os << "<circle class=\"vertex\" id=" << quote(xml(v.id)) << " cx=\"" << X(v.pos) << "\" cy=\"" << Y(v.pos)
               << "\" r=\"" << num(r) << "\" fill=\"" << fill << "\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace plabic::exporter
