#include "plabic/io.hpp"

#include "plabic/error.hpp"

#include <fstream>
#include <sstream>

namespace plabic::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error("missing field '" + std::string(key) + "' in " + where);
    return j.at(key);
}

Q rat(const Json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    throw parse_error("expected rational string in " + where);
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) throw parse_error("expected string in " + where);
    return j.get<std::string>();
}

}  // namespace

Network from_json(const Json& j) {
    Network net;
    if (!j.is_object()) throw parse_error("network must be a JSON object");
    const Json& n = field(j, "n", "network");
    if (!n.is_number_integer()) throw parse_error("'n' must be an integer");
    net.n = n.get<int>();
    const Json& g = field(j, "gauge_dir", "network");
    if (!g.is_array() || g.size() != 2) throw parse_error("'gauge_dir' must be a pair");
    net.gauge = {rat(g[0], "gauge_dir"), rat(g[1], "gauge_dir")};
    for (const Json& v : field(j, "vertices", "network")) {
        Vertex x;
        x.id = str(field(v, "id", "vertex"), "vertex id");
        std::string where = "vertex '" + x.id + "'";
        std::string kind = str(field(v, "kind", where), where);
        if (kind == "boundary") {
            x.boundary = true;
            const Json& l = field(v, "label", where);
            if (!l.is_number_integer()) throw parse_error("label must be an integer in " + where);
            x.label = l.get<int>();
        } else if (kind == "internal") {
            std::string c = str(field(v, "color", where), where);
            if (c == "white")
                x.color = Color::White;
            else if (c == "black")
                x.color = Color::Black;
            else
                throw parse_error("unknown color '" + c + "' in " + where);
        } else {
            throw parse_error("unknown kind '" + kind + "' in " + where);
        }
        x.pos = {rat(field(v, "x", where), where), rat(field(v, "y", where), where)};
        net.vertices.push_back(std::move(x));
    }
    for (const Json& e : field(j, "edges", "network")) {
        Edge x;
        x.id = str(field(e, "id", "edge"), "edge id");
        std::string where = "edge '" + x.id + "'";
        x.tail = str(field(e, "tail", where), where);
        x.head = str(field(e, "head", where), where);
        x.weight = rat(field(e, "weight", where), where);
        for (const Json& p : field(e, "polyline", where)) {
            if (!p.is_array() || p.size() != 2) throw parse_error("polyline points are pairs in " + where);
            x.poly.push_back({rat(p[0], where), rat(p[1], where)});
        }
        net.edges.push_back(std::move(x));
    }
    try {
        net.index();
    } catch (const Error& e) {
        throw parse_error(e.what());
    }
    return net;
}

Json to_json(const Network& net) {
    Json j;
    j["n"] = net.n;
    j["gauge_dir"] = Json::array({to_string(net.gauge.dx), to_string(net.gauge.dy)});
    Json vs = Json::array();
    for (const Vertex& v : net.vertices) {
        Json x;
        x["id"] = v.id;
        x["kind"] = v.boundary ? "boundary" : "internal";
        if (v.boundary)
            x["label"] = v.label;
        else
            x["color"] = color_name(v.color);
        x["x"] = to_string(v.pos.x);
        x["y"] = to_string(v.pos.y);
        vs.push_back(std::move(x));
    }
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const Edge& e : net.edges) {
        Json x;
        x["id"] = e.id;
        x["tail"] = e.tail;
        x["head"] = e.head;
        x["weight"] = to_string(e.weight);
        Json poly = Json::array();
        for (const auto& p : e.poly) poly.push_back(Json::array({to_string(p.x), to_string(p.y)}));
        x["polyline"] = std::move(poly);
        es.push_back(std::move(x));
    }
    j["edges"] = std::move(es);
    return j;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error("JSON syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col));
    }
}

Network read_network(const std::string& text) { return from_json(parse_text(text)); }

std::string write_network(const Network& net) { return to_json(net).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

Json vec_json(const QVec& v) {
    Json a = Json::array();
    for (const Q& x : v) a.push_back(to_string(x));
    return a;
}

QVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("expected array of rationals");
    QVec v;
    for (const Json& x : j) v.push_back(rat(x, "vector"));
    return v;
}

std::map<int, QVec> bc_from_json(const Json& j, int n) {
    if (!j.is_object()) throw parse_error("boundary conditions must be an object keyed by sink label");
    std::map<int, QVec> bc;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int label = 0;
        try {
            label = std::stoi(it.key());
        } catch (...) {
            throw parse_error("bad sink label '" + it.key() + "'");
        }
        QVec v = vec_from_json(it.value());
        if (static_cast<int>(v.size()) != n) throw parse_error("boundary vector length must be n");
        bc[label] = std::move(v);
    }
    return bc;
}

}  // namespace plabic::io
