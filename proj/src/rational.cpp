#include "plabic/rational.hpp"

#include "plabic/error.hpp"

#include <cctype>

namespace plabic {

std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

Q parse_rational(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw parse_error("empty rational");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool slash = false;
    bool digit = false;
    for (; i < t.size(); ++i) {
        char ch = t[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digit = true;
        } else if (ch == '/' && !slash && digit && i + 1 < t.size()) {
            slash = true;
            digit = false;
        } else {
            throw parse_error("malformed rational '" + t + "'");
        }
    }
    if (!digit) throw parse_error("malformed rational '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    Q q;
    q.set_str(t, 10);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

int sign(const Q& q) { return sgn(q); }

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec zero_vec(std::size_t n) { return QVec(n, Q(0)); }

QVec unit_vec(std::size_t n, std::size_t i) {
    QVec v(n, Q(0));
    v.at(i) = 1;
    return v;
}

QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator*(const Q& s, const QVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace plabic
