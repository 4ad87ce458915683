#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace plabic {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

// Canonical form: "p" or "p/q", reduced, sign on the numerator.
std::string to_string(const Q& q);
Q parse_rational(std::string_view s);

int sign(const Q& q);
bool is_zero(const QVec& v);
QVec zero_vec(std::size_t n);
QVec unit_vec(std::size_t n, std::size_t i);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Q& s, const QVec& v);
std::string to_string(const QVec& v);

}  // namespace plabic
