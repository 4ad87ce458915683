#pragma once

#include "plabic/network.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace plabic::io {

using Json = nlohmann::ordered_json;

Network from_json(const Json& j);
Json to_json(const Network& net);

// Parse errors carry line and column.
Json parse_text(const std::string& text);
Network read_network(const std::string& text);
std::string write_network(const Network& net);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Json vec_json(const QVec& v);
QVec vec_from_json(const Json& j);

// {"1": ["1","0"], ...} keyed by sink label.
std::map<int, QVec> bc_from_json(const Json& j, int n);

}  // namespace plabic::io
