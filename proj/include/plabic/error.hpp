#pragma once

#include <stdexcept>
#include <string>

namespace plabic {

enum class ErrorKind { Input, Genericity, Resource, Parse, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& m) { return Error(ErrorKind::Input, m); }
inline Error genericity_error(const std::string& m) { return Error(ErrorKind::Genericity, m); }
inline Error resource_error(const std::string& m) { return Error(ErrorKind::Resource, m); }
inline Error parse_error(const std::string& m) { return Error(ErrorKind::Parse, m); }
inline Error internal_error(const std::string& m) { return Error(ErrorKind::Internal, m); }

}  // namespace plabic
