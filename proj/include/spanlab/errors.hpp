#pragma once

#include <stdexcept>
#include <string>

namespace spanlab {

// Error categories map 1:1 onto the C API status codes.
enum class ErrorKind {
    Io,
    Parse,
    Config,
    Invalid,
    Unsupported,
    NotImplemented,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error io_error(const std::string& w) { return Error(ErrorKind::Io, w); }
inline Error parse_error(const std::string& w) { return Error(ErrorKind::Parse, w); }
inline Error config_error(const std::string& w) { return Error(ErrorKind::Config, w); }
inline Error invalid_error(const std::string& w) { return Error(ErrorKind::Invalid, w); }
inline Error unsupported_error(const std::string& w) { return Error(ErrorKind::Unsupported, w); }
inline Error not_implemented_error(const std::string& w) { return Error(ErrorKind::NotImplemented, w); }

}  // namespace spanlab
