#pragma once

#include <stdexcept>
#include <string>

namespace topo {

enum class ErrorKind {
    invalid_argument,  // bad inputs: unknown node, empty graph where one is required
    domain,            // value outside a formula's domain (e.g. gamma <= 1)
    parse,             // unrecoverable parse failure (not per-line rejections)
    io,                // file system errors
    internal,          // bugs / failed internal invariants
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace topo
