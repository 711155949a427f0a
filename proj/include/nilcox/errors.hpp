#pragma once

#include <stdexcept>
#include <string>

namespace nilcox {

// Bad argument values: shape mismatches, labels outside the index set, malformed data.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// A structurally well-formed move that is not allowed in context, e.g. swapping
// two letters whose generators do not commute.
class InvalidMove : public std::invalid_argument {
public:
    explicit InvalidMove(const std::string& what) : std::invalid_argument(what) {}
};

// Text that does not match the expression or literal grammar. position() is the
// byte offset of the offending token in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Work refused because it would blow past a configured size bound (2^n basis
// growth, packed exponent width).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nilcox
