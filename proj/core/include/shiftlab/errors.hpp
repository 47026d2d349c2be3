#pragma once
#include <stdexcept>
#include <string>

namespace shiftlab {

// Malformed vertex text or a vertex of the wrong kind handed to a family oracle.
struct EncodingError : std::invalid_argument {
    explicit EncodingError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed a configured resource cap (truncation vertex count).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shiftlab
