#ifndef FFMOBIUS_ERRORS_HPP
#define FFMOBIUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffmobius {

// Thrown when a Laurent-series window is too short to answer the question
// asked of it. Under-precision is never silently truncated.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a requested computation exceeds the configured desk-scale caps.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ffmobius

#endif
