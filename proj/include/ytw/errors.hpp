#pragma once

#include <stdexcept>
#include <string>

namespace ytw {

// Bad arguments or malformed input. CLI exit code 2.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard resource guard (e.g. oracle size). CLI exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Floating-point trouble inside the sampler.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ytw
