#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Invalid input data: malformed permutations, broken invariants, bad files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured bound (enumeration / classification limits).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; valid inputs can never trigger this.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace atlas
