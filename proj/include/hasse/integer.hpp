#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hasse {

/// Exact integer coefficient type. Overflow cannot happen.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an argument violates a documented precondition
/// (box bounds, arity mismatch, out-of-range order).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when textual or JSON input cannot be parsed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace hasse
