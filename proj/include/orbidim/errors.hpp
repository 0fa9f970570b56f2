#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbidim {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (signatures, group names, complex literals).
// `offset` is a byte offset into the original string, `expected` names the
// tokens that would have been accepted there.
struct parse_error : error {
    std::size_t offset;
    std::string expected;

    parse_error(const std::string& what, std::size_t off, std::string exp)
        : error(what + " at offset " + std::to_string(off) + ", expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

// Input outside the mathematical domain of an operation (k = 0, bad Lie
// parameters, non-hyperbolic input to a Hitchin formula, ...).
struct value_error : error {
    using error::error;
};

// Geometry class of the input does not match the operation's precondition.
struct geometry_error : error {
    using error::error;
};

// A parity or equality assumption baked into a formula failed.
struct inconsistency_error : error {
    using error::error;
};

// The shape is valid but this operation does not handle it.
struct not_implemented_error : error {
    using error::error;
};

// Numerical input failed a tolerance check (e.g. det != 1).
struct validation_error : error {
    using error::error;
};

}  // namespace orbidim
