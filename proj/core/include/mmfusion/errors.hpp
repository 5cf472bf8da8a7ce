#pragma once

#include <stdexcept>

namespace mmfusion {

// A Kac label, coordinate or element lies outside its valid range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A caller-supplied argument violates a documented precondition.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The request is valid but exceeds a fixed size budget.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// A labeling or partition is malformed in a way that makes the
// requested construction undefined (e.g. identity block is not {0}).
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mmfusion
