#pragma once

#include <stdexcept>
#include <string>

namespace isored {

// Base class for all math-level failures. CLI maps these to exit code 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument: empty/full index sets, zero denominators, bad norms, ...
struct domain_error : error {
    using error::error;
};

// A symbolic matrix that must be inverted is identically singular.
struct singularity_error : error {
    using error::error;
};

// Evaluation at a point where a denominator vanishes and no cancellation saves it.
struct pole_error : error {
    using error::error;
};

// Symbolic degree cap exceeded.
struct resource_error : error {
    using error::error;
};

// Iterative numeric kernel failed to converge.
struct numeric_error : error {
    using error::error;
};

// Two independent computation routes disagree (arithmetic bug).
struct consistency_error : error {
    using error::error;
};

// Configurable cap on symbolic polynomial degree.
int max_symbolic_degree();
void set_max_symbolic_degree(int cap);

} // namespace isored
