#pragma once

#include <stdexcept>
#include <string>

namespace polylog {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A form was evaluated too close to the zero locus of one of its atoms.
struct singular_error : error {
    using error::error;
};

/// A path failed clearance validation or is otherwise malformed.
struct path_error : error {
    using error::error;
};

/// Step-doubling refinement or a series did not reach the target tolerance.
struct convergence_error : error {
    using error::error;
};

}  // namespace polylog
