#pragma once

#include <stdexcept>
#include <string>

namespace rvnorm {

/// Input that cannot be parsed (bad JSON, bad distribution grammar, bad flags).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition or domain violation (e.g. a moment that does not exist).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal numerical failure, e.g. eigensolver non-convergence.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rvnorm
