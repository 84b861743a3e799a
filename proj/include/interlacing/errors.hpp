#pragma once

#include <stdexcept>
#include <string>

namespace interlacing {

/// A precondition on the caller's input was violated (zero polynomial,
/// degree mismatch, malformed file, non-Hermitian matrix, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Sturm count was requested at an endpoint that is itself a root.
class EndpointIsRoot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A result that holds for every valid input failed to hold. Always a bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace interlacing
