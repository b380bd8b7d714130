#pragma once

#include <stdexcept>

namespace taxdist {

/// Thrown when an argument violates the precondition of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace taxdist
