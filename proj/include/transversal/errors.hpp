#pragma once

#include <stdexcept>
#include <string>

namespace transversal {

/// Malformed input: an element outside the ground set, a non-square matrix,
/// a relation with a cycle, and so on.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The instance is larger than the configured desk-scale ceiling of an
/// exponential-time operation.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// extend_row was asked to grow a rectangle that is already a square.
class AlreadyComplete : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

inline void check_ceiling(std::size_t size, std::size_t ceiling, const std::string& what) {
    if (size > ceiling) {
        throw ResourceLimit(what + " of " + std::to_string(size) + " exceeds ceiling " +
                            std::to_string(ceiling));
    }
}

} // namespace transversal
