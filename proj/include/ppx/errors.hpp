#pragma once

#include <stdexcept>
#include <string>

namespace ppx {

/// A polynomial or integer division that was required to be exact left a remainder.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computed quantity contradicts an identity that must hold (integrality,
/// divisibility, cross-formula agreement). Always indicates a bug or a false claim.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Binary series operation on operands truncated at different orders.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ppx
