#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Arithmetic between values of two different quadratic fields.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix or vector dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed scalar string or JSON document.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parametrized derivation assignment violates one of its linear constraints.
class ConstraintViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structure-constant table fails the Leibniz identity.
class LeibnizViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace leibniz

#endif  // LEIBNIZ_ERRORS_HPP
