#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Violated precondition on user-supplied parameters (non-prime p, e not dividing q-1, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands living in different fields.
class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Inversion of zero, discrete log of zero, non-integral results that must be integral.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The requested computation exceeds the configured work budget; nothing approximate is returned.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A closed form was requested for a case where the factorization has no such form.
class CaseMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tracecodes
