#pragma once

#include <stdexcept>
#include <string>

namespace gapower {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or contradictory input: bad files, duplicate harmonic orders,
/// mismatched fundamentals, precondition violations on operands.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A well-formed request whose result is undefined for the given data,
/// e.g. a power factor when no active power flows.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// A compensator synthesis problem with no passive solution: negative branch
/// capacitance, a pole placed on a present harmonic, a singular design system.
class InfeasibleDesign : public Error {
public:
    using Error::Error;
};

} // namespace gapower
