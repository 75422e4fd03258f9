#pragma once

#include <stdexcept>
#include <string>

namespace perichain {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};
struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& msg) : Error(msg) {}
};
struct CarrierViolation : Error {
    explicit CarrierViolation(const std::string& msg) : Error(msg) {}
};
struct TooManyLinks : Error {
    explicit TooManyLinks(const std::string& msg) : Error(msg) {}
};
struct BadParameters : Error {
    explicit BadParameters(const std::string& msg) : Error(msg) {}
};
struct UnknownFormula : Error {
    explicit UnknownFormula(const std::string& msg) : Error(msg) {}
};
struct BasisMismatch : Error {
    explicit BasisMismatch(const std::string& msg) : Error(msg) {}
};
struct Singular : Error {
    explicit Singular(const std::string& msg) : Error(msg) {}
};

} // namespace perichain
