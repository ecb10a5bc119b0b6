#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cheeger {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument left the mathematical domain of a formula (r <= 0, chi >= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A surface description (or splitting) violates a named invariant.
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

// Malformed input document (bad JSON, missing field, wrong type).
class ParseError : public Error {
public:
    using Error::Error;
};

// A bracketed search failed (no sign change below the cap, target out of range).
class SearchError : public Error {
public:
    using Error::Error;
};

// An integrator or iterative scheme failed to reach its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

// The solver was given nothing to minimize over.
class NoCandidateError : public Error {
public:
    using Error::Error;
};

}  // namespace cheeger
