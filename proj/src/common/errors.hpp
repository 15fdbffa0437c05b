#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace witten {

// Bad argument or value outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation hit a pole of the function or of an intermediate term.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, std::complex<double> at)
        : std::runtime_error(what), location_(at) {}
    std::complex<double> location() const { return location_; }

private:
    std::complex<double> location_;
};

// Series or quadrature did not reach its target within the budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::complex<double> estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    std::complex<double> estimate() const { return estimate_; }
    double achieved_error() const { return error_; }

private:
    std::complex<double> estimate_;
    double error_;
};

// Linear solve too ill-conditioned to trust.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by the zero polynomial or zero rational.
class ZeroDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Limit p -> 1 is 0 or infinite.
class DegenerateLimitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numeric parameter violates a family's hypotheses (e.g. p = 2).
class ConstraintError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace witten
