#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace entropygraph {

/// Base of every error raised by the library.  Each error carries the process
/// exit status the CLI reports for it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
    virtual const char* kind() const noexcept { return "Error"; }
};

/// Invalid input: malformed files, out-of-range parameters, violated preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ValidationError"; }
};

class NoFeasibleK : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "NoFeasibleK"; }
};

class OddM : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "OddM"; }
};

class SumMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "SumMismatch"; }
};

class DisjointImages : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "DisjointImages"; }
};

class WeightOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "WeightOutOfRange"; }
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "DomainError"; }
};

class EmptyFamily : public ValidationError {
public:
    using ValidationError::ValidationError;
    const char* kind() const noexcept override { return "EmptyFamily"; }
};

/// An enumeration or search would exceed its configured budget.
class SizeGuard : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
    const char* kind() const noexcept override { return "SizeGuard"; }
};

/// The input admits no object of the requested kind (e.g. a non-graphical sequence).
class Infeasible : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
    const char* kind() const noexcept override { return "Infeasible"; }
};

/// The entropy maximiser sits on the boundary of the polytope; no interior solution exists.
class BoundaryOptimum : public Infeasible {
public:
    using Infeasible::Infeasible;
    const char* kind() const noexcept override { return "BoundaryOptimum"; }
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, std::vector<double> residuals, int iterations)
        : Error(what), residuals_(std::move(residuals)), iterations_(iterations) {}

    int exit_code() const noexcept override { return 3; }
    const char* kind() const noexcept override { return "NonConvergence"; }

    const std::vector<double>& residuals() const noexcept { return residuals_; }
    int iterations() const noexcept { return iterations_; }

private:
    std::vector<double> residuals_;
    int iterations_;
};

} // namespace entropygraph
