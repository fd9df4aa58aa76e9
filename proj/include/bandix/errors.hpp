#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandix {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke a precondition (sizes, ranges, malformed input).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidInput {
public:
    DimensionMismatch(std::string_view what, std::size_t expected, std::size_t got)
        : InvalidInput(std::string(what) + ": expected length " + std::to_string(expected) +
                       ", got " + std::to_string(got)) {}
};

class ParseError : public InvalidInput {
public:
    ParseError(std::size_t line, const std::string& msg)
        : InvalidInput("line " + std::to_string(line) + ": " + msg), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvalidSpec : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A solver could not complete on a well-formed input.
class SolverError : public Error {
public:
    using Error::Error;
};

class ZeroPivot : public SolverError {
public:
    explicit ZeroPivot(std::size_t row)
        : SolverError("zero pivot at row " + std::to_string(row)), row_(row) {}
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class ReductionPivotZero : public SolverError {
public:
    explicit ReductionPivotZero(std::size_t row)
        : SolverError("penta-to-tri reduction has a zero pivot for row " + std::to_string(row)),
          row_(row) {}
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class SingularMatrix : public SolverError {
public:
    SingularMatrix() : SolverError("matrix is singular (exact determinant is zero)") {}
};

class ZeroDiagonal : public SolverError {
public:
    explicit ZeroDiagonal(std::size_t row)
        : SolverError("zero diagonal entry at row " + std::to_string(row)), row_(row) {}
    [[nodiscard]] std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Iteration budget exhausted. Carries the last iterate and its residual norm.
class MaxIterationsExceeded : public SolverError {
public:
    MaxIterationsExceeded(std::size_t iterations, double residual, std::vector<double> best = {})
        : SolverError("no convergence after " + std::to_string(iterations) +
                      " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual), best_(std::move(best)) {}
    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }
    [[nodiscard]] const std::vector<double>& best_iterate() const noexcept { return best_; }

private:
    std::size_t iterations_;
    double residual_;
    std::vector<double> best_;
};

class Diverged : public SolverError {
public:
    Diverged(std::size_t iterations, double residual)
        : SolverError("iteration diverged at step " + std::to_string(iterations) +
                      " (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}
    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

class Stagnated : public SolverError {
public:
    Stagnated(std::size_t iterations, double residual)
        : SolverError("inversion stagnated after " + std::to_string(iterations) +
                      " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}
    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

class DenseSizeExceeded : public SolverError {
public:
    DenseSizeExceeded(std::size_t n, std::size_t cap)
        : SolverError("dense inversion refused: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap)) {}
};

class NonAffine : public SolverError {
public:
    NonAffine(double max_residual)
        : SolverError("operation counts are not affine in n (max residual " +
                      std::to_string(max_residual) + ")"),
          max_residual_(max_residual) {}
    [[nodiscard]] double max_residual() const noexcept { return max_residual_; }

private:
    double max_residual_;
};

/// Short machine-readable tag for an exception, used in report status columns.
std::string status_name(const std::exception& e);

}  // namespace bandix
