#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace tridec {

// Input that cannot be interpreted (bad JSON, bad monomial, ...).
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cubic-coefficient map containing a monomial of total degree != 3.
struct MalformedPolynomial : MalformedInput {
    using MalformedInput::MalformedInput;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix failed the orthogonality certificate.
struct NotOrthogonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Domain outcomes that are answers rather than exceptions.
struct Failure {
    std::string code;     // machine readable: "ZeroTensor", "DegenerateEigenvalues", ...
    std::string message;  // human readable detail
};

template <class T>
class Outcome {
public:
    Outcome(T value) : v_(std::move(value)) {}
    Outcome(Failure f) : v_(std::move(f)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& operator*() const { return std::get<T>(v_); }
    T& operator*() { return std::get<T>(v_); }
    const T* operator->() const { return &std::get<T>(v_); }

    const Failure& failure() const { return std::get<Failure>(v_); }

private:
    std::variant<T, Failure> v_;
};

// Module-wide default relative tolerance for float-mode identity checks.
inline constexpr double kDefaultTol = 1e-9;

// Certification threshold for float orthogonal matrices.
inline constexpr double kOrthoTol = 1e-10;

// Relative eigenvalue gap below which eigenvector-based recovery refuses to run.
inline constexpr double kEigenGapTol = 1e-8;

}  // namespace tridec
