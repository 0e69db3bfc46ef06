// Error types shared by the whole library.  Two families matter to callers:
// ValidationError (bad input, CLI exit 2) and NumericalError (a computation
// gave up, CLI exit 3).
#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// -- validation ------------------------------------------------------------

struct NotInterior : ValidationError {
    explicit NotInterior(const std::string& w = "point is not strictly interior")
        : ValidationError(w) {}
};

struct NonUnitDirection : ValidationError {
    explicit NonUnitDirection(const std::string& w = "direction is not unit length")
        : ValidationError(w) {}
};

struct CoincidentPoints : ValidationError {
    explicit CoincidentPoints(const std::string& w = "points coincide")
        : ValidationError(w) {}
};

struct OutOfDomain : ValidationError {
    explicit OutOfDomain(const std::string& w = "argument outside the function domain")
        : ValidationError(w) {}
};

struct InvalidParameter : ValidationError {
    using ValidationError::ValidationError;
};

struct NotSymmetric : ValidationError {
    explicit NotSymmetric(const std::string& w =
        "operation requires a domain centrally symmetric about its basepoint")
        : ValidationError(w) {}
};

struct InsufficientData : ValidationError {
    using ValidationError::ValidationError;
};

struct InsufficientGaps : ValidationError {
    using ValidationError::ValidationError;
};

struct NotInSet : ValidationError {
    explicit NotInSet(const std::string& w = "point is not in the regular set")
        : ValidationError(w) {}
};

struct ExponentOrder : ValidationError {
    explicit ExponentOrder(const std::string& w =
        "source exponent must be smaller than target exponent (p_src > p_tgt)")
        : ValidationError(w) {}
};

struct BaseMapNotInjective : ValidationError {
    explicit BaseMapNotInjective(const std::string& w = "base map collides on sampled points")
        : ValidationError(w) {}
};

struct NotOrderPreserving : ValidationError {
    explicit NotOrderPreserving(const std::string& w = "map is not strictly order preserving")
        : ValidationError(w) {}
};

struct SpecError : ValidationError {
    using ValidationError::ValidationError;
};

// -- numerical -------------------------------------------------------------

struct QuadratureNonConvergent : NumericalError {
    explicit QuadratureNonConvergent(const std::string& w =
        "adaptive quadrature exceeded its refinement depth cap")
        : NumericalError(w) {}
};

struct NoIntersection : NumericalError {
    explicit NoIntersection(const std::string& w = "ray/boundary intersection not found")
        : NumericalError(w) {}
};

struct NonConvexOutput : NumericalError {
    explicit NonConvexOutput(const std::string& w = "constructed boundary is not convex")
        : NumericalError(w) {}
};

}  // namespace hilbert
