#ifndef OTRANS_ERRORS_HPP
#define OTRANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace otrans {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or out-of-domain input (negative density, t <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Grid too coarse to resolve the filter scale (dx > alpha).
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Operation called on the wrong Riemann case.
class CaseError : public Error {
public:
    using Error::Error;
};

/// Kernel or field evaluation returned a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Particle positions lost strict monotonicity during advection.
class CrossingError : public Error {
public:
    CrossingError(const std::string& what, double t) : Error(what), time(t) {}
    double time;
};

/// Solver failure: instability, non-convergence, determinacy violation.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double achieved)
        : Error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

} // namespace otrans

#endif
