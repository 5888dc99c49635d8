#ifndef OTRANS_QUADRATURE_HPP
#define OTRANS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace otrans::quad {

/// Adaptive Gauss-Kronrod integral of f over [a, b] to absolute tolerance
/// tol. Throws PrecisionError if the error estimate stays above tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

/// Same, but the interval is first split at the given interior breakpoints
/// (values outside (a, b) are ignored). Use for integrands with kinks.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::vector<double> breakpoints, double tol = 1e-12);

/// Non-adaptive 15-point Gauss-Kronrod on a single panel. No error control;
/// intended for smooth integrands on panels the caller has already graded.
double gk15(const std::function<double(double)>& f, double a, double b);

} // namespace otrans::quad

#endif
