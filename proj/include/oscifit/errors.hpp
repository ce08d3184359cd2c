#pragma once

#include <stdexcept>
#include <string>

namespace oscifit {

/// Base class for every failure the library can raise on its own.
/// Catching oscifit::Error separates numerical/domain failures from
/// programming errors (std::invalid_argument, std::logic_error, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series division where the divisor is identically zero at its
/// truncation order.
class DivisionByZeroSeries : public Error {
public:
    using Error::Error;
};

/// Series division where the dividend's valuation (lowest nonzero power)
/// is smaller than the divisor's, so the quotient is not a power series.
class ValuationError : public Error {
public:
    using Error::Error;
};

/// Scaled frequency v0 = omega*h outside the admissible range [0, v_max).
class FrequencyOutOfRange : public Error {
public:
    using Error::Error;
};

/// Defining-condition matrix is numerically singular (condition number
/// beyond the guard), typically v0 near a resonance of the conditions.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Characteristic-ratio denominator 1 + u^2*b0 vanished.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

/// A probe frequency left the periodicity region (|R(u)| > 2) where the
/// phase-lag derivative stencils or slope fits need real angles.
class OutsidePeriodicity : public Error {
public:
    using Error::Error;
};

/// Fixed-point corrector failed to reach tolerance within the iteration
/// cap; signals h too large for the problem's stiffness.
class CorrectorDivergence : public Error {
public:
    using Error::Error;
};

/// Exact startup requested on a problem with no exact solution attached.
class MissingExactSolution : public Error {
public:
    using Error::Error;
};

/// State hit the gravitational singularity at the origin.
class SingularOrigin : public Error {
public:
    using Error::Error;
};

} // namespace oscifit
