#pragma once

#include "oscifit/scheme.hpp"
#include "oscifit/series.hpp"

#include <stdexcept>

namespace oscifit {

/// The three coefficient functions of a scheme as exact rational series
/// in the scaled frequency v (a is the zero series except for SD).
struct SchemeSeries {
    Series b0;
    Series b1;
    Series a;
};

/// Derive the coefficient series of a scheme from its defining conditions,
/// solved symbolically over the rational-series ring.
///
/// The residual of the stencil's characteristic equation on y'' = -w^2 y is
///   g(v) = 2 cos(v) (1 + v^2 b0) - (2 - a - v^2 b1),
/// and the conditions are
///   T : g(v) = 0 together with 2 b0 + b1 = 1, a = 0
///   S : g(v) = g'(v) = 0, a = 0
///   SD: g(v) = g'(v) = g''(v) = 0.
/// Solving each triangular system by hand gives quotient arrangements whose
/// numerators and denominators share their valuation, so series division is
/// always legal:
///   T : b0 = (2 - 2 cos v - v^2)            / (2 v^2 (cos v - 1))
///   S : b0 = (2 - 2 cos v - v sin v)        / (v^3 sin v)
///       b1 = ((2 - 2 cos v) - 2 v^2 cos v b0) / v^2
///   SD: b0 = (2 sin v - 2 v cos v)          / (2 v^3 cos v + 6 v^2 sin v)
///       b1 = cos v + (v^2 cos v + 4 v sin v - 2 cos v) b0
///       a  = (2 - 2 cos v) - 2 v^2 cos v b0 - v^2 b1
///
/// The returned series are truncated to `order`; all three limits at v = 0
/// are the classical weights (1/12, 5/6, 0).
[[nodiscard]] inline SchemeSeries derive_scheme_series(Scheme scheme, int order) {
    if (order < 6) throw std::invalid_argument("derive_scheme_series: order must be >= 6");

    if (scheme == Scheme::C) {
        return {Series::constant(Rational(1, 12), order),
                Series::constant(Rational(5, 6), order),
                Series(order)};
    }

    // Work a few terms past the request so the valuation shifts of the
    // divisions (up to v^4) never eat into the returned orders.
    const int m = order + 6;
    const Series cos_v = cos_series(m);
    const Series sin_v = sin_series(m);
    const Series two = Series::constant(2, m);
    const Series two_minus_2cos = two - Rational(2) * cos_v; // valuation 2

    switch (scheme) {
        case Scheme::T: {
            // numerator 2 - 2cos v - v^2 and denominator 2v^2 (cos v - 1)
            // both have valuation 4.
            const Series num = two_minus_2cos - Series::monomial(1, 2, m);
            const Series den = ((cos_v - Series::constant(1, m)) * Rational(2)).shifted_up(2).truncated(m);
            const Series b0 = num / den;                        // order m - 4
            const Series b1 = Series::constant(1, b0.order()) - Rational(2) * b0;
            return {b0.truncated(order), b1.truncated(order), Series(order)};
        }
        case Scheme::S: {
            // numerator 2 - 2cos v - v sin v and denominator v^3 sin v:
            // both valuation 4.
            const Series num = two_minus_2cos - sin_v.shifted_up(1).truncated(m);
            const Series den = sin_v.shifted_up(3).truncated(m);
            const Series b0 = num / den;                        // order m - 4
            const Series b1num =
                two_minus_2cos.truncated(b0.order()) -
                ((cos_v.truncated(b0.order()) * b0) * Rational(2)).shifted_up(2).truncated(b0.order());
            const Series b1 = b1num / Series::monomial(1, 2, b1num.order());
            return {b0.truncated(order), b1.truncated(order), Series(order)};
        }
        case Scheme::SD: {
            // numerator 2 sin v - 2 v cos v and denominator
            // 2 v^3 cos v + 6 v^2 sin v: both valuation 3.
            const Series num = Rational(2) * sin_v - (Rational(2) * cos_v).shifted_up(1).truncated(m);
            const Series den = (Rational(2) * cos_v).shifted_up(3).truncated(m) +
                               (Rational(6) * sin_v).shifted_up(2).truncated(m);
            const Series b0 = num / den; // order m - 3
            const int n = b0.order();
            const Series poly = cos_v.shifted_up(2).truncated(n) +
                                (Rational(4) * sin_v).shifted_up(1).truncated(n) -
                                (Rational(2) * cos_v).truncated(n);
            const Series b1 = cos_v.truncated(n) + b0 * poly;
            const Series a = two_minus_2cos.truncated(n) -
                             ((cos_v.truncated(n) * b0) * Rational(2)).shifted_up(2).truncated(n) -
                             b1.shifted_up(2).truncated(n);
            return {b0.truncated(order), b1.truncated(order), a.truncated(order)};
        }
        case Scheme::C:
            break; // handled above
    }
    throw std::logic_error("derive_scheme_series: unknown scheme");
}

} // namespace oscifit
