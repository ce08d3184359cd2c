#pragma once

#include "oscifit/errors.hpp"
#include "oscifit/linalg.hpp"
#include "oscifit/scheme.hpp"
#include "oscifit/scheme_series.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace oscifit {

/// Below this scaled frequency the closed-form solve loses digits to
/// cancellation (the condition numerators are O(v0^4) differences of O(1)
/// terms) and coefficients are evaluated from the exact rational series
/// instead. The two paths agree to < 1e-12 componentwise around the switch.
inline constexpr double v_switch = 0.05;

/// Admissibility bound on v0 = omega*h: keeps the fit comfortably inside
/// (0, pi) where the principal-branch phase analysis is single-valued.
inline constexpr double v_max = 2.0;

/// Truncation order of the series fallback; at v0 < v_switch the first
/// discarded term is below 1e-22, far under the dual-path budget.
inline constexpr int series_fallback_order = 12;

/// Linear system encoding the defining conditions of a scheme at v0, in the
/// unknowns active for that scheme. Size is 0 for C (no conditions; the
/// classical constants are returned downstream), 2 for T and S in (b0, b1),
/// and 3 for SD in (b0, b1, a).
template <typename Real>
struct ConditionSystem {
    int size = 0;
    std::array<std::array<Real, 3>, 3> matrix{};
    std::array<Real, 3> rhs{};
};

/// Build the defining conditions from the characteristic residual on
/// y'' = -w^2 y,
///   g(u) = 2 cos(u) (1 + u^2 b0) - (2 - a - u^2 b1),
/// differentiated in the probe frequency u and evaluated at u = v0:
///   g  = 0: 2 v^2 cos(v) b0 +     v^2 b1 + a = 2 - 2 cos(v)
///   g' = 0: (4 v cos(v) - 2 v^2 sin(v)) b0 + 2 v b1 = 2 sin(v)
///   g''= 0: (4 cos(v) - 8 v sin(v) - 2 v^2 cos(v)) b0 + 2 b1 = 2 cos(v)
/// Scheme T replaces the derivative rows by the polynomial-exactness row
/// 2 b0 + b1 = 1 (the stencil applied to y = t^2).
template <typename Real>
[[nodiscard]] ConditionSystem<Real> defining_conditions(Scheme scheme, Real v0) {
    if (!(v0 > Real(0))) throw std::invalid_argument("defining_conditions: v0 must be positive");
    const Real c = std::cos(v0);
    const Real s = std::sin(v0);
    const Real v2 = v0 * v0;

    ConditionSystem<Real> sys;
    const std::array<Real, 4> row_g{2 * v2 * c, v2, Real(1), 2 - 2 * c};
    const std::array<Real, 4> row_g1{4 * v0 * c - 2 * v2 * s, 2 * v0, Real(0), 2 * s};
    const std::array<Real, 4> row_g2{4 * c - 8 * v0 * s - 2 * v2 * c, Real(2), Real(0), 2 * c};
    const std::array<Real, 4> row_poly{Real(2), Real(1), Real(0), Real(1)};

    auto set_row = [&sys](int i, const std::array<Real, 4>& row, int width) {
        for (int j = 0; j < width; ++j) sys.matrix[i][j] = row[static_cast<std::size_t>(j)];
        sys.rhs[i] = row[3];
    };

    switch (scheme) {
        case Scheme::C:
            sys.size = 0;
            break;
        case Scheme::T:
            sys.size = 2;
            set_row(0, row_g, 2);
            set_row(1, row_poly, 2);
            break;
        case Scheme::S:
            sys.size = 2;
            set_row(0, row_g, 2);
            set_row(1, row_g1, 2);
            break;
        case Scheme::SD:
            sys.size = 3;
            set_row(0, row_g, 3);
            set_row(1, row_g1, 3);
            set_row(2, row_g2, 3);
            break;
    }
    return sys;
}

namespace detail {

/// Derived series are scheme-static; derive once and reuse across calls.
inline const SchemeSeries& cached_scheme_series(Scheme scheme) {
    static const SchemeSeries t = derive_scheme_series(Scheme::T, series_fallback_order);
    static const SchemeSeries s = derive_scheme_series(Scheme::S, series_fallback_order);
    static const SchemeSeries sd = derive_scheme_series(Scheme::SD, series_fallback_order);
    switch (scheme) {
        case Scheme::T: return t;
        case Scheme::S: return s;
        case Scheme::SD: return sd;
        case Scheme::C: break;
    }
    throw std::logic_error("cached_scheme_series: scheme C has no series");
}

} // namespace detail

/// Coefficients of a scheme at scaled frequency v0.
///
/// The coefficient functions are even in v0, so the sign is dropped first.
/// For v0 >= v_switch the defining conditions are solved in extended
/// precision (long double) -- the residuals 2 - 2cos(v) - ... cancel
/// catastrophically in plain double near zero, and the extra mantissa keeps
/// the two evaluation paths within 1e-12 of each other at the switch. Below
/// v_switch the exact rational series are evaluated by Horner instead.
[[nodiscard]] inline MethodCoefficients coefficients_for(Scheme scheme, double v0) {
    v0 = std::abs(v0);
    if (!(v0 < v_max))
        throw FrequencyOutOfRange("v0 = " + std::to_string(v0) + " outside [0, " +
                                  std::to_string(v_max) + ")");
    if (scheme == Scheme::C) return MethodCoefficients::classical(v0);

    if (v0 < v_switch) {
        const SchemeSeries& ss = detail::cached_scheme_series(scheme);
        const auto lv = static_cast<long double>(v0);
        return {v0, static_cast<double>(ss.b0.eval(lv)), static_cast<double>(ss.b1.eval(lv)),
                static_cast<double>(ss.a.eval(lv))};
    }

    const auto sys = defining_conditions<long double>(scheme, static_cast<long double>(v0));
    const auto x = solve_conditions<long double>(sys.size, sys.matrix, sys.rhs);
    return {v0, static_cast<double>(x[0]), static_cast<double>(x[1]), static_cast<double>(x[2])};
}

/// Componentwise deviation of a scheme's coefficients from the classical
/// constants along a decreasing v0 sequence; the tail must shrink below
/// 1e-10 as v0 drops under 1e-6 (the schemes collapse to the classical
/// method in the zero-frequency limit).
[[nodiscard]] inline std::vector<double> classical_limit_check(Scheme scheme,
                                                               const std::vector<double>& v0_sequence) {
    std::vector<double> deviations;
    deviations.reserve(v0_sequence.size());
    for (double v0 : v0_sequence) {
        const MethodCoefficients mc = coefficients_for(scheme, v0);
        const double d = std::max({std::abs(mc.b0 - 1.0 / 12.0), std::abs(mc.b1 - 5.0 / 6.0),
                                   std::abs(mc.a)});
        deviations.push_back(d);
    }
    return deviations;
}

} // namespace oscifit
