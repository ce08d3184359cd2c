#pragma once

#include "oscifit/coefficients.hpp"
#include "oscifit/errors.hpp"
#include "oscifit/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace oscifit {

/// Phase behaviour of the stencil at one probe frequency u = omega*h.
///
/// Inside the periodicity region both characteristic roots sit on the unit
/// circle: theta is the angular advance per step, phase_lag = u - theta the
/// per-step angle defect against the exact rotation, and the amplification
/// is exactly 1. Outside, the roots are real and the sample is flagged:
/// theta and phase_lag are NaN and amplification carries the spurious
/// modulus growth per step.
struct PhaseLagSample {
    double u = 0.0;
    double theta = 0.0;
    double phase_lag = 0.0;
    double amplification = 1.0;
    bool in_periodicity = true;
};

/// R(u) = (2 - a - u^2 b1) / (1 + u^2 b0): the stencil applied to
/// y'' = -w^2 y gives y_{n+1} - R y_n + y_{n-1} = 0, so the characteristic
/// roots solve z^2 - R z + 1 = 0 and equal e^{+-i theta} with 2 cos(theta)
/// = R whenever |R| <= 2.
[[nodiscard]] inline double characteristic_ratio(const MethodCoefficients& mc, double u) {
    const double den = 1.0 + u * u * mc.b0;
    if (std::abs(den) < 1e-14)
        throw DegenerateDenominator("characteristic ratio: 1 + u^2 b0 vanished at u = " +
                                    std::to_string(u));
    return (2.0 - mc.a - u * u * mc.b1) / den;
}

[[nodiscard]] inline PhaseLagSample phase_lag_at(const MethodCoefficients& mc, double u) {
    if (!(u > 0.0) || !(u < std::numbers::pi))
        throw std::invalid_argument("phase_lag_at: probe u must lie in (0, pi)");
    const double r = characteristic_ratio(mc, u);
    PhaseLagSample sample;
    sample.u = u;
    if (std::abs(r) <= 2.0) {
        sample.theta = std::acos(std::clamp(r / 2.0, -1.0, 1.0));
        sample.phase_lag = u - sample.theta;
        sample.amplification = 1.0;
        sample.in_periodicity = true;
    } else {
        sample.theta = std::numeric_limits<double>::quiet_NaN();
        sample.phase_lag = std::numeric_limits<double>::quiet_NaN();
        sample.amplification = (std::abs(r) + std::sqrt(r * r - 4.0)) / 2.0;
        sample.in_periodicity = false;
    }
    return sample;
}

namespace detail {

/// l(u) for a frozen coefficient set, failing hard outside periodicity
/// (the derivative stencils and slope fits need real angles).
[[nodiscard]] inline double phase_lag_value(const MethodCoefficients& mc, double u) {
    const PhaseLagSample s = phase_lag_at(mc, u);
    if (!s.in_periodicity)
        throw OutsidePeriodicity("phase lag: probe u = " + std::to_string(u) +
                                 " outside the periodicity region");
    return s.phase_lag;
}

} // namespace detail

/// Derivatives l'(v0), ..., l^(k)(v0) of the phase lag in the probe
/// frequency, k = 1..max_order (<= 4), with coefficients frozen at v0.
///
/// Central differences with base step 1e-3 plus one level of Richardson
/// extrapolation: the base step balances the O(h^2) stencil truncation
/// against the ~1e-16 rounding floor of arccos, and the extrapolation
/// removes the leading error term without another step-size gamble.
[[nodiscard]] inline std::vector<double> phase_lag_derivatives(Scheme scheme, double v0,
                                                               int max_order) {
    if (!(v0 > 0.0) || !(v0 < std::numbers::pi))
        throw std::invalid_argument("phase_lag_derivatives: v0 must lie in (0, pi)");
    if (max_order < 1 || max_order > 4)
        throw std::invalid_argument("phase_lag_derivatives: max_order must be 1..4");

    const MethodCoefficients mc = coefficients_for(scheme, v0);
    const auto lag = [&mc](double u) { return detail::phase_lag_value(mc, u); };

    const auto d1 = [&lag, v0](double h) { return (lag(v0 + h) - lag(v0 - h)) / (2 * h); };
    const auto d2 = [&lag, v0](double h) {
        return (lag(v0 + h) - 2 * lag(v0) + lag(v0 - h)) / (h * h);
    };
    const auto d3 = [&lag, v0](double h) {
        return (lag(v0 + 2 * h) - 2 * lag(v0 + h) + 2 * lag(v0 - h) - lag(v0 - 2 * h)) /
               (2 * h * h * h);
    };
    const auto d4 = [&lag, v0](double h) {
        return (lag(v0 + 2 * h) - 4 * lag(v0 + h) + 6 * lag(v0) - 4 * lag(v0 - h) +
                lag(v0 - 2 * h)) /
               (h * h * h * h);
    };
    const auto richardson = [](const auto& d, double h) {
        return (4.0 * d(h / 2) - d(h)) / 3.0; // both stencils are O(h^2)
    };

    const double h = 1e-3;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(max_order));
    out.push_back(richardson(d1, h));
    if (max_order >= 2) out.push_back(richardson(d2, h));
    if (max_order >= 3) out.push_back(richardson(d3, h));
    if (max_order >= 4) out.push_back(richardson(d4, h));
    return out;
}

/// Least-squares line through (log delta, log |l(v0 + delta)|).
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Default probe-offset grid: 9 points log-spaced over [1e-3, 1e-1].
[[nodiscard]] inline std::vector<double> default_delta_grid() {
    std::vector<double> grid;
    grid.reserve(9);
    for (int i = 0; i < 9; ++i) grid.push_back(std::pow(10.0, -3.0 + 0.25 * i));
    return grid;
}

/// Fitted log-log slope of the phase lag against the probe offset: the
/// empirical frequency-sensitivity order. Slope ~ 1 for T, ~ 2 for S,
/// ~ 3 for SD (one extra order per vanishing derivative); for C the lag
/// does not vanish at v0, so its slope is not a detuning order.
[[nodiscard]] inline SlopeFit sensitivity_order(Scheme scheme, double v0,
                                                const std::vector<double>& delta_grid) {
    if (delta_grid.size() < 2)
        throw std::invalid_argument("sensitivity_order: need at least two probe offsets");
    for (double d : delta_grid)
        if (!(d >= 1e-3 * (1 - 1e-9)) || !(d <= 1e-1 * (1 + 1e-9)))
            throw std::invalid_argument("sensitivity_order: delta grid must lie in [1e-3, 1e-1]");
    const double dmax = *std::max_element(delta_grid.begin(), delta_grid.end());
    if (!(v0 + dmax < std::numbers::pi))
        throw std::invalid_argument("sensitivity_order: v0 + max(delta) must stay below pi");

    const MethodCoefficients mc = coefficients_for(scheme, v0);
    std::vector<double> xs, ys;
    xs.reserve(delta_grid.size());
    ys.reserve(delta_grid.size());
    for (double d : delta_grid) {
        xs.push_back(std::log(d));
        ys.push_back(std::log(std::abs(detail::phase_lag_value(mc, v0 + d))));
    }

    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

/// One scheme's sample at one probe frequency of a frozen-v0 sweep.
struct PhaseLagCurveRow {
    Scheme scheme = Scheme::C;
    PhaseLagSample sample;
};

/// Sweep the probe frequency across u_grid for each scheme, coefficients
/// frozen at v0 (the classical row ignores v0 by construction). Samples
/// outside periodicity are flagged, never dropped.
[[nodiscard]] inline std::vector<PhaseLagCurveRow> phase_lag_curve(
    const std::vector<Scheme>& schemes, double v0, const std::vector<double>& u_grid) {
    std::vector<PhaseLagCurveRow> rows;
    rows.reserve(schemes.size() * u_grid.size());
    for (Scheme scheme : schemes) {
        const MethodCoefficients mc = coefficients_for(scheme, v0);
        for (double u : u_grid) rows.push_back({scheme, phase_lag_at(mc, u)});
    }
    return rows;
}

} // namespace oscifit
