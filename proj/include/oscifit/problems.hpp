#pragma once

#include "oscifit/errors.hpp"
#include "oscifit/integrator.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace oscifit {

/// Newtonian two-body acceleration -y/|y|^3 (unit gravitational parameter).
[[nodiscard]] inline State kepler_rhs(const State& y) {
    const double r = std::hypot(y[0], y[1]);
    if (r < 1e-12) throw SingularOrigin("kepler_rhs: state at the origin");
    const double r3 = r * r * r;
    return {-y[0] / r3, -y[1] / r3};
}

namespace detail {

/// Solve u - eps*sin(u) = t_r in the principal frame t_r = remainder(t, 2pi).
/// Newton from u = t_r converges in a handful of iterations for eps < 1
/// (the derivative 1 - eps*cos(u) is bounded below by 1 - eps); a bisection
/// fallback on [t_r - eps, t_r + eps] covers any stagnation. Returns
/// (u_reduced, t_reduced).
[[nodiscard]] inline std::pair<double, double> solve_kepler_reduced(double eps, double t) {
    const double t_r = std::remainder(t, 2.0 * std::numbers::pi);
    double u = t_r;
    double f = u - eps * std::sin(u) - t_r;
    for (int it = 0; it < 60 && std::abs(f) > 1e-15; ++it) {
        const double u_new = u - f / (1.0 - eps * std::cos(u));
        if (u_new == u) break;
        u = u_new;
        f = u - eps * std::sin(u) - t_r;
    }
    if (std::abs(f) > 1e-14) {
        // |u - t_r| <= eps brackets the root; 200 halvings reach the
        // rounding floor from an interval of width 2 eps < 2.
        double lo = t_r - eps, hi = t_r + eps;
        auto g = [eps, t_r](double x) { return x - eps * std::sin(x) - t_r; };
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (g(mid) <= 0.0) lo = mid; else hi = mid;
        }
        u = 0.5 * (lo + hi);
    }
    return {u, t_r};
}

} // namespace detail

/// Unique root of u - eps*sin(u) = t (the eccentric anomaly at unit mean
/// motion). Solved in the principal frame and shifted back, so the residual
/// is at rounding level there regardless of the magnitude of t.
[[nodiscard]] inline double solve_kepler_equation(double eps, double t) {
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::invalid_argument("solve_kepler_equation: eccentricity must lie in [0, 1)");
    const auto [u_r, t_r] = detail::solve_kepler_reduced(eps, t);
    return (t - t_r) + u_r;
}

/// Exact orbit position (cos u - eps, sqrt(1 - eps^2) sin u). The trig
/// functions are evaluated at the reduced anomaly -- cos and sin are
/// 2pi-periodic in exact arithmetic, and the reduced argument avoids the
/// large-argument rounding a direct evaluation would pick up at big t.
[[nodiscard]] inline State kepler_exact(double eps, double t) {
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::invalid_argument("kepler_exact: eccentricity must lie in [0, 1)");
    const auto [u_r, t_r] = detail::solve_kepler_reduced(eps, t);
    (void)t_r;
    return {std::cos(u_r) - eps, std::sqrt(1.0 - eps * eps) * std::sin(u_r)};
}

/// Exact orbit velocity, from du/dt = 1 / (1 - eps*cos(u)) applied to the
/// position formulas.
[[nodiscard]] inline State kepler_exact_velocity(double eps, double t) {
    const auto [u_r, t_r] = detail::solve_kepler_reduced(eps, t);
    (void)t_r;
    const double dudt = 1.0 / (1.0 - eps * std::cos(u_r));
    return {-std::sin(u_r) * dudt, std::sqrt(1.0 - eps * eps) * std::cos(u_r) * dudt};
}

/// The orbit's working-frequency estimate w = (y1^2 + y2^2)^(-3/4), i.e.
/// r^(-3/2): exact on circular orbits, the local Kepler rate elsewhere.
[[nodiscard]] inline double kepler_frequency_estimate(const State& y) {
    const double r2 = y[0] * y[0] + y[1] * y[1];
    if (std::sqrt(r2) < 1e-12) throw SingularOrigin("kepler_frequency_estimate: state at the origin");
    return std::pow(r2, -0.75);
}

/// Specific orbital energy 0.5 |v|^2 - 1/|y|; conserved along the exact
/// orbit (and equal to -1/2 for the initial conditions used here).
[[nodiscard]] inline double kepler_energy(const State& y, const State& v) {
    const double r = std::hypot(y[0], y[1]);
    if (r < 1e-12) throw SingularOrigin("kepler_energy: state at the origin");
    return 0.5 * (v[0] * v[0] + v[1] * v[1]) - 1.0 / r;
}

/// The two-body problem at the given eccentricity: position starts at
/// perihelion (1 - eps, 0) with velocity (0, sqrt((1+eps)/(1-eps))).
[[nodiscard]] inline SecondOrderProblem kepler_problem(double eps) {
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::invalid_argument("kepler_problem: eccentricity must lie in [0, 1)");
    SecondOrderProblem p;
    p.dimension = 2;
    p.rhs = [](double, const State& y) { return kepler_rhs(y); };
    p.exact_solution = [eps](double t) { return kepler_exact(eps, t); };
    p.frequency_estimator = [](double, const State& y) { return kepler_frequency_estimate(y); };
    p.initial_state = {1.0 - eps, 0.0};
    p.initial_derivative = {0.0, std::sqrt((1.0 + eps) / (1.0 - eps))};
    return p;
}

/// y'' = -w0^2 y with exact solution cos(w0 t) y(0) + sin(w0 t)/w0 y'(0)
/// and the constant estimator w0.
[[nodiscard]] inline SecondOrderProblem harmonic_problem(double omega0, State y0 = {1.0},
                                                         State dy0 = {0.0}) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("harmonic_problem: omega0 must be positive");
    if (y0.size() != dy0.size())
        throw std::invalid_argument("harmonic_problem: initial data dimensions disagree");
    SecondOrderProblem p;
    p.dimension = static_cast<int>(y0.size());
    p.rhs = [omega0](double, const State& y) {
        State a(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) a[i] = -omega0 * omega0 * y[i];
        return a;
    };
    p.exact_solution = [omega0, y0, dy0](double t) {
        State y(y0.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = std::cos(omega0 * t) * y0[i] + std::sin(omega0 * t) / omega0 * dy0[i];
        return y;
    };
    p.frequency_estimator = [omega0](double, const State&) { return omega0; };
    p.initial_state = y0;
    p.initial_derivative = dy0;
    return p;
}

} // namespace oscifit
