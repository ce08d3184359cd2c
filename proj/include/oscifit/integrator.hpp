#pragma once

#include "oscifit/coefficients.hpp"
#include "oscifit/errors.hpp"
#include "oscifit/scheme.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace oscifit {

using State = std::vector<double>;

/// A second-order system y'' = f(t, y) with optional exact solution and
/// frequency estimator (both may be empty std::functions).
struct SecondOrderProblem {
    int dimension = 1;
    std::function<State(double, const State&)> rhs;
    std::function<State(double)> exact_solution;                 ///< optional
    std::function<double(double, const State&)> frequency_estimator; ///< optional
    State initial_state;
    State initial_derivative;
};

enum class FrequencyMode { fixed, per_step };
enum class StartupMode { exact, bootstrap };

struct IntegrationConfig {
    double h = 0.1;
    long num_steps = 0;
    Scheme scheme = Scheme::C;
    FrequencyMode frequency_mode = FrequencyMode::fixed;
    double omega0 = 1.0; ///< fitting frequency in fixed mode
    double corrector_tol = 1e-14;
    int corrector_max_iters = 50;
    StartupMode startup = StartupMode::exact;
};

/// Output of a run: uniform times t_n = n*h, the states, and (when the
/// problem carries an exact solution) the per-step Euclidean position
/// errors plus their mean and max. Corrector effort is tallied so runs can
/// report iteration statistics alongside the errors.
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<double> per_step_error; ///< empty without an exact solution
    double mean_error = std::numeric_limits<double>::quiet_NaN();
    double max_error = std::numeric_limits<double>::quiet_NaN();
    long corrector_total_iters = 0;
    int corrector_max_iters_step = 0;
};

namespace detail {

[[nodiscard]] inline double max_abs(const State& y) {
    double m = 0.0;
    for (double c : y) m = std::max(m, std::abs(c));
    return m;
}

[[nodiscard]] inline double euclidean_distance(const State& a, const State& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc);
}

/// One classical RK4 substep on the equivalent first-order system
/// (y, w)' = (w, f(t, y)).
inline void rk4_substep(const SecondOrderProblem& p, double t, double dt, State& y, State& w) {
    const std::size_t d = y.size();
    const State k1y = w;
    const State k1w = p.rhs(t, y);
    State y2(d), w2(d);
    for (std::size_t i = 0; i < d; ++i) {
        y2[i] = y[i] + 0.5 * dt * k1y[i];
        w2[i] = w[i] + 0.5 * dt * k1w[i];
    }
    const State k2y = w2;
    const State k2w = p.rhs(t + 0.5 * dt, y2);
    for (std::size_t i = 0; i < d; ++i) {
        y2[i] = y[i] + 0.5 * dt * k2y[i];
        w2[i] = w[i] + 0.5 * dt * k2w[i];
    }
    const State k3y = w2;
    const State k3w = p.rhs(t + 0.5 * dt, y2);
    for (std::size_t i = 0; i < d; ++i) {
        y2[i] = y[i] + dt * k3y[i];
        w2[i] = w[i] + dt * k3w[i];
    }
    const State k4y = w2;
    const State k4w = p.rhs(t + dt, y2);
    for (std::size_t i = 0; i < d; ++i) {
        y[i] += dt / 6.0 * (k1y[i] + 2 * k2y[i] + 2 * k3y[i] + k4y[i]);
        w[i] += dt / 6.0 * (k1w[i] + 2 * k2w[i] + 2 * k3w[i] + k4w[i]);
    }
}

} // namespace detail

/// Produce the two starting values the two-step stencil needs. Exact mode
/// reads y1 = exact_solution(h); bootstrap mode integrates the equivalent
/// first-order system from (y(0), y'(0)) to t = h with classical RK4 over
/// 100 substeps of h/100, accurate far beyond the stencil's own order.
[[nodiscard]] inline std::pair<State, State> startup_state(const SecondOrderProblem& problem,
                                                           const IntegrationConfig& config) {
    if (problem.initial_state.size() != static_cast<std::size_t>(problem.dimension) ||
        problem.initial_derivative.size() != static_cast<std::size_t>(problem.dimension))
        throw std::invalid_argument("startup_state: initial data does not match dimension");

    if (config.startup == StartupMode::exact) {
        if (!problem.exact_solution)
            throw MissingExactSolution("exact startup requested but the problem has no exact solution");
        return {problem.initial_state, problem.exact_solution(config.h)};
    }

    State y = problem.initial_state;
    State w = problem.initial_derivative;
    const int substeps = 100;
    const double dt = config.h / substeps;
    for (int i = 0; i < substeps; ++i)
        detail::rk4_substep(problem, i * dt, dt, y, w);
    return {problem.initial_state, y};
}

/// Advance one step: find y_{n+1} with
///   y_{n+1} = (2 - a) y_n - y_{n-1} + h^2 (b0 (f_{n-1} + f(t_{n+1}, y_{n+1})) + b1 f_n)
/// by fixed-point iteration from the predictor
///   y_pred = (2 - a) y_n - y_{n-1} + h^2 (2 b0 + b1) f_n,
/// converged when the update is below corrector_tol relative to the state
/// (max-norm). The iteration contracts whenever h^2 |b0| Lip(f) < 1; the
/// stencil's b0 ~ 1/12 keeps that far below 1 at sane step sizes.
[[nodiscard]] inline State step(const SecondOrderProblem& problem, const MethodCoefficients& mc,
                                double h, double t_n, const State& y_prev, const State& y_n,
                                double corrector_tol = 1e-14, int corrector_max_iters = 50,
                                int* iterations_out = nullptr) {
    const std::size_t d = y_n.size();
    const State f_prev = problem.rhs(t_n - h, y_prev);
    const State f_n = problem.rhs(t_n, y_n);

    // Fixed part of the update plus the predictor.
    State base(d), y_next(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double drift = (2.0 - mc.a) * y_n[i] - y_prev[i];
        base[i] = drift + h * h * (mc.b0 * f_prev[i] + mc.b1 * f_n[i]);
        y_next[i] = drift + h * h * (2.0 * mc.b0 + mc.b1) * f_n[i];
    }

    const double t_next = t_n + h;
    for (int it = 1; it <= corrector_max_iters; ++it) {
        const State f_next = problem.rhs(t_next, y_next);
        State y_new(d);
        double delta = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            y_new[i] = base[i] + h * h * mc.b0 * f_next[i];
            delta = std::max(delta, std::abs(y_new[i] - y_next[i]));
        }
        y_next = std::move(y_new);
        if (delta <= corrector_tol * std::max(1.0, detail::max_abs(y_next))) {
            if (iterations_out) *iterations_out = it;
            return y_next;
        }
    }
    throw CorrectorDivergence("corrector did not converge in " +
                              std::to_string(corrector_max_iters) + " iterations at t = " +
                              std::to_string(t_n) + " (h too large for this problem?)");
}

/// Run startup plus num_steps - 1 stencil steps. In per_step mode the
/// frequency estimator is consulted at every (t_n, y_n) and the scheme
/// coefficients are refreshed before each step; fixed mode fits once at
/// v0 = omega0 * h. Error fields are filled when the problem carries an
/// exact solution.
[[nodiscard]] inline Trajectory integrate(const SecondOrderProblem& problem,
                                          const IntegrationConfig& config) {
    if (!(config.h > 0.0)) throw std::invalid_argument("integrate: h must be positive");
    if (config.num_steps < 0) throw std::invalid_argument("integrate: num_steps must be >= 0");
    if (config.frequency_mode == FrequencyMode::per_step && !problem.frequency_estimator)
        throw std::invalid_argument("integrate: per-step mode needs a frequency estimator");

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(config.num_steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(config.num_steps) + 1);

    traj.times.push_back(0.0);
    traj.states.push_back(problem.initial_state);

    if (config.num_steps >= 1) {
        auto [y0, y1] = startup_state(problem, config);
        traj.states[0] = std::move(y0);
        traj.times.push_back(config.h);
        traj.states.push_back(std::move(y1));
    }

    MethodCoefficients mc{};
    if (config.frequency_mode == FrequencyMode::fixed) {
        const double v0 = config.omega0 * config.h;
        if (!(v0 < v_max))
            throw FrequencyOutOfRange("fixed mode: v0 = " + std::to_string(v0) +
                                      " outside [0, " + std::to_string(v_max) + ")");
        mc = coefficients_for(config.scheme, v0);
    }

    for (long n = 1; n < config.num_steps; ++n) {
        const double t_n = static_cast<double>(n) * config.h;
        const State& y_n = traj.states[static_cast<std::size_t>(n)];
        if (config.frequency_mode == FrequencyMode::per_step) {
            const double omega = problem.frequency_estimator(t_n, y_n);
            const double v0 = omega * config.h;
            if (!(v0 < v_max))
                throw FrequencyOutOfRange("step " + std::to_string(n) + ": v0 = " +
                                          std::to_string(v0) + " outside [0, " +
                                          std::to_string(v_max) + ")");
            mc = coefficients_for(config.scheme, v0);
        }
        int iters = 0;
        State y_next = step(problem, mc, config.h, t_n,
                            traj.states[static_cast<std::size_t>(n) - 1], y_n,
                            config.corrector_tol, config.corrector_max_iters, &iters);
        traj.corrector_total_iters += iters;
        traj.corrector_max_iters_step = std::max(traj.corrector_max_iters_step, iters);
        traj.times.push_back(t_n + config.h);
        traj.states.push_back(std::move(y_next));
    }

    if (problem.exact_solution) {
        traj.per_step_error.reserve(traj.times.size());
        double sum = 0.0, mx = 0.0;
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const double e =
                detail::euclidean_distance(traj.states[i], problem.exact_solution(traj.times[i]));
            traj.per_step_error.push_back(e);
            sum += e;
            mx = std::max(mx, e);
        }
        traj.mean_error = sum / static_cast<double>(traj.per_step_error.size());
        traj.max_error = mx;
    }
    return traj;
}

/// Empirical algebraic order: integrate to t_end for each h, fit the
/// log-log slope of the final-time error. The problem must carry an exact
/// solution; every h should divide t_end.
[[nodiscard]] inline double convergence_study(const SecondOrderProblem& problem, Scheme scheme,
                                              const std::vector<double>& h_list, double t_end,
                                              double omega0 = 1.0) {
    if (h_list.size() < 2)
        throw std::invalid_argument("convergence_study: need at least two step sizes");
    if (!problem.exact_solution)
        throw MissingExactSolution("convergence_study needs an exact solution");

    std::vector<double> xs, ys;
    xs.reserve(h_list.size());
    ys.reserve(h_list.size());
    for (double h : h_list) {
        IntegrationConfig config;
        config.h = h;
        config.num_steps = std::lround(t_end / h);
        config.scheme = scheme;
        config.frequency_mode = FrequencyMode::fixed;
        config.omega0 = omega0;
        const Trajectory traj = integrate(problem, config);
        const double err =
            detail::euclidean_distance(traj.states.back(), problem.exact_solution(t_end));
        xs.push_back(std::log(h));
        ys.push_back(std::log(err));
    }
    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace oscifit
