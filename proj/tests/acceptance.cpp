// End-to-end acceptance harness: eight numbered criteria, one pass/fail
// line each, exit status 0 only if every criterion holds. Thresholds are
// asserted exactly as stated -- nothing is loosened to force a pass.

#include "oscifit/oscifit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace oscifit;

namespace {

int failures = 0;

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

void report(int n, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", n, detail.c_str(),
                seconds);
    if (!pass) ++failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

void criterion_1_series() {
    Stopwatch sw;
    const VerifyReport rep = verify_reference_series(6);
    std::size_t s_rows = 0;
    bool s_ok = true;
    for (const auto& row : rep.rows)
        if (row.scheme == Scheme::S) {
            ++s_rows;
            s_ok = s_ok && row.match;
        }
    const SchemeSeries sd = derive_scheme_series(Scheme::SD, 6);
    const bool a_ok = sd.a.coeff(6) == Rational(-1, 240);
    std::ostringstream msg;
    msg << "S-scheme series " << (s_ok ? "match" : "DISAGREE with") << " the published table in "
        << s_rows << "/" << s_rows << " terms through v^6; leading a coefficient "
        << sd.a.coeff(6).str() << (a_ok ? " == " : " != ") << "-1/240";
    report(1, s_ok && s_rows == 8 && a_ok, msg.str(), sw.seconds());
}

void criterion_2_classical_limit() {
    Stopwatch sw;
    double worst = 0.0;
    for (Scheme s : all_schemes) {
        const MethodCoefficients mc = coefficients_for(s, 1e-6);
        worst = std::max({worst, std::abs(mc.b0 - 1.0 / 12.0), std::abs(mc.b1 - 5.0 / 6.0),
                          std::abs(mc.a)});
    }
    report(2, worst < 1e-10,
           "coefficients at v0 = 1e-6 deviate from (1/12, 5/6, 0) by at most " + fmt(worst) +
               " (tolerance 1e-10)",
           sw.seconds());
}

void criterion_3_fitting_conditions() {
    Stopwatch sw;
    double max_lag = 0.0, max_d1 = 0.0, max_d2 = 0.0;
    for (int i = 1; i <= 15; ++i) {
        const double v0 = 0.1 * static_cast<double>(i);
        for (Scheme s : {Scheme::T, Scheme::S, Scheme::SD}) {
            const MethodCoefficients mc = coefficients_for(s, v0);
            max_lag = std::max(max_lag, std::abs(phase_lag_at(mc, v0).phase_lag));
        }
        max_d1 = std::max({max_d1, std::abs(phase_lag_derivatives(Scheme::S, v0, 1)[0]),
                           std::abs(phase_lag_derivatives(Scheme::SD, v0, 1)[0])});
        max_d2 = std::max(max_d2, std::abs(phase_lag_derivatives(Scheme::SD, v0, 2)[1]));
    }
    const bool pass = max_lag < 1e-10 && max_d1 < 1e-7 && max_d2 < 1e-5;
    report(3, pass,
           "on v0 in [0.1, 1.5]: max |l| = " + fmt(max_lag) + " (< 1e-10), max |l'| = " +
               fmt(max_d1) + " (< 1e-7), max |l''| = " + fmt(max_d2) + " (< 1e-5)",
           sw.seconds());
}

void criterion_4_sensitivity_slopes() {
    Stopwatch sw;
    const auto grid = default_delta_grid();
    const double targets[] = {1.0, 2.0, 3.0};
    const Scheme schemes[] = {Scheme::T, Scheme::S, Scheme::SD};
    std::ostringstream bad;
    int violations = 0;
    for (int k = 0; k < 3; ++k)
        for (double v0 : {0.3, 0.5, 0.8, 1.0, 1.2}) {
            const double slope = sensitivity_order(schemes[k], v0, grid).slope;
            if (std::abs(slope - targets[k]) > 0.15) {
                if (violations++) bad << ", ";
                bad << scheme_name(schemes[k]) << " at v0 = " << v0 << " gives " << fmt(slope);
            }
        }
    if (violations == 0) {
        report(4, true, "all 15 log-log slopes within their 1/2/3 +- 0.15 bands", sw.seconds());
    } else {
        report(4, false,
               std::to_string(15 - violations) + "/15 slopes in band; out of band: " + bad.str() +
                   " (band half-width 0.15)",
               sw.seconds());
    }
}

void criterion_5_exactness() {
    Stopwatch sw;
    const auto p = harmonic_problem(1.0);
    IntegrationConfig cfg;
    cfg.h = 0.1;
    cfg.num_steps = 1000;
    cfg.frequency_mode = FrequencyMode::fixed;
    cfg.omega0 = 1.0;
    cfg.scheme = Scheme::T;
    const double fitted = integrate(p, cfg).max_error;
    cfg.scheme = Scheme::C;
    const double classical = integrate(p, cfg).max_error;
    const bool pass = fitted < 1e-10 && classical > 1e-6 && classical / fitted >= 1e4;
    report(5, pass,
           "fitted max error " + fmt(fitted) + " (< 1e-10), classical " + fmt(classical) +
               " (> 1e-6), separation factor " + fmt(classical / fitted) + " (>= 1e4)",
           sw.seconds());
}

void criterion_6_kepler_ordering() {
    Stopwatch sw;
    const auto p = kepler_problem(0.5);
    IntegrationConfig cfg;
    cfg.h = 0.1;
    cfg.num_steps = 10000;
    cfg.frequency_mode = FrequencyMode::per_step;
    double mean[4] = {};
    for (Scheme s : all_schemes) {
        cfg.scheme = s;
        mean[static_cast<int>(s)] = integrate(p, cfg).mean_error;
    }
    const double c = mean[0], t = mean[1], s = mean[2], sd = mean[3];
    const bool ordered = sd < s && s < t && t < c;
    const double r1 = c / t, r2 = t / s, r3 = s / sd;
    const bool separated = r1 >= 1.2 && r2 >= 1.2 && r3 >= 1.2;
    report(6, ordered && separated,
           "mean errors C = " + fmt(c) + ", T = " + fmt(t) + ", S = " + fmt(s) + ", SD = " +
               fmt(sd) + "; ordering SD < S < T < C " + (ordered ? "holds" : "VIOLATED") +
               "; pair ratios " + fmt(r1) + ", " + fmt(r2) + ", " + fmt(r3) +
               (separated ? " all >= 1.2" : " fall short of the 1.2 threshold"),
           sw.seconds());
}

void criterion_7_convergence_order() {
    Stopwatch sw;
    const double order =
        convergence_study(harmonic_problem(1.0), Scheme::C, {0.2, 0.1, 0.05, 0.025}, 10.0);
    report(7, std::abs(order - 4.0) <= 0.2,
           "classical observed order " + fmt(order) + " on the harmonic oscillator (4.0 +- 0.2)",
           sw.seconds());
}

void criterion_8_kepler_oracle() {
    Stopwatch sw;
    // Independent bisection oracle in the principal frame.
    const auto bisect = [](double eps, double t) {
        const double t_r = std::remainder(t, 2.0 * std::numbers::pi);
        double lo = t_r - eps, hi = t_r + eps;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid - eps * std::sin(mid) - t_r <= 0.0) lo = mid;
            else hi = mid;
        }
        return (t - t_r) + 0.5 * (lo + hi);
    };
    std::mt19937 rng(8675309u);
    std::uniform_real_distribution<double> t_dist(0.0, 1000.0);
    std::uniform_real_distribution<double> e_dist(0.0, 0.9);
    double worst_gap = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double t = t_dist(rng);
        const double eps = e_dist(rng);
        worst_gap = std::max(worst_gap,
                             std::abs(solve_kepler_equation(eps, t) - bisect(eps, t)));
    }
    double worst_energy = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = 0.25 * static_cast<double>(i);
        const double E = kepler_energy(kepler_exact(0.5, t), kepler_exact_velocity(0.5, t));
        worst_energy = std::max(worst_energy, std::abs(E + 0.5));
    }
    report(8, worst_gap <= 1e-12 && worst_energy <= 1e-12,
           "Newton vs bisection gap at most " + fmt(worst_gap) +
               " over 1000 random (eps, t) (<= 1e-12); exact-orbit energy drift " +
               fmt(worst_energy) + " (<= 1e-12)",
           sw.seconds());
}

} // namespace

int main() {
    criterion_1_series();
    criterion_2_classical_limit();
    criterion_3_fitting_conditions();
    criterion_4_sensitivity_slopes();
    criterion_5_exactness();
    criterion_6_kepler_ordering();
    criterion_7_convergence_order();
    criterion_8_kepler_oracle();
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
