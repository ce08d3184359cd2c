#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace oscifit {

/// The four coefficient constructions for the two-step symmetric stencil
///   y_{n-1} - (2 - a) y_n + y_{n+1} = h^2 (b0 (f_{n-1} + f_{n+1}) + b1 f_n).
enum class Scheme {
    C,  ///< classical: constant (1/12, 5/6, 0), max algebraic order
    T,  ///< trig-fitted: zero phase lag at v0, polynomial exactness 2b0+b1=1
    S,  ///< trig-fitted with vanishing first phase-lag derivative
    SD, ///< trig-fitted with vanishing first and second derivatives (a != 0)
};

inline constexpr std::array<Scheme, 4> all_schemes{Scheme::C, Scheme::T, Scheme::S, Scheme::SD};

[[nodiscard]] constexpr std::string_view scheme_name(Scheme s) noexcept {
    switch (s) {
        case Scheme::C: return "C";
        case Scheme::T: return "T";
        case Scheme::S: return "S";
        case Scheme::SD: return "SD";
    }
    return "?";
}

[[nodiscard]] constexpr std::string_view scheme_description(Scheme s) noexcept {
    switch (s) {
        case Scheme::C: return "classical";
        case Scheme::T: return "trigonometrically fitted";
        case Scheme::S: return "trig-fitted, zero first phase-lag derivative";
        case Scheme::SD: return "trig-fitted, zero first and second phase-lag derivatives";
    }
    return "?";
}

[[nodiscard]] inline std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
    if (text == "C" || text == "c") return Scheme::C;
    if (text == "T" || text == "t") return Scheme::T;
    if (text == "S" || text == "s") return Scheme::S;
    if (text == "SD" || text == "sd" || text == "Sd") return Scheme::SD;
    return std::nullopt;
}

/// Stencil weights produced by a scheme at a fitted scaled frequency
/// v0 = omega0 * h. Only SD perturbs the central weight (a != 0); the
/// classical scheme is the v0 -> 0 limit of every fitted scheme.
struct MethodCoefficients {
    double v0 = 0.0; ///< scaled frequency the weights were fitted at
    double b0 = 0.0; ///< weight on f_{n-1} + f_{n+1}
    double b1 = 0.0; ///< weight on f_n
    double a = 0.0;  ///< perturbation of the y_n weight (stencil uses -2 + a)

    [[nodiscard]] static constexpr MethodCoefficients classical(double v0 = 0.0) noexcept {
        return {v0, 1.0 / 12.0, 5.0 / 6.0, 0.0};
    }
};

} // namespace oscifit
