#pragma once

#include "oscifit/rational.hpp"
#include "oscifit/scheme.hpp"

#include <array>
#include <optional>
#include <span>

namespace oscifit {

/// Which of the three coefficient functions a reference entry belongs to.
enum class CoefficientKind { b0, b1, a };

[[nodiscard]] constexpr std::string_view coefficient_kind_name(CoefficientKind k) noexcept {
    switch (k) {
        case CoefficientKind::b0: return "b0";
        case CoefficientKind::b1: return "b1";
        case CoefficientKind::a: return "a";
    }
    return "?";
}

/// One published series term: the coefficient of v^power as an exact
/// rational num/den.
struct ReferenceTerm {
    int power;
    long long num;
    long long den;

    [[nodiscard]] Rational value() const { return {num, den}; }
};

/// The published coefficient series, transcribed term by term as exact
/// rationals so the derivation can be cross-checked bit-for-bit. Each
/// series is listed to the power the source prints (v^12 for the b's,
/// v^14 for a); the classical constants are included for completeness.
namespace reference_table {

inline constexpr std::array<ReferenceTerm, 2> c{{{0, 1, 12}, {0, 5, 6}}}; // b0 then b1

inline constexpr std::array<ReferenceTerm, 7> t_b0{{
    {0, 1, 12},
    {2, 1, 120},
    {4, 17, 20160},
    {6, 31, 362880},
    {8, 691, 79833600},
    {10, 5461, 6227020800},
    {12, 929569, 10461394944000},
}};

inline constexpr std::array<ReferenceTerm, 7> t_b1{{
    {0, 5, 6},
    {2, -1, 60},
    {4, -17, 10080},
    {6, -31, 181440},
    {8, -691, 39916800},
    {10, -5461, 3113510400},
    {12, -929569, 5230697472000},
}};

inline constexpr std::array<ReferenceTerm, 7> s_b0{{
    {0, 1, 12},
    {2, 1, 120},
    {4, 17, 20160},
    {6, 31, 362880},
    {8, 691, 79833600},
    {10, 5461, 6227020800},
    {12, 929569, 10461394944000},
}};

inline constexpr std::array<ReferenceTerm, 7> s_b1{{
    {0, 5, 6},
    {2, -1, 60},
    {4, 5, 2016},
    {6, 29, 181440},
    {8, 139, 7983360},
    {10, 5459, 3113510400},
    {12, 185917, 1046139494400},
}};

inline constexpr std::array<ReferenceTerm, 7> sd_b0{{
    {0, 1, 12},
    {2, 1, 80},
    {4, 41, 20160},
    {6, 1219, 3628800},
    {8, 8887, 159667200},
    {10, 8045189, 871782912000},
    {12, 16009177, 10461394944000},
}};

inline constexpr std::array<ReferenceTerm, 7> sd_b1{{
    {0, 5, 6},
    {2, -1, 40},
    {4, 17, 2016},
    {6, 1811, 1814400},
    {8, 13817, 79833600},
    {10, 12478951, 435891456000},
    {12, 24838031, 5230697472000},
}};

inline constexpr std::array<ReferenceTerm, 5> sd_a{{
    {6, -1, 240},
    {8, -1, 2016},
    {10, -1, 11520},
    {12, -2291, 159667200},
    {14, -62879, 26417664000},
}};

} // namespace reference_table

/// The published terms for (scheme, coefficient), or an empty span where
/// the source prints none (a is only ever nonzero for SD; C is constant).
[[nodiscard]] inline std::span<const ReferenceTerm> reference_terms(Scheme scheme,
                                                                    CoefficientKind kind) {
    using namespace reference_table;
    switch (scheme) {
        case Scheme::C:
            if (kind == CoefficientKind::b0) return {c.data(), 1};
            if (kind == CoefficientKind::b1) return {c.data() + 1, 1};
            return {};
        case Scheme::T:
            if (kind == CoefficientKind::b0) return t_b0;
            if (kind == CoefficientKind::b1) return t_b1;
            return {};
        case Scheme::S:
            if (kind == CoefficientKind::b0) return s_b0;
            if (kind == CoefficientKind::b1) return s_b1;
            return {};
        case Scheme::SD:
            if (kind == CoefficientKind::b0) return sd_b0;
            if (kind == CoefficientKind::b1) return sd_b1;
            return sd_a;
    }
    return {};
}

} // namespace oscifit
