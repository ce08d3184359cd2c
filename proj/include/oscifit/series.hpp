#pragma once

#include "oscifit/errors.hpp"
#include "oscifit/rational.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace oscifit {

/// Truncated power series in v with exact rational coefficients.
///
/// A series of truncation order N stores the coefficients of v^0 .. v^N;
/// terms of higher degree are unknown, not zero. Arithmetic therefore
/// truncates results to the minimum operand order (division additionally
/// loses the divisor's valuation, see operator/).
class Series {
public:
    /// Zero series of the given truncation order.
    explicit Series(int truncation_order)
        : coeff_(static_cast<std::size_t>(check_order(truncation_order)) + 1) {}

    [[nodiscard]] static Series constant(const Rational& c, int order) {
        Series s(order);
        s.coeff_[0] = c;
        return s;
    }

    /// c * v^power, truncated to the given order (the term is dropped if
    /// power exceeds it).
    [[nodiscard]] static Series monomial(const Rational& c, int power, int order) {
        Series s(order);
        if (power >= 0 && power <= order) s.coeff_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeff_.size()) - 1; }

    [[nodiscard]] const Rational& coeff(int k) const { return coeff_.at(static_cast<std::size_t>(k)); }
    Rational& coeff(int k) { return coeff_.at(static_cast<std::size_t>(k)); }

    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(coeff_.begin(), coeff_.end(),
                           [](const Rational& c) { return c.is_zero(); });
    }

    /// Lowest power with a nonzero coefficient; -1 when the series is zero
    /// at its truncation order.
    [[nodiscard]] int valuation() const noexcept {
        for (std::size_t k = 0; k < coeff_.size(); ++k)
            if (!coeff_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    /// Copy truncated (or zero-extended is invalid: new_order must not
    /// exceed the current order, unknown terms cannot be invented).
    [[nodiscard]] Series truncated(int new_order) const {
        check_order(new_order);
        if (new_order > order())
            throw std::invalid_argument("Series::truncated: cannot extend truncation order");
        Series r(new_order);
        std::copy_n(coeff_.begin(), static_cast<std::size_t>(new_order) + 1, r.coeff_.begin());
        return r;
    }

    /// Multiply by v^m exactly. Every coefficient is known after the shift,
    /// so the truncation order grows by m.
    [[nodiscard]] Series shifted_up(int m) const {
        if (m < 0) throw std::invalid_argument("Series::shifted_up: negative shift");
        Series r(order() + m);
        std::copy(coeff_.begin(), coeff_.end(),
                  r.coeff_.begin() + static_cast<std::ptrdiff_t>(m));
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.coeff(k) = a.coeff(k) - b.coeff(k);
        return r;
    }

    friend Series operator-(const Series& a) {
        Series r(a.order());
        for (int k = 0; k <= r.order(); ++k) r.coeff(k) = -a.coeff(k);
        return r;
    }

    friend Series operator*(const Rational& c, const Series& a) {
        Series r(a.order());
        for (int k = 0; k <= r.order(); ++k) r.coeff(k) = c * a.coeff(k);
        return r;
    }

    friend Series operator*(const Series& a, const Rational& c) { return c * a; }

    /// Cauchy product truncated to the minimum operand order.
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            Rational acc;
            for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
            r.coeff(k) = acc;
        }
        return r;
    }

    /// Power-series division. With m the divisor's valuation, requires the
    /// dividend's valuation to be >= m (ValuationError otherwise); both are
    /// shifted down by m and the quotient is computed against the now-unit
    /// divisor. The result order is min(order(a), order(b)) - m: the shifted
    /// tails beyond that degree are unknown.
    friend Series operator/(const Series& a, const Series& b) {
        const int m = b.valuation();
        if (m < 0)
            throw DivisionByZeroSeries("series division: divisor is zero at truncation order");
        const int av = a.valuation();
        if (av >= 0 && av < m)
            throw ValuationError("series division: dividend valuation " + std::to_string(av) +
                                 " below divisor valuation " + std::to_string(m));
        const int n = std::min(a.order(), b.order()) - m;
        if (n < 0)
            throw ValuationError("series division: no terms survive the valuation shift");
        Series q(n);
        // q_k = (a_{k+m} - sum_{j<k} q_j * b_{k-j+m}) / b_m
        const Rational& lead = b.coeff(m);
        for (int k = 0; k <= n; ++k) {
            Rational acc = a.coeff(k + m);
            for (int j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j + m);
            q.coeff(k) = acc / lead;
        }
        return q;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.coeff_ == b.coeff_;
    }

    /// Evaluate in extended precision by Horner's rule.
    [[nodiscard]] long double eval(long double v) const {
        long double acc = 0.0L;
        for (int k = order(); k >= 0; --k) acc = acc * v + coeff_[static_cast<std::size_t>(k)].to_long_double();
        return acc;
    }

    /// Human-readable form, e.g. "1/12 + 1/240 v^2 - 1/6048 v^4".
    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            const Rational& c = coeff_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            os << c.abs().str();
            if (k == 1) os << " v";
            if (k > 1) os << " v^" << k;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order");
        return order;
    }

    std::vector<Rational> coeff_; // coeff_[k] multiplies v^k
};

/// Maclaurin series of cos v: sum (-1)^k v^{2k} / (2k)!.
[[nodiscard]] inline Series cos_series(int order) {
    Series s(order);
    Rational term(1); // (-1)^k / (2k)!
    for (int k = 0; 2 * k <= order; ++k) {
        s.coeff(2 * k) = term;
        term = -term / Rational((2 * k + 1) * (2 * k + 2));
    }
    return s;
}

/// Maclaurin series of sin v: sum (-1)^k v^{2k+1} / (2k+1)!.
[[nodiscard]] inline Series sin_series(int order) {
    Series s(order);
    Rational term(1); // (-1)^k / (2k+1)!
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        s.coeff(2 * k + 1) = term;
        term = -term / Rational((2 * k + 2) * (2 * k + 3));
    }
    return s;
}

} // namespace oscifit
