#pragma once

#include "oscifit/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace oscifit {

/// Dense n x n system (n <= 3) solved by Gaussian elimination with partial
/// pivoting, with a 1-norm condition estimate guarding against (near-)
/// singular condition matrices.
///
/// The inverse is assembled column-by-column alongside the solve (the
/// systems here are at most 3 x 3, so the extra right-hand sides are
/// cheaper than any refined estimator), giving cond_1 = ||A||_1 ||A^-1||_1.
/// Throws SingularSystem on an exactly zero pivot or when the estimate
/// exceeds cond_limit.
template <typename Real>
[[nodiscard]] std::array<Real, 3> solve_conditions(int n,
                                                   std::array<std::array<Real, 3>, 3> a,
                                                   std::array<Real, 3> rhs,
                                                   Real cond_limit = Real(1e12)) {
    if (n < 1 || n > 3) throw std::invalid_argument("solve_conditions: n must be 1..3");

    Real norm_a = 0; // max column sum of |a_ij|
    for (int j = 0; j < n; ++j) {
        Real col = 0;
        for (int i = 0; i < n; ++i) col += std::abs(a[i][j]);
        norm_a = std::max(norm_a, col);
    }

    // Augment with the identity so elimination yields A^-1 next to x.
    std::array<std::array<Real, 4>, 3> aug{};
    for (int i = 0; i < n; ++i) {
        aug[i][0] = rhs[i];
        for (int j = 0; j < n; ++j) aug[i][1 + j] = (i == j) ? Real(1) : Real(0);
    }

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[pivot][col])) pivot = i;
        if (a[pivot][col] == Real(0))
            throw SingularSystem("condition system: zero pivot in column " + std::to_string(col));
        std::swap(a[col], a[pivot]);
        std::swap(aug[col], aug[pivot]);

        for (int i = col + 1; i < n; ++i) {
            const Real f = a[i][col] / a[col][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            for (int j = 0; j <= n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }

    // Back substitution for x and the inverse columns simultaneously.
    std::array<std::array<Real, 4>, 3> sol{};
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j <= n; ++j) {
            Real acc = aug[i][j];
            for (int k = i + 1; k < n; ++k) acc -= a[i][k] * sol[k][j];
            sol[i][j] = acc / a[i][i];
        }
    }

    Real norm_inv = 0; // max column sum of |A^-1|
    for (int j = 1; j <= n; ++j) {
        Real col = 0;
        for (int i = 0; i < n; ++i) col += std::abs(sol[i][j]);
        norm_inv = std::max(norm_inv, col);
    }

    const Real cond = norm_a * norm_inv;
    if (!(cond < cond_limit))
        throw SingularSystem("condition system: condition estimate " + std::to_string(static_cast<double>(cond)) +
                             " exceeds guard");

    return {sol[0][0], n > 1 ? sol[1][0] : Real(0), n > 2 ? sol[2][0] : Real(0)};
}

} // namespace oscifit
