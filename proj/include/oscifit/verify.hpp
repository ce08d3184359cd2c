#pragma once

#include "oscifit/reference_series.hpp"
#include "oscifit/scheme.hpp"
#include "oscifit/scheme_series.hpp"

#include <algorithm>
#include <vector>

namespace oscifit {

/// One derived-vs-published comparison row.
struct SeriesComparison {
    Scheme scheme = Scheme::C;
    CoefficientKind kind = CoefficientKind::b0;
    int power = 0;
    Rational derived;
    Rational published;
    bool match = false;
};

/// Outcome of cross-checking the derivation against the published table.
///
/// The published T series is known-bad: it repeats the S-scheme b0 (it
/// satisfies 2 b0 + b1 = 1 but not the zero-phase-lag condition), so T rows
/// are reported but never counted against verification. Verification
/// demands exact rational agreement for S, SD, and a through v^6 -- the
/// range every consumer of the series fallback actually leans on.
struct VerifyReport {
    int order = 0;
    std::vector<SeriesComparison> rows;

    [[nodiscard]] bool verified() const {
        return std::all_of(rows.begin(), rows.end(), [](const SeriesComparison& r) {
            if (r.scheme == Scheme::T) return true;
            return r.power > 6 || r.match;
        });
    }

    [[nodiscard]] std::size_t mismatch_count() const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(),
                          [](const SeriesComparison& r) { return !r.match; }));
    }
};

/// Derive every scheme's coefficient series from its defining conditions
/// and compare, power by power, with the published table up to the given
/// truncation order (at most the published v^12 / v^14 reach).
[[nodiscard]] inline VerifyReport verify_reference_series(int order) {
    VerifyReport report;
    report.order = order;
    for (Scheme scheme : {Scheme::T, Scheme::S, Scheme::SD}) {
        const SchemeSeries derived = derive_scheme_series(scheme, std::max(order, 6));
        for (CoefficientKind kind :
             {CoefficientKind::b0, CoefficientKind::b1, CoefficientKind::a}) {
            const Series& series = kind == CoefficientKind::b0  ? derived.b0
                                   : kind == CoefficientKind::b1 ? derived.b1
                                                                 : derived.a;
            for (const ReferenceTerm& term : reference_terms(scheme, kind)) {
                if (term.power > order) continue;
                SeriesComparison row;
                row.scheme = scheme;
                row.kind = kind;
                row.power = term.power;
                row.derived = series.coeff(term.power);
                row.published = term.value();
                row.match = row.derived == row.published;
                report.rows.push_back(row);
            }
        }
    }
    return report;
}

} // namespace oscifit
