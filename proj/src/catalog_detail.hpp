#ifndef HYPERINVERT_SRC_CATALOG_DETAIL_HPP
#define HYPERINVERT_SRC_CATALOG_DETAIL_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include <hyperinvert/catalog.hpp>
#include <hyperinvert/errors.hpp>
#include <hyperinvert/factorials.hpp>
#include <hyperinvert/inversion.hpp>
#include <hyperinvert/series.hpp>

namespace hyperinvert::detail {

using RV = std::vector<Rational>;

inline Rational rq(long p, long q = 1) { return Rational(p, q); }

/// prefactor * series(). A zero prefactor normally means the source sum had
/// no terms of this block (an n or n(n-1) factor), in which case the series
/// need not terminate and the term is 0. But a prefactor zeroed by a
/// multiplier-pair numerator marks a degenerate rearrangement: the pair's
/// lower parameter is 0 there, and probing the series surfaces that pole so
/// the point is rejected instead of silently scored as 0.
inline Rational guarded(const Rational& pre, const std::function<Rational()>& series) {
    if (!pre.is_zero()) return pre * series();
    try {
        series();
    } catch (const NotTerminating&) {
        // empty block of the source sum
    }
    return Rational(0);
}

/// Catalog-strict pFq. An identity's summation range runs to the largest
/// upper-parameter witness; a lower Pochhammer vanishing anywhere in that
/// range makes the assignment inadmissible even when a smaller accidental
/// witness (say a parameter landing on a nonpositive integer) truncates the
/// sum before the pole is reached.
inline Rational cpfq(RV upper, RV lower, const Rational& z) {
    long widest = -1;
    for (const auto& a : upper)
        if (a.is_nonpositive_integer()) widest = std::max(widest, -a.to_long());
    for (const auto& b : lower) {
        if (!b.is_nonpositive_integer()) continue;
        const long pole_at = 1 - b.to_long(); // first k with (b)_k = 0
        if (pole_at <= widest)
            throw LowerParameterPole(static_cast<unsigned>(pole_at), b.to_string());
    }
    return pfq(std::move(upper), std::move(lower), z);
}

inline std::vector<ParamSpec> params_acn() {
    return {{"a", ParamKind::rational}, {"c", ParamKind::rational}, {"n", ParamKind::nonneg_integer}};
}

inline std::vector<ParamSpec> params_abcn() {
    return {{"a", ParamKind::rational}, {"b", ParamKind::rational},
            {"c", ParamKind::rational}, {"n", ParamKind::nonneg_integer}};
}

} // namespace hyperinvert::detail

#endif
