/**
 * @file series.hpp
 * @brief Terminating pFq evaluation and Pochhammer bracket products.
 *
 * A series terminates iff some upper parameter is a nonpositive integer; the
 * sum then runs k = 0..N with N the smallest such witness. Lower-parameter
 * poles past N are permitted (that part of the sum is never reached), poles
 * at k <= N raise LowerParameterPole.
 */
#ifndef HYPERINVERT_SERIES_HPP
#define HYPERINVERT_SERIES_HPP

#include <vector>

#include <hyperinvert/rational.hpp>

namespace hyperinvert {

struct SeriesSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument; // z; the catalog stores z = 1 explicitly when a source omits it
};

/// N = min { -a : a upper, a nonpositive integer }. Throws NotTerminating.
unsigned long termination_order(const SeriesSpec& spec);

/// Sum_{k=0}^{N} prod (a_j)_k / prod (b_j)_k * z^k / k!, exactly.
/// Terms are built with the incremental recurrence
/// term_{k+1} = term_k * prod(a_j + k) / prod(b_j + k) * z / (k + 1).
Rational eval_terminating_pfq(const SeriesSpec& spec);

struct BracketProduct {
    std::vector<Rational> numerator_params;
    std::vector<Rational> denominator_params;
    unsigned long order; // n
};

/// prod (alpha_i)_n / prod (A_i)_n. Throws DenominatorPole.
Rational product_bracket(const BracketProduct& bp);

/// Convenience wrappers used heavily by the identity catalog.
Rational pfq(std::vector<Rational> upper, std::vector<Rational> lower, const Rational& z);
Rational bracket(std::vector<Rational> num, std::vector<Rational> den, unsigned long n);

} // namespace hyperinvert

#endif
