#include <hyperinvert/series.hpp>

#include <optional>

#include <hyperinvert/errors.hpp>
#include <hyperinvert/factorials.hpp>

namespace hyperinvert {

unsigned long termination_order(const SeriesSpec& spec) {
    std::optional<unsigned long> best;
    for (const auto& a : spec.upper) {
        if (!a.is_nonpositive_integer()) continue;
        unsigned long witness = static_cast<unsigned long>(-a.to_long());
        if (!best || witness < *best) best = witness;
    }
    if (!best) throw NotTerminating();
    return *best;
}

Rational eval_terminating_pfq(const SeriesSpec& spec) {
    const unsigned long n_terms = termination_order(spec);

    Rational sum(1);
    Rational term(1);
    for (unsigned long k = 0; k < n_terms; ++k) {
        Rational shift(static_cast<long>(k));
        Rational num(1);
        for (const auto& a : spec.upper) num *= a + shift;
        Rational den(static_cast<long>(k + 1));
        for (const auto& b : spec.lower) {
            Rational factor = b + shift;
            if (factor.is_zero()) throw LowerParameterPole(k + 1, b.to_string());
            den *= factor;
        }
        term *= num * spec.argument / den;
        sum += term;
        if (term.is_zero()) break; // an upper witness smaller than N was hit
    }
    return sum;
}

Rational product_bracket(const BracketProduct& bp) {
    Rational num(1);
    for (const auto& alpha : bp.numerator_params) num *= pochhammer(alpha, bp.order);
    Rational den(1);
    for (const auto& beta : bp.denominator_params) {
        Rational p = pochhammer(beta, bp.order);
        if (p.is_zero()) throw DenominatorPole(beta.to_string());
        den *= p;
    }
    return num / den;
}

Rational pfq(std::vector<Rational> upper, std::vector<Rational> lower, const Rational& z) {
    return eval_terminating_pfq(SeriesSpec{std::move(upper), std::move(lower), z});
}

Rational bracket(std::vector<Rational> num, std::vector<Rational> den, unsigned long n) {
    return product_bracket(BracketProduct{std::move(num), std::move(den), n});
}

} // namespace hyperinvert
