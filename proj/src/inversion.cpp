#include <hyperinvert/inversion.hpp>

#include <stdexcept>
#include <utility>

#include <hyperinvert/errors.hpp>
#include <hyperinvert/factorials.hpp>

namespace hyperinvert {

CoefficientFamily CoefficientFamily::table(std::vector<Rational> values) {
    if (values.empty()) throw std::invalid_argument("coefficient table must be nonempty");
    CoefficientFamily f;
    f.is_affine_ = false;
    f.table_ = std::move(values);
    return f;
}

CoefficientFamily CoefficientFamily::affine(Rational base, Rational step) {
    CoefficientFamily f;
    f.is_affine_ = true;
    f.base_ = std::move(base);
    f.step_ = std::move(step);
    return f;
}

Rational CoefficientFamily::at(std::size_t j) const {
    if (is_affine_) return base_ + Rational(static_cast<long>(j)) * step_;
    if (j >= table_.size()) throw IndexOutOfRange(j, table_.size() - 1);
    return table_[j];
}

FactorSequences::FactorSequences(unsigned ell,
                                 std::vector<CoefficientFamily> coeff_a,
                                 std::vector<CoefficientFamily> coeff_b)
    : ell_(ell), coeff_a_(std::move(coeff_a)), coeff_b_(std::move(coeff_b)) {
    if (coeff_a_.size() != ell_ + 1 || coeff_b_.size() != ell_ + 1)
        throw std::invalid_argument("FactorSequences needs ell+1 coefficient families per side");
}

Rational phi_component(const FactorSequences& seqs, unsigned i, const Rational& x, unsigned long n) {
    Rational result(1);
    for (unsigned long k = 0; k < n; ++k) {
        result *= seqs.a(i).at(k) + x * seqs.b(i).at(k);
        if (result.is_zero()) return result;
    }
    return result;
}

Rational phi_big(const FactorSequences& seqs, const Rational& x, unsigned long n) {
    const unsigned long m = seqs.ell() + 1;
    Rational result(1);
    for (unsigned i = 0; i <= seqs.ell(); ++i) {
        result *= phi_component(seqs, i, x, (i + n) / m); // arguments nonnegative: floor = truncation
        if (result.is_zero()) return result;
    }
    return result;
}

Rational lambda_factor(const FactorSequences& seqs, unsigned long k) {
    const unsigned long m = seqs.ell() + 1;
    const unsigned long p = k / m;
    const unsigned q = static_cast<unsigned>(k % m);
    const unsigned cls = seqs.ell() - q;
    return seqs.a(cls).at(p) + Rational(static_cast<long>(k)) * seqs.b(cls).at(p);
}

FiniteSequence forward_transform(const FactorSequences& seqs, const FiniteSequence& g) {
    const std::size_t len = g.size();
    FiniteSequence f(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = binomial_nk(n, static_cast<long>(k)) *
                            phi_big(seqs, Rational(static_cast<long>(k)), n) * g[k];
            if (k % 2 == 1) term = -term;
            acc += term;
        }
        f[n] = acc;
    }
    return f;
}

FiniteSequence inverse_transform(const FactorSequences& seqs, const FiniteSequence& f) {
    const std::size_t len = f.size();
    FiniteSequence g(len);
    for (std::size_t n = 0; n < len; ++n) {
        const Rational x(static_cast<long>(n));
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational denom = phi_big(seqs, x, k + 1);
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(k + 1));
            Rational term = binomial_nk(n, static_cast<long>(k)) * lambda_factor(seqs, k) / denom * f[k];
            if (k % 2 == 1) term = -term;
            acc += term;
        }
        g[n] = acc;
    }
    return g;
}

Rational inner_sum_S(const FactorSequences& seqs, unsigned long i, unsigned long n) {
    if (i > n) throw std::invalid_argument("inner_sum_S requires i <= n");
    Rational acc(0);
    for (unsigned long k = i; k <= n; ++k) {
        const Rational x(static_cast<long>(k));
        Rational denom = phi_big(seqs, x, i + 1);
        if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(i + 1));
        Rational term = binomial_nk(n - i, static_cast<long>(k - i)) * phi_big(seqs, x, n) / denom;
        if ((k - i) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

namespace {

Rational printed_denominator(const FactorSequences& seqs, const Rational& x,
                             std::initializer_list<std::pair<unsigned, unsigned long>> orders) {
    Rational d(1);
    for (auto [cls, order] : orders) d *= phi_component(seqs, cls, x, order);
    return d;
}

} // namespace

FiniteSequence duplicate_inverse_printed(const FactorSequences& seqs, const FiniteSequence& f) {
    if (seqs.ell() != 1) throw std::invalid_argument("duplicate system requires ell = 1");
    const std::size_t len = f.size();
    FiniteSequence g(len);
    for (std::size_t n = 0; n < len; ++n) {
        const Rational x(static_cast<long>(n));
        Rational acc(0);
        for (unsigned long k = 0; 2 * k <= n; ++k) {
            Rational weight = seqs.a(1).at(k) + Rational(static_cast<long>(2 * k)) * seqs.b(1).at(k);
            Rational denom = printed_denominator(seqs, x, {{0, k}, {1, k + 1}});
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(2 * k + 1));
            acc += binomial_nk(n, static_cast<long>(2 * k)) * weight / denom * f[2 * k];
        }
        for (unsigned long k = 0; 2 * k + 1 <= n; ++k) {
            Rational weight = seqs.a(0).at(k) + Rational(static_cast<long>(2 * k + 1)) * seqs.b(0).at(k);
            Rational denom = printed_denominator(seqs, x, {{0, k + 1}, {1, k + 1}});
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(2 * k + 2));
            acc -= binomial_nk(n, static_cast<long>(2 * k + 1)) * weight / denom * f[2 * k + 1];
        }
        g[n] = acc;
    }
    return g;
}

FiniteSequence triplicate_inverse_printed(const FactorSequences& seqs, const FiniteSequence& f,
                                          TriplicateReading reading) {
    if (seqs.ell() != 2) throw std::invalid_argument("triplicate system requires ell = 2");
    const bool verbatim = reading == TriplicateReading::printed_verbatim;
    const std::size_t len = f.size();
    FiniteSequence g(len);
    for (std::size_t n = 0; n < len; ++n) {
        const Rational x(static_cast<long>(n));
        Rational acc(0);
        for (unsigned long k = 0; 3 * k <= n; ++k) {
            // verbatim: weight e_k + 3 f_k, denominator psi order k+1, sign +
            Rational weight = verbatim
                ? seqs.a(2).at(k) + Rational(3) * seqs.b(2).at(k)
                : seqs.a(2).at(k) + Rational(static_cast<long>(3 * k)) * seqs.b(2).at(k);
            Rational denom = verbatim
                ? printed_denominator(seqs, x, {{0, k}, {1, k + 1}, {2, k + 1}})
                : printed_denominator(seqs, x, {{0, k}, {1, k}, {2, k + 1}});
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(3 * k + 1));
            Rational term = binomial_nk(n, static_cast<long>(3 * k)) * weight / denom * f[3 * k];
            if (!verbatim && k % 2 == 1) term = -term;
            acc += term;
        }
        for (unsigned long k = 0; 3 * k + 1 <= n; ++k) {
            Rational weight = seqs.a(1).at(k) + Rational(static_cast<long>(3 * k + 1)) * seqs.b(1).at(k);
            Rational denom = printed_denominator(seqs, x, {{0, k}, {1, k + 1}, {2, k + 1}});
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(3 * k + 2));
            Rational term = binomial_nk(n, static_cast<long>(3 * k + 1)) * weight / denom * f[3 * k + 1];
            if (!verbatim && k % 2 == 1) term = -term;
            acc -= term;
        }
        for (unsigned long k = 0; 3 * k + 2 <= n; ++k) {
            Rational weight = seqs.a(0).at(k) + Rational(static_cast<long>(3 * k + 2)) * seqs.b(0).at(k);
            Rational denom = printed_denominator(seqs, x, {{0, k + 1}, {1, k + 1}, {2, k + 1}});
            if (denom.is_zero()) throw PhiVanishes(x.to_string(), static_cast<unsigned>(3 * k + 3));
            Rational term = binomial_nk(n, static_cast<long>(3 * k + 2)) * weight / denom * f[3 * k + 2];
            if (!verbatim && k % 2 == 1) term = -term;
            acc += term;
        }
        g[n] = acc;
    }
    return g;
}

} // namespace hyperinvert
