#include <hyperinvert/factorials.hpp>

namespace hyperinvert {

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational result(1);
    Rational factor = x;
    for (unsigned long i = 0; i < n; ++i) {
        result *= factor;
        if (result.is_zero()) return result; // the remaining factors cannot undo a zero
        factor += Rational(1);
    }
    return result;
}

Rational binomial_general(const Rational& x, unsigned long k) {
    Rational result(1);
    Rational factor = x;
    for (unsigned long i = 0; i < k; ++i) {
        result *= factor;
        factor -= Rational(1);
    }
    if (k > 1) result /= Rational(factorial(k));
    return result;
}

Rational binomial_nk(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(r);
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace hyperinvert
