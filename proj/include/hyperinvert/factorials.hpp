/**
 * @file factorials.hpp
 * @brief Rising/falling factorial primitives over exact rationals.
 */
#ifndef HYPERINVERT_FACTORIALS_HPP
#define HYPERINVERT_FACTORIALS_HPP

#include <hyperinvert/rational.hpp>

namespace hyperinvert {

/// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long n);

/// x (x-1) ... (x-k+1) / k! for arbitrary rational x; 1 when k = 0.
Rational binomial_general(const Rational& x, unsigned long k);

/// Integer fast path: 0 when k < 0 or k > n, else n! / (k! (n-k)!).
Rational binomial_nk(unsigned long n, long k);

mpz_class factorial(unsigned long n);

} // namespace hyperinvert

#endif
