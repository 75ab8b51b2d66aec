#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyperinvert/factorials.hpp>
#include <hyperinvert/sampling.hpp>

using namespace hyperinvert;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(7, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(1), 4) == Rational(24));
    CHECK(pochhammer(Rational(-2), 4) == Rational(0));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer recurrence (x)_n = (x)_{n-1} (x+n-1)") {
    SplitMix64 gen(11);
    RationalBounds bounds;
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = draw_rational(gen, bounds);
        unsigned long n = 1 + gen.next() % 12;
        CHECK(pochhammer(x, n) ==
              pochhammer(x, n - 1) * (x + Rational(static_cast<long>(n)) - 1));
    }
}

TEST_CASE("binomial_general basics") {
    Rational x(9, 4);
    CHECK(binomial_general(x, 0) == Rational(1));
    CHECK(binomial_general(Rational(5), 2) == Rational(10));
    CHECK(binomial_general(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("binomial_general via pochhammer: C(x,k) = (-1)^k (-x)_k / k!") {
    SplitMix64 gen(12);
    RationalBounds bounds;
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = draw_rational(gen, bounds);
        unsigned long k = gen.next() % 10;
        Rational sign = k % 2 == 1 ? Rational(-1) : Rational(1);
        CHECK(binomial_general(x, k) ==
              sign * pochhammer(-x, k) / Rational(factorial(k)));
    }
}

TEST_CASE("binomial_nk conventions and agreement with the general form") {
    CHECK(binomial_nk(5, -1) == Rational(0));
    CHECK(binomial_nk(4, 2) == Rational(6));
    CHECK(binomial_nk(4, 5) == Rational(0));
    for (unsigned long n = 0; n <= 17; ++n) CHECK(binomial_nk(n, 0) == Rational(1));

    for (unsigned long n = 0; n <= 30; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            CHECK(binomial_nk(n, static_cast<long>(k)) ==
                  binomial_general(Rational(static_cast<long>(n)), k));
}

TEST_CASE("trinomial revision C(n,k)C(k,i) = C(n,i)C(n-i,k-i)") {
    for (unsigned long n = 0; n <= 20; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            for (unsigned long i = 0; i <= k; ++i)
                CHECK(binomial_nk(n, static_cast<long>(k)) * binomial_nk(k, static_cast<long>(i)) ==
                      binomial_nk(n, static_cast<long>(i)) *
                          binomial_nk(n - i, static_cast<long>(k - i)));
}
