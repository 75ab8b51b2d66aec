#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyperinvert/factorials.hpp>
#include <hyperinvert/inversion.hpp>
#include <hyperinvert/selftest.hpp>

using namespace hyperinvert;

namespace {

FactorSequences ones(unsigned ell) {
    std::vector<CoefficientFamily> a, b;
    for (unsigned i = 0; i <= ell; ++i) {
        a.push_back(CoefficientFamily::constant(Rational(1)));
        b.push_back(CoefficientFamily::constant(Rational(0)));
    }
    return FactorSequences(ell, std::move(a), std::move(b));
}

} // namespace

TEST_CASE("phi_component") {
    FactorSequences s(0, {CoefficientFamily::constant(Rational(1))},
                      {CoefficientFamily::constant(Rational(1))});
    CHECK(phi_component(s, 0, Rational(5, 7), 0) == Rational(1));
    CHECK(phi_component(s, 0, Rational(2), 3) == Rational(27)); // (1+2)^3

    FactorSequences t(1,
                      {CoefficientFamily::constant(Rational(1)), CoefficientFamily::constant(Rational(0))},
                      {CoefficientFamily::constant(Rational(0)), CoefficientFamily::constant(Rational(1))});
    CHECK(phi_component(t, 1, Rational(3), 2) == Rational(9)); // x*x
}

TEST_CASE("phi_big splits orders by class") {
    // ell=1, phi_0 == 1, phi_1(x;m) = x^m: Phi(3;3) = 3^floor((1+3)/2) = 9
    FactorSequences t(1,
                      {CoefficientFamily::constant(Rational(1)), CoefficientFamily::constant(Rational(0))},
                      {CoefficientFamily::constant(Rational(0)), CoefficientFamily::constant(Rational(1))});
    CHECK(phi_big(t, Rational(3), 3) == Rational(9));
    CHECK(phi_big(t, Rational(3), 0) == Rational(1));

    // ell=0 reduces to the single component
    FactorSequences s(0, {CoefficientFamily::affine(Rational(2), Rational(1))},
                      {CoefficientFamily::constant(Rational(3))});
    for (unsigned long n = 0; n <= 6; ++n)
        CHECK(phi_big(s, Rational(5, 4), n) == phi_component(s, 0, Rational(5, 4), n));
}

TEST_CASE("lambda_factor indexing") {
    // k = 0 gives A_{ell,0}
    FactorSequences t(2,
                      {CoefficientFamily::constant(Rational(7)), CoefficientFamily::constant(Rational(11)),
                       CoefficientFamily::constant(Rational(13))},
                      {CoefficientFamily::constant(Rational(0)), CoefficientFamily::constant(Rational(0)),
                       CoefficientFamily::constant(Rational(0))});
    CHECK(lambda_factor(t, 0) == Rational(13));

    // ell=0, A=1, B=1: lambda(3) = 1 + 3
    FactorSequences s(0, {CoefficientFamily::constant(Rational(1))},
                      {CoefficientFamily::constant(Rational(1))});
    CHECK(lambda_factor(s, 3) == Rational(4));

    // ell=1, class-1 coefficients A_{1,j} = j, B_{1,j} = 1: lambda(4) = A_{1,2} + 4
    FactorSequences u(1,
                      {CoefficientFamily::constant(Rational(5)), CoefficientFamily::affine(Rational(0), Rational(1))},
                      {CoefficientFamily::constant(Rational(2)), CoefficientFamily::constant(Rational(1))});
    CHECK(lambda_factor(u, 4) == Rational(6));
}

TEST_CASE("table-backed families raise IndexOutOfRange past their end") {
    FactorSequences s(0, {CoefficientFamily::table({Rational(1), Rational(2)})},
                      {CoefficientFamily::constant(Rational(0))});
    CHECK(phi_component(s, 0, Rational(1), 2) == Rational(2));
    CHECK_THROWS_AS(phi_component(s, 0, Rational(1), 3), IndexOutOfRange);
}

TEST_CASE("binomial transform special cases") {
    FactorSequences s = ones(0);
    FiniteSequence delta{Rational(1), Rational(0), Rational(0)};
    CHECK(forward_transform(s, delta) == FiniteSequence{Rational(1), Rational(1), Rational(1)});
    FiniteSequence f{Rational(1), Rational(1), Rational(1)};
    CHECK(inverse_transform(s, f) == FiniteSequence{Rational(1), Rational(0), Rational(0)});

    // F(0) = G(0) for any coefficients
    SplitMix64 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        FactorSequences r = random_factor_sequences(gen, 1 + gen.next() % 3);
        FiniteSequence g = random_sequence(gen, 4);
        CHECK(forward_transform(r, g)[0] == g[0]);
    }
}

TEST_CASE("round trip on random instances, ell 0..3") {
    SplitMix64 gen(4);
    for (unsigned ell = 0; ell <= 3; ++ell) {
        int done = 0;
        while (done < 12) {
            FactorSequences seqs = random_factor_sequences(gen, ell);
            FiniteSequence g = random_sequence(gen, 1 + gen.next() % 13);
            try {
                FiniteSequence round_trip = inverse_transform(seqs, forward_transform(seqs, g));
                CHECK(round_trip == g);
                ++done;
            } catch (const PhiVanishes&) {
                // degenerate draw
            }
        }
    }
}

TEST_CASE("inner sum vanishes below the diagonal") {
    // spec'd example: ell=0, A=1, B=1, i=0, n=2 sums to zero
    FactorSequences s(0, {CoefficientFamily::constant(Rational(1))},
                      {CoefficientFamily::constant(Rational(1))});
    CHECK(inner_sum_S(s, 0, 2) == Rational(0));
    CHECK(inner_sum_S(s, 2, 2) == Rational(1) / lambda_factor(s, 2));

    SplitMix64 gen(5);
    for (unsigned ell = 0; ell <= 2; ++ell) {
        int done = 0;
        while (done < 5) {
            FactorSequences seqs = random_factor_sequences(gen, ell);
            try {
                for (unsigned long n = 0; n <= 7; ++n) {
                    for (unsigned long i = 0; i < n; ++i) {
                        Rational below = inner_sum_S(seqs, i, n);
                        CHECK(below == Rational(0));
                    }
                    Rational diagonal = inner_sum_S(seqs, n, n);
                    Rational expected = Rational(1) / lambda_factor(seqs, n);
                    CHECK(diagonal == expected);
                }
                ++done;
            } catch (const PhiVanishes&) {
            } catch (const DivisionByZero&) {
            }
        }
    }
}

TEST_CASE("printed duplicate system equals the generic engine") {
    FactorSequences s = ones(1);
    FiniteSequence f{Rational(1), Rational(1), Rational(1)};
    CHECK(duplicate_inverse_printed(s, f) == FiniteSequence{Rational(1), Rational(0), Rational(0)});

    SplitMix64 gen(6);
    int done = 0;
    while (done < 50) {
        FactorSequences seqs = random_factor_sequences(gen, 1);
        FiniteSequence f2 = random_sequence(gen, 1 + gen.next() % 11);
        try {
            FiniteSequence printed = duplicate_inverse_printed(seqs, f2);
            FiniteSequence generic = inverse_transform(seqs, f2);
            CHECK(printed == generic);
            ++done;
        } catch (const PhiVanishes&) {
        }
    }
}

TEST_CASE("triplicate: corrected reading equals the engine, verbatim does not") {
    SplitMix64 gen(7);
    int done = 0;
    while (done < 50) {
        FactorSequences seqs = random_factor_sequences(gen, 2);
        FiniteSequence f = random_sequence(gen, 1 + gen.next() % 11);
        try {
            FiniteSequence corrected = triplicate_inverse_printed(seqs, f, TriplicateReading::corrected);
            FiniteSequence generic = inverse_transform(seqs, f);
            CHECK(corrected == generic);
            ++done;
        } catch (const PhiVanishes&) {
        }
    }

    // delta recovery: F = (c, 0, 0, ...) keeps only the k = 0 block
    {
        FactorSequences seqs = ones(2);
        FiniteSequence f{Rational(5), Rational(0), Rational(0), Rational(0)};
        CHECK(triplicate_inverse_printed(seqs, f, TriplicateReading::corrected) ==
              inverse_transform(seqs, f));
    }

    // a chi-class slope makes the verbatim weight e_k + 3 f_k wrong already at n = 0
    {
        std::vector<CoefficientFamily> a{CoefficientFamily::constant(Rational(1)),
                                         CoefficientFamily::constant(Rational(1)),
                                         CoefficientFamily::constant(Rational(1))};
        std::vector<CoefficientFamily> b{CoefficientFamily::constant(Rational(0)),
                                         CoefficientFamily::constant(Rational(0)),
                                         CoefficientFamily::constant(Rational(1))};
        FactorSequences seqs(2, std::move(a), std::move(b));
        FiniteSequence f{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                         Rational(6), Rational(7)};
        CHECK(triplicate_inverse_printed(seqs, f, TriplicateReading::printed_verbatim) !=
              inverse_transform(seqs, f));
    }
}

TEST_CASE("phi degree property via finite differences") {
    SplitMix64 gen(8);
    for (unsigned ell = 0; ell <= 2; ++ell) {
        FactorSequences seqs = random_factor_sequences(gen, ell);
        for (unsigned long n = 0; n <= 8; ++n) {
            Rational diff(0);
            for (unsigned long j = 0; j <= n + 1; ++j) {
                Rational term = binomial_nk(n + 1, static_cast<long>(j)) *
                                phi_big(seqs, Rational(static_cast<long>(j)), n);
                diff += (n + 1 - j) % 2 == 1 ? -term : term;
            }
            CHECK(diff == Rational(0));
        }
    }
}
