#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyperinvert/catalog.hpp>
#include <hyperinvert/errors.hpp>
#include <hyperinvert/factorials.hpp>
#include <hyperinvert/inversion.hpp>
#include <hyperinvert/sampling.hpp>

using namespace hyperinvert;

namespace {

const Catalog& cat() {
    static Catalog c;
    return c;
}

ParamAssignment acn(Rational a, Rational c, long n) {
    ParamAssignment pa;
    pa.rationals = {{"a", a}, {"c", c}};
    pa.n = n;
    return pa;
}

ParamAssignment abcn(Rational a, Rational b, Rational c, long n, long ell = 1) {
    ParamAssignment pa;
    pa.rationals = {{"a", a}, {"b", b}, {"c", c}};
    pa.n = n;
    pa.ell = ell;
    return pa;
}

} // namespace

TEST_CASE("catalog listing is stable and complete") {
    CHECK(cat().records().size() >= 24);
    CHECK(cat().contains("cvg"));
    CHECK(cat().contains("hr-conv"));
    CHECK_FALSE(cat().contains("no-such-id"));
    CHECK_THROWS_AS(cat().find("no-such-id"), UnknownIdentity);
    CHECK_THROWS_AS(cat().find("cvg").variant("no-such-variant"), UnknownVariant);

    Catalog other;
    REQUIRE(other.records().size() == cat().records().size());
    for (std::size_t i = 0; i < other.records().size(); ++i)
        CHECK(other.records()[i].id == cat().records()[i].id);

    for (const auto& rec : cat().records()) {
        CHECK(!rec.variants.empty());
        if (rec.status == Status::suspect) {
            CHECK(rec.variants.size() >= 2);
            CHECK_NOTHROW(rec.variant("printed-verbatim"));
        }
    }
}

TEST_CASE("frozen evaluation examples") {
    auto [cvg_l, cvg_r] = eval_identity_sides(cat(), "cvg", "printed", acn(Rational(1), Rational(3), 2));
    CHECK(cvg_l == Rational(1, 2));
    CHECK(cvg_r == Rational(1, 2));

    auto [ps_l, ps_r] =
        eval_identity_sides(cat(), "ps", "printed", abcn(Rational(2, 3), Rational(5, 7), Rational(9, 4), 0));
    CHECK(ps_l == Rational(1));
    CHECK(ps_r == Rational(1));

    auto [hr_l, hr_r] =
        eval_identity_sides(cat(), "hr-conv", "printed", abcn(Rational(2), Rational(1), Rational(3), 2));
    CHECK(hr_l == Rational(10));
    CHECK(hr_r == Rational(10));
}

TEST_CASE("check_identity outcomes") {
    CHECK(check_identity(cat(), "cvg", "printed", acn(Rational(1), Rational(3), 2)).kind ==
          OutcomeKind::holds);

    auto bad = check_identity(cat(), "cvg", "printed", acn(Rational(1), Rational(-2), 5));
    CHECK(bad.kind == OutcomeKind::not_admissible);

    auto cw = check_identity(cat(), "cor-chuwei1", "printed-verbatim", acn(Rational(2, 3), Rational(7, 5), 0));
    REQUIRE(cw.kind == OutcomeKind::fails);
    CHECK(cw.lhs == Rational(1));
    CHECK(cw.rhs == Rational(1, 2));

    CHECK_THROWS_AS(check_identity(cat(), "nope", "printed", acn(Rational(1), Rational(2), 1)),
                    UnknownIdentity);
}

TEST_CASE("chuwei1: symmetrized variant is the surviving one") {
    SplitMix64 gen(31);
    RationalBounds bounds;
    int held = 0, printed_failed = 0;
    while (held < 40) {
        ParamAssignment pa =
            acn(draw_rational(gen, bounds), draw_rational(gen, bounds), static_cast<long>(gen.next() % 9));
        auto sym = check_identity(cat(), "cor-chuwei1", "symmetrized", pa);
        if (sym.kind == OutcomeKind::not_admissible) continue;
        CHECK(sym.kind == OutcomeKind::holds);
        ++held;
        auto printed = check_identity(cat(), "cor-chuwei1", "printed-verbatim", pa);
        if (printed.kind == OutcomeKind::fails) ++printed_failed;
    }
    CHECK(printed_failed > 0);

    // symmetrized left side equals the average of the printed one over +-a
    for (int trial = 0; trial < 25; ++trial) {
        Rational a = draw_rational(gen, bounds), c = draw_rational(gen, bounds);
        long n = static_cast<long>(gen.next() % 9);
        const auto& rec = cat().find("cor-chuwei1");
        try {
            Rational avg = (rec.variant("printed-verbatim").lhs(acn(a, c, n)) +
                            rec.variant("printed-verbatim").lhs(acn(-a, c, n))) /
                           Rational(2);
            CHECK(rec.variant("symmetrized").lhs(acn(a, c, n)) == avg);
        } catch (const EvalError&) {
        }
    }
}

TEST_CASE("chuwei2: lower parameter 3/2 survives, 1/2 does not") {
    ParamAssignment pa = acn(Rational(2), Rational(5), 2);
    auto printed = check_identity(cat(), "cor-chuwei2", "printed-verbatim", pa);
    REQUIRE(printed.kind == OutcomeKind::fails);
    CHECK(printed.lhs == Rational(16, 15));
    CHECK(printed.rhs == Rational(46, 45));
    auto fixed = check_identity(cat(), "cor-chuwei2", "combined", pa);
    REQUIRE(fixed.kind == OutcomeKind::holds);
    CHECK(fixed.lhs == Rational(46, 45));
}

TEST_CASE("balanced-series corollaries hold as printed, sign probes fail") {
    ParamAssignment pa = acn(Rational(1), Rational(3), 2);
    auto b1 = check_identity(cat(), "cor-balid1", "printed-verbatim", pa);
    REQUIRE(b1.kind == OutcomeKind::holds);
    CHECK(b1.lhs == Rational(2, 3));
    CHECK(check_identity(cat(), "cor-balid1", "mu-sign-flip", pa).kind == OutcomeKind::fails);

    auto b2 = check_identity(cat(), "cor-balid2", "printed-verbatim", acn(Rational(2, 3), Rational(5, 4), 3));
    CHECK(b2.kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "cor-balid2", "nu-sign-flip", acn(Rational(2, 3), Rational(5, 4), 3)).kind ==
          OutcomeKind::fails);

    // n = 0 violates cor-balid1's side condition
    CHECK(check_identity(cat(), "cor-balid1", "printed-verbatim", acn(Rational(1), Rational(3), 0)).kind ==
          OutcomeKind::not_admissible);
}

TEST_CASE("recirel3b: printed sign fails at n = 1, flipped sign holds") {
    ParamAssignment pa = acn(Rational(2), Rational(5), 2);
    auto printed = check_identity(cat(), "thm-recirel3b", "printed", pa);
    REQUIRE(printed.kind == OutcomeKind::fails);
    CHECK(printed.rhs == Rational(22, 15));
    auto flipped = check_identity(cat(), "thm-recirel3b", "second-term-sign-flip", pa);
    REQUIRE(flipped.kind == OutcomeKind::holds);
    CHECK(flipped.lhs == Rational(2, 3));

    auto at1 = check_identity(cat(), "thm-recirel3b", "printed", acn(Rational(2, 3), Rational(7, 4), 1));
    CHECK(at1.kind == OutcomeKind::fails);
}

TEST_CASE("recirel4a: only the (c-1)_n reading survives") {
    ParamAssignment pa = acn(Rational(3, 2), Rational(7, 2), 3);
    CHECK(check_identity(cat(), "thm-recirel4a", "token-repair", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-recirel4a", "printed-verbatim", pa).kind == OutcomeKind::fails);
}

TEST_CASE("dual-construction consistency for thm-recirel1") {
    // rebuild the identity by inverting the CVG-derived F-sequence with
    // phi(x;m) = (1-c-x)_m, psi == 1 and compare against the record's value
    SplitMix64 gen(32);
    RationalBounds bounds;
    int done = 0;
    while (done < 30) {
        Rational a = draw_rational(gen, bounds), c = draw_rational(gen, bounds);
        long n = static_cast<long>(gen.next() % 9);
        ParamAssignment pa = acn(a, c, n);
        if (check_identity(cat(), "thm-recirel1", "printed", pa).kind != OutcomeKind::holds) continue;
        FactorSequences seqs(1,
                             {CoefficientFamily::affine(Rational(1) - c, Rational(1)),
                              CoefficientFamily::constant(Rational(1))},
                             {CoefficientFamily::constant(Rational(-1)),
                              CoefficientFamily::constant(Rational(0))});
        FiniteSequence f(static_cast<std::size_t>(n) + 1);
        bool pole = false;
        for (long m = 0; m <= n && !pole; ++m) {
            const auto mh = static_cast<unsigned long>(m / 2);
            const auto mh1 = static_cast<unsigned long>((m + 1) / 2);
            Rational den = pochhammer(c, mh1);
            if (den.is_zero()) {
                pole = true;
                break;
            }
            f[static_cast<std::size_t>(m)] =
                pochhammer(Rational(1) - a, mh) * pochhammer(a, mh1) / den;
        }
        if (pole) continue;
        try {
            Rational reconstructed = inverse_transform(seqs, f)[static_cast<std::size_t>(n)];
            auto [lhs, rhs] = eval_identity_sides(cat(), "thm-recirel1", "printed", pa);
            CHECK(reconstructed == rhs);
            CHECK(reconstructed == lhs);
            ++done;
        } catch (const PhiVanishes&) {
        }
    }
}

TEST_CASE("hrrecirel1: pair fixed to 1-2b with '+' is the unique survivor") {
    ParamAssignment pa = abcn(Rational(2, 3), Rational(3), Rational(5, 4), 3);
    CHECK(check_identity(cat(), "thm-hrrecirel1", "paired-plus", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-hrrecirel1", "paired-minus", pa).kind == OutcomeKind::fails);
    CHECK(check_identity(cat(), "thm-hrrecirel1", "printed-verbatim", pa).kind == OutcomeKind::fails);
}

TEST_CASE("hrrecirel2: the /3 reading of the third series is the survivor") {
    ParamAssignment pa = abcn(Rational(1, 2), Rational(3), Rational(7, 4), 5);
    CHECK(check_identity(cat(), "thm-hrrecirel2", "token-repair", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-hrrecirel2", "printed-verbatim", pa).kind == OutcomeKind::fails);
    CHECK(check_identity(cat(), "thm-hrrecirel2", "middle-sign-flip", pa).kind == OutcomeKind::fails);
}

TEST_CASE("hrrecirel3 reduces to hrrecirel1 at ell = 1 and holds for ell up to 4") {
    for (long ell = 1; ell <= 4; ++ell) {
        ParamAssignment pa = abcn(Rational(2, 3), Rational(3), Rational(9, 4), 6, ell);
        auto outcome = check_identity(cat(), "thm-hrrecirel3", "printed", pa);
        CHECK(outcome.kind == OutcomeKind::holds);
    }
    ParamAssignment pa = abcn(Rational(2, 3), Rational(3), Rational(5, 4), 3, 1);
    auto general = eval_identity_sides(cat(), "thm-hrrecirel3", "printed", pa);
    auto duplicate = eval_identity_sides(cat(), "thm-hrrecirel1", "paired-plus", pa);
    CHECK(general.second == duplicate.second);
}

TEST_CASE("ps family spot checks") {
    ParamAssignment pa = abcn(Rational(2, 3), Rational(4, 3), Rational(7, 2), 4);
    CHECK(check_identity(cat(), "thm-psrecirel1", "printed", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-psrecirel2a", "printed", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-psrecirel2b", "token-repair", pa).kind == OutcomeKind::holds);
    CHECK(check_identity(cat(), "thm-psrecirel3", "token-repair", pa).kind == OutcomeKind::holds);

    // odd n keeps the literal (2-n)/2 lower parameter pole-free yet wrong
    ParamAssignment odd = abcn(Rational(2, 3), Rational(4, 3), Rational(7, 2), 5);
    CHECK(check_identity(cat(), "thm-psrecirel2b", "printed-verbatim", odd).kind == OutcomeKind::fails);
    CHECK(check_identity(cat(), "thm-psrecirel3", "printed-verbatim", pa).kind == OutcomeKind::fails);
}
