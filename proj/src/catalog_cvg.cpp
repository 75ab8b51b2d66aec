// Records built on the classic Gould-Hsu pair and on the duplicate-inversion
// duals of the Chu-Vandermonde-Gauss summation formula.

#include "catalog_detail.hpp"

namespace hyperinvert::detail {

namespace {

IdentityRecord make_gh_classic_pair() {
    IdentityRecord rec;
    rec.id = "gh-classic-pair";
    rec.anchor = "Gould-Hsu (1973) reciprocal pair, single factor class";
    rec.status = Status::foundational;
    rec.params = {{"p", ParamKind::rational}, {"q", ParamKind::rational},
                  {"r", ParamKind::rational}, {"u", ParamKind::rational},
                  {"v", ParamKind::rational}, {"n", ParamKind::nonneg_integer}};
    // Round-trip: with phi built from a_j = p + j q, b_j = r and the affine
    // input sequence g(k) = u + k v, inverting the forward transform must
    // reproduce g(n) exactly.
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        FactorSequences seqs(0, {CoefficientFamily::affine(pa.r("p"), pa.r("q"))},
                             {CoefficientFamily::constant(pa.r("r"))});
        FiniteSequence g(n + 1);
        for (unsigned long k = 0; k <= n; ++k)
            g[k] = pa.r("u") + Rational(static_cast<long>(k)) * pa.r("v");
        return inverse_transform(seqs, forward_transform(seqs, g))[n];
    };
    auto rhs = [](const ParamAssignment& pa) {
        return pa.r("u") + Rational(pa.n) * pa.r("v");
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_cvg() {
    IdentityRecord rec;
    rec.id = "cvg";
    rec.anchor = "Chu-Vandermonde-Gauss summation 2F1(-n,a;c;1) = (c-a)_n/(c)_n";
    rec.status = Status::foundational;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        return cpfq({Rational(-pa.n), pa.r("a")}, {pa.r("c")}, Rational(1));
    };
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n) / pochhammer(pa.r("c"), n);
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_recirel1() {
    IdentityRecord rec;
    rec.id = "thm-recirel1";
    rec.anchor = "dual of CVG under duplicate inversion, first form: 4F3 + 4F3";
    rec.status = Status::derived;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n) / pochhammer(pa.r("c"), n);
    };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
        Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), a, 1 - a},
                             {rq(1, 2), c, Rational(1 - n) - c}, Rational(1));
        Rational second = guarded(rn * a / (Rational(1 - n) - c), [&] {
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), 1 + a, 1 - a},
                       {rq(3, 2), c, Rational(2 - n) - c}, Rational(1));
        });
        return first + second;
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_cor_chuwei1() {
    IdentityRecord rec;
    rec.id = "cor-chuwei1";
    rec.anchor = "Chu-Wei Eq. 5.1a, terminating balanced 4F3";
    rec.status = Status::suspect;
    rec.params = params_acn();
    auto rhs_printed = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n) / (Rational(2) * pochhammer(pa.r("c"), n));
    };
    auto lhs_printed = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c");
        return cpfq({rq(-n, 2), rq(1 - n, 2), a, 1 - a},
                   {rq(1, 2), c, Rational(1 - n) - c}, Rational(1));
    };
    // Averaging the first series of thm-recirel1 over a and -a collapses the
    // upper pair {a, 1-a} to {a, -a} and the right side to the half-sum.
    auto lhs_symmetrized = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c");
        return cpfq({rq(-n, 2), rq(1 - n, 2), a, -a},
                   {rq(1, 2), c, Rational(1 - n) - c}, Rational(1));
    };
    auto rhs_symmetrized = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), c = pa.r("c");
        return (pochhammer(c - a, n) + pochhammer(c + a, n)) / (Rational(2) * pochhammer(c, n));
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "right side is 1/2 instead of 1 at n = 0",
                            lhs_printed, rhs_printed});
    rec.variants.push_back({"symmetrized", true,
                            "(a, -a) upper pair with ((c-a)_n + (c+a)_n)/2 on the right",
                            lhs_symmetrized, rhs_symmetrized});
    return rec;
}

IdentityRecord make_cor_chuwei2() {
    IdentityRecord rec;
    rec.id = "cor-chuwei2";
    rec.anchor = "Chu-Wei Eq. 5.1b, terminating balanced 4F3";
    rec.status = Status::suspect;
    rec.params = params_acn();
    auto rhs_common = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), c = pa.r("c");
        Rational num = pochhammer(c - a, n + 1) - pochhammer(c + a - 1, n + 1);
        Rational den = Rational(pa.n + 1) * (Rational(1) - Rational(2) * a) * pochhammer(c, n);
        return num / den;
    };
    auto lhs_with_lower = [](Rational half) {
        return [half](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), a, 1 - a},
                       {half, c, Rational(1 - n) - c}, Rational(1));
        };
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "lower parameter 1/2 disagrees with the shifted combination",
                            lhs_with_lower(rq(1, 2)), rhs_common});
    rec.variants.push_back({"combined", true,
                            "lower parameter 3/2, as produced by the a -> 1-a, n -> n+1 combination",
                            lhs_with_lower(rq(3, 2)), rhs_common});
    return rec;
}

IdentityRecord make_thm_recirel2() {
    IdentityRecord rec;
    rec.id = "thm-recirel2";
    rec.anchor = "dual of CVG under duplicate inversion, second form";
    rec.status = Status::derived;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n) / pochhammer(pa.r("c"), n);
    };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
        const Rational one_minus_cn = Rational(1 - n) - c;
        Rational first = (Rational(1) - c) / one_minus_cn *
                         cpfq({rq(-n, 2), rq(1 - n, 2), a, 1 - a},
                             {rq(1, 2), c - 1, Rational(2 - n) - c}, Rational(1));
        Rational second = guarded(rn * (Rational(1) - a) / one_minus_cn, [&] {
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), a, Rational(2) - a},
                       {rq(3, 2), c, Rational(2 - n) - c}, Rational(1));
        });
        return first - second;
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_cor_balid1() {
    IdentityRecord rec;
    rec.id = "cor-balid1";
    rec.anchor = "balanced 5F4 from combining the first and second CVG duals (a -> a+1), n > 0";
    rec.status = Status::suspect;
    rec.params = params_acn();
    rec.side_condition = [](const ParamAssignment& pa) { return pa.n > 0; };
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n - 1) / pochhammer(pa.r("c"), n - 1);
    };
    auto lhs_signed = [](int sign) {
        return [sign](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
            Rational mu = a * rn / (Rational(2) * a + Rational(2) * c + rn - 2);
            if (sign < 0) mu = -mu;
            return cpfq({rq(-n, 2), rq(1 - n, 2), 1 + mu, a, -a},
                       {rq(1, 2), mu, c, Rational(2 - n) - c}, Rational(1));
        };
    };
    rec.variants.push_back({"printed-verbatim", true, "", lhs_signed(-1), rhs});
    rec.variants.push_back({"mu-sign-flip", false,
                            "sign of the an/(2a+2c+n-2) multiplier pair flipped",
                            lhs_signed(+1), rhs});
    return rec;
}

IdentityRecord make_cor_balid2() {
    IdentityRecord rec;
    rec.id = "cor-balid2";
    rec.anchor = "balanced 5F4 from combining the first and second CVG duals (c -> c+1)";
    rec.status = Status::suspect;
    rec.params = params_acn();
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
        return (c + rn) / (c + rn - a * rn) * pochhammer(c + 1 - a, n) / pochhammer(c + 1, n);
    };
    auto lhs_signed = [](int sign) {
        return [sign](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
            Rational nu = (c + rn - a * rn) / (Rational(2) * a + Rational(2) * c + rn - 1);
            if (sign < 0) nu = -nu;
            return cpfq({rq(-n, 2), rq(1 - n, 2), 1 + nu, a, 1 - a},
                       {rq(3, 2), nu, c + 1, Rational(1 - n) - c}, Rational(1));
        };
    };
    rec.variants.push_back({"printed-verbatim", true, "", lhs_signed(+1), rhs});
    rec.variants.push_back({"nu-sign-flip", false,
                            "sign of the (c+n-an)/(2a+2c+n-1) multiplier pair flipped",
                            lhs_signed(-1), rhs});
    return rec;
}

IdentityRecord make_thm_recirel3a() {
    IdentityRecord rec;
    rec.id = "thm-recirel3a";
    rec.anchor = "dual of CVG under duplicate inversion, third form, z = -1/4";
    rec.status = Status::derived;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a"), n) / pochhammer(pa.r("c"), n);
    };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
        const Rational z = rq(-1, 4);
        Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), c - a, a, 1 - a},
                             {c / 2, (c + 1) / Rational(2), rq(1, 2), c - a + rn}, z);
        Rational theta = (Rational(1) + c - a) / 3;
        Rational second = guarded(rn * a * (c - a + 1) / (c * (c - a + rn)), [&] {
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), 1 + theta, c - a, 1 + a, 1 - a},
                       {(c + 1) / Rational(2), (c + 2) / Rational(2), rq(3, 2), theta,
                        c + 1 - a + rn}, z);
        });
        return first - second;
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_recirel3b() {
    IdentityRecord rec;
    rec.id = "thm-recirel3b";
    rec.anchor = "dual of CVG under duplicate inversion, third form second variant, z = -1/4";
    rec.status = Status::derived;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") + 1 - pa.r("a"), n) / pochhammer(pa.r("c"), n);
    };
    auto rhs_signed = [](int sign) {
        return [sign](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
            const Rational z = rq(-1, 4);
            Rational theta = (c - a) / 3;
            Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), 1 + theta, c - a, a, 1 - a},
                                 {c / 2, (c + 1) / Rational(2), rq(1, 2), theta, c + 1 - a + rn}, z);
            Rational second = guarded(rn * (Rational(1) - a) / c, [&] {
                return cpfq({rq(1 - n, 2), rq(2 - n, 2), c + 1 - a, a, Rational(2) - a},
                           {(c + 1) / Rational(2), (c + 2) / Rational(2), rq(3, 2),
                            c + 1 - a + rn}, z);
            });
            return sign < 0 ? first - second : first + second;
        };
    };
    rec.variants.push_back({"printed", false,
                            "printed '-' between the terms contradicts the section's own dual relation",
                            lhs, rhs_signed(-1)});
    rec.variants.push_back({"second-term-sign-flip", true,
                            "'+' between the terms, consistent with the dual relation",
                            lhs, rhs_signed(+1)});
    return rec;
}

IdentityRecord make_thm_recirel4a() {
    IdentityRecord rec;
    rec.id = "thm-recirel4a";
    rec.anchor = "dual of CVG under duplicate inversion, fourth form, z = -4";
    rec.status = Status::suspect;
    rec.params = params_acn();
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
        const Rational z(-4);
        Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), (Rational(1) - a) / 2, (Rational(2) - a) / 2,
                              c - a},
                             {rq(1, 2), c - 1, Rational(2 - n) - c, c - a + rn}, z);
        Rational theta = (Rational(1) + c - a) / 3;
        Rational pre = rn * (Rational(1) - a) * (c - a + 1) / ((Rational(1) - c) * (c - a + rn));
        Rational second = guarded(pre, [&] {
            return cpfq({1 + theta, rq(1 - n, 2), rq(2 - n, 2), (Rational(2) - a) / 2,
                        (Rational(3) - a) / 2, c - a},
                       {rq(3, 2), theta, c, Rational(2 - n) - c, c + 1 - a + rn}, z);
        });
        return first - second;
    };
    auto lhs_verbatim = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), c = pa.r("c");
        return pochhammer(c - a, n) / (pochhammer(c, n) - Rational(1));
    };
    auto lhs_repaired = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), c = pa.r("c");
        return pochhammer(c - a, n) / pochhammer(c - 1, n);
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "left denominator read literally as (c)_n - 1",
                            lhs_verbatim, rhs});
    rec.variants.push_back({"token-repair", true,
                            "left denominator read as (c-1)_n",
                            lhs_repaired, rhs});
    return rec;
}

IdentityRecord make_thm_recirel4b() {
    IdentityRecord rec;
    rec.id = "thm-recirel4b";
    rec.anchor = "dual of CVG under duplicate inversion, fourth form second variant, z = -4";
    rec.status = Status::suspect;
    rec.params = params_acn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        return pochhammer(pa.r("c") - pa.r("a") + 1, n) / pochhammer(pa.r("c"), n);
    };
    auto rhs_signed = [](int sign) {
        return [sign](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c"), rn(n);
            const Rational z(-4);
            Rational theta = (c - a) / 3;
            Rational first = cpfq({1 + theta, rq(-n, 2), rq(1 - n, 2), (Rational(1) - a) / 2,
                                  (Rational(2) - a) / 2, c - a},
                                 {rq(1, 2), theta, c, Rational(1 - n) - c, c + 1 - a + rn}, z);
            Rational second = guarded(rn * (Rational(1) - a) / (Rational(1 - n) - c), [&] {
                return cpfq({rq(1 - n, 2), rq(2 - n, 2), (Rational(2) - a) / 2,
                            (Rational(3) - a) / 2, Rational(1) + c - a},
                           {rq(3, 2), c, Rational(2 - n) - c, c + 1 - a + rn}, z);
            });
            return sign < 0 ? first - second : first + second;
        };
    };
    rec.variants.push_back({"printed-verbatim", true, "", lhs, rhs_signed(-1)});
    rec.variants.push_back({"second-term-sign-flip", false,
                            "sibling-pattern check: '+' between the terms",
                            lhs, rhs_signed(+1)});
    return rec;
}

} // namespace

void register_cvg_family(std::vector<IdentityRecord>& out) {
    out.push_back(make_gh_classic_pair());
    out.push_back(make_cvg());
    out.push_back(make_thm_recirel1());
    out.push_back(make_cor_chuwei1());
    out.push_back(make_cor_chuwei2());
    out.push_back(make_thm_recirel2());
    out.push_back(make_cor_balid1());
    out.push_back(make_cor_balid2());
    out.push_back(make_thm_recirel3a());
    out.push_back(make_thm_recirel3b());
    out.push_back(make_thm_recirel4a());
    out.push_back(make_thm_recirel4b());
}

} // namespace hyperinvert::detail
