// Records built on the Hagen-Rothe convolution and its duplicate, triplicate
// and general multiplicate inversion duals.

#include "catalog_detail.hpp"

namespace hyperinvert::detail {

namespace {

// Shared left side of the Hagen-Rothe reciprocal relations:
// (c+a+bn)/(c+a) * (c+a)_n / (c)_n
Rational hr_lhs(const ParamAssignment& pa) {
    const auto n = static_cast<unsigned long>(pa.n);
    const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(pa.n);
    return (c + a + b * rn) / (c + a) * pochhammer(c + a, n) / pochhammer(c, n);
}

IdentityRecord make_hr_conv() {
    IdentityRecord rec;
    rec.id = "hr-conv";
    rec.anchor = "Hagen-Rothe binomial convolution sum_k a/(a+bk) C(a+bk,k) C(c-bk,n-k) = C(a+c,n)";
    rec.status = Status::foundational;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        Rational acc(0);
        for (long k = 0; k <= n; ++k) {
            const Rational bk = b * Rational(k);
            acc += a / (a + bk) * binomial_general(a + bk, static_cast<unsigned long>(k)) *
                   binomial_general(c - bk, static_cast<unsigned long>(n - k));
        }
        return acc;
    };
    auto rhs = [](const ParamAssignment& pa) {
        return binomial_general(pa.r("a") + pa.r("c"), static_cast<unsigned long>(pa.n));
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_hrrecirel1() {
    IdentityRecord rec;
    rec.id = "thm-hrrecirel1";
    rec.anchor = "dual of Hagen-Rothe under duplicate inversion: 5F4 pair";
    rec.status = Status::suspect;
    rec.params = params_abcn();
    // First series, with the multiplier-pair denominators chosen per reading:
    // the printed display has 1+2b above the pair and 1-2b below it.
    auto first_series = [](const ParamAssignment& pa, long up_sign, long lo_sign) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational up = (c + b * rn) / (Rational(1) + Rational(up_sign) * 2 * b);
        Rational lo = (c + b * rn) / (Rational(1) + Rational(lo_sign) * 2 * b);
        return cpfq({rq(-n, 2), rq(1 - n, 2), 1 + up, -a, a + 1},
                   {rq(1, 2), lo, c + 1, Rational(1 - n) - c}, Rational(1));
    };
    auto second_term = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational pre = rn * a * (b * rn - b + c) / (c * (c - 1 + rn));
        return guarded(pre, [&] {
            Rational theta = (c + b * rn - b) / (Rational(1) - 2 * b);
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), 1 + theta, 1 - a, a + 1},
                       {rq(3, 2), theta, c + 1, Rational(2 - n) - c}, Rational(1));
        });
    };
    auto rhs_printed = [first_series, second_term](const ParamAssignment& pa) {
        const Rational b = pa.r("b"), c = pa.r("c"), rn(pa.n);
        return (c + b * rn) / c * first_series(pa, +1, -1) + second_term(pa);
    };
    auto rhs_paired_minus = [first_series, second_term](const ParamAssignment& pa) {
        const Rational b = pa.r("b"), c = pa.r("c"), rn(pa.n);
        return (c + b * rn) / c * first_series(pa, -1, -1) - second_term(pa);
    };
    auto rhs_paired_plus = [first_series, second_term](const ParamAssignment& pa) {
        const Rational b = pa.r("b"), c = pa.r("c"), rn(pa.n);
        return (c + b * rn) / c * first_series(pa, -1, -1) + second_term(pa);
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "multiplier pair uses 1+2b above, 1-2b below; stray '=' read as '+'",
                            hr_lhs, rhs_printed});
    rec.variants.push_back({"paired-minus", false,
                            "pair fixed to 1-2b, '-' between the terms",
                            hr_lhs, rhs_paired_minus});
    rec.variants.push_back({"paired-plus", true,
                            "pair fixed to 1-2b, '+' between the terms",
                            hr_lhs, rhs_paired_plus});
    return rec;
}

IdentityRecord make_prop_hrbalid1() {
    IdentityRecord rec;
    rec.id = "prop-hrbalid1";
    rec.anchor = "terminating balanced 5F4 with free parameter b, from the Hagen-Rothe dual at +-a";
    rec.status = Status::derived;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational theta = (c + b * rn) / (Rational(1) - 2 * b);
        return cpfq({rq(-n, 2), rq(1 - n, 2), 1 + theta, -a, a},
                   {rq(1, 2), theta, c + 1, Rational(1 - n) - c}, Rational(1));
    };
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(pa.n);
        const Rational cbn = c + b * rn;
        return c * (cbn + a) / (Rational(2) * cbn * (a + c)) * pochhammer(c + a, n) / pochhammer(c, n) +
               c * (cbn - a) / (Rational(2) * cbn * (c - a)) * pochhammer(c - a, n) / pochhammer(c, n);
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_prop_hrbalid2() {
    IdentityRecord rec;
    rec.id = "prop-hrbalid2";
    rec.anchor = "terminating balanced 5F4 with free parameter b, a -> -1-a and n -> n+1 combination";
    rec.status = Status::derived;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational theta = (c + b * rn) / (Rational(1) - 2 * b);
        return cpfq({rq(-n, 2), rq(1 - n, 2), 1 + theta, -a, a + 1},
                   {rq(3, 2), theta, c + 1, Rational(1 - n) - c}, Rational(1));
    };
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(pa.n);
        const Rational cbn = c + b * rn;
        const Rational den = Rational(pa.n + 1) * (Rational(2) * a + 1) * cbn;
        return c * (cbn + a + b) / den * pochhammer(c + a + 1, n) / pochhammer(c, n) -
               c * (cbn - a - 1 + b) / den * pochhammer(c - a, n) / pochhammer(c, n);
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_cor_threecor(int which) {
    IdentityRecord rec;
    rec.params = params_acn();
    rec.status = Status::derived;
    if (which == 1) {
        rec.id = "cor-threecor-i";
        rec.anchor = "4F3 specialization of prop-hrbalid1 at b = (2c+1)/(2-2n)";
        auto lhs = [](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), -a, a},
                       {rq(-1, 2), c + 1, Rational(1 - n) - c}, Rational(1));
        };
        auto rhs = [](const ParamAssignment& pa) {
            const auto n = static_cast<unsigned long>(pa.n);
            const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
            const Rational two_cn = Rational(2) * c + rn;
            return c * (2 * c + 2 * a - 2 * rn * a + rn) / (Rational(2) * two_cn * (c + a)) *
                       pochhammer(c + a, n) / pochhammer(c, n) +
                   c * (2 * c - 2 * a + 2 * rn * a + rn) / (Rational(2) * two_cn * (c - a)) *
                       pochhammer(c - a, n) / pochhammer(c, n);
        };
        rec.variants.push_back({"printed", true, "", lhs, rhs});
    } else if (which == 2) {
        rec.id = "cor-threecor-ii";
        rec.anchor = "Chu-Wei Eq. 5.2a: 4F3 specialization of prop-hrbalid1 at b = (a-c)/(2a+n)";
        auto lhs = [](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), -a, a + 1},
                       {rq(1, 2), c + 1, Rational(1 - n) - c}, Rational(1));
        };
        auto rhs = [](const ParamAssignment& pa) {
            const auto n = static_cast<unsigned long>(pa.n);
            const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
            return c / (Rational(2) * c + rn) *
                   (pochhammer(c + a + 1, n) + pochhammer(c - a, n)) / pochhammer(c, n);
        };
        rec.variants.push_back({"printed", true, "", lhs, rhs});
    } else {
        rec.id = "cor-threecor-iii";
        rec.anchor = "Chu-Wei Eq. 5.3a: 4F3 specialization of prop-hrbalid1 at b -> 1/2";
        auto lhs = [](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), -a, a},
                       {rq(1, 2), c + 1, Rational(1 - n) - c}, Rational(1));
        };
        auto rhs = [](const ParamAssignment& pa) {
            const auto n = static_cast<unsigned long>(pa.n);
            const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
            const Rational two_cn = Rational(2) * c + rn;
            return c * (2 * c + 2 * a + rn) / (Rational(2) * two_cn * (c + a)) *
                       pochhammer(c + a, n) / pochhammer(c, n) +
                   c * (2 * c - 2 * a + rn) / (Rational(2) * two_cn * (c - a)) *
                       pochhammer(c - a, n) / pochhammer(c, n);
        };
        rec.variants.push_back({"printed", true, "", lhs, rhs});
    }
    return rec;
}

IdentityRecord make_cor_twocor(int which) {
    IdentityRecord rec;
    rec.params = params_acn();
    rec.status = Status::derived;
    if (which == 1) {
        rec.id = "cor-twocor-i";
        rec.anchor = "Chu-Wei Eq. 5.2b: 4F3 specialization of prop-hrbalid2 at b = (a-c+1)/(2a+n+2)";
        auto lhs = [](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), -a, Rational(2) + a},
                       {rq(3, 2), c + 1, Rational(1 - n) - c}, Rational(1));
        };
        auto rhs = [](const ParamAssignment& pa) {
            const auto n = static_cast<unsigned long>(pa.n);
            const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
            Rational num = pochhammer(c + a + 1, n + 1) - pochhammer(c - a - 1, n + 1);
            Rational den = Rational(pa.n + 1) * (a + 1) * (Rational(2) * c + rn) * pochhammer(c, n);
            return c * num / den;
        };
        rec.variants.push_back({"printed", true, "", lhs, rhs});
    } else {
        rec.id = "cor-twocor-ii";
        rec.anchor = "Chu-Wei Eq. 5.3b: 4F3 specialization of prop-hrbalid2 at b -> 1/2";
        auto lhs = [](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), c = pa.r("c");
            return cpfq({rq(-n, 2), rq(1 - n, 2), -a, a + 1},
                       {rq(3, 2), c + 1, Rational(1 - n) - c}, Rational(1));
        };
        auto rhs = [](const ParamAssignment& pa) {
            const auto n = static_cast<unsigned long>(pa.n);
            const Rational a = pa.r("a"), c = pa.r("c"), rn(pa.n);
            const Rational den = Rational(pa.n + 1) * (Rational(2) * a + 1) * (Rational(2) * c + rn);
            return c * (2 * c + 2 * a + rn + 1) / den * pochhammer(c + a + 1, n) / pochhammer(c, n) -
                   c * (2 * c - 2 * a + rn - 1) / den * pochhammer(c - a, n) / pochhammer(c, n);
        };
        rec.variants.push_back({"printed", true, "", lhs, rhs});
    }
    return rec;
}

IdentityRecord make_thm_hrrecirel2() {
    IdentityRecord rec;
    rec.id = "thm-hrrecirel2";
    rec.anchor = "dual of Hagen-Rothe under triplicate inversion: 7F6 triple";
    rec.status = Status::suspect;
    rec.params = params_abcn();
    // third_den = 2 reproduces the printed upper row (2-n)/2,(3-n)/2,(4-n)/2;
    // 3 is the triplicate-consistent reading.
    auto rhs_of = [](long third_den, int middle_sign) {
        return [third_den, middle_sign](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
            const Rational two3b = Rational(2) - 3 * b;
            Rational theta1 = (c + b * rn) / two3b;
            Rational first = (c + b * rn) / c *
                             cpfq({rq(-n, 3), rq(1 - n, 3), rq(2 - n, 3), 1 + theta1, -a / 2,
                                  (Rational(1) - a) / 2, a + 1},
                                 {rq(1, 3), rq(2, 3), theta1, (c + 1) / Rational(2),
                                  (c + 2) / Rational(2), Rational(1 - n) - c}, Rational(1));
            Rational theta2 = (c + 1 + b * rn - b) / two3b;
            Rational second = guarded(rn * a * (c + 1 + b * rn - b) / (c * (c + 1)), [&] {
                return cpfq({rq(1 - n, 3), rq(2 - n, 3), rq(3 - n, 3), 1 + theta2,
                            (Rational(1) - a) / 2, (Rational(2) - a) / 2, a + 1},
                           {rq(2, 3), rq(4, 3), theta2, (c + 2) / Rational(2),
                            (c + 3) / Rational(2), Rational(1 - n) - c}, Rational(1));
            });
            Rational theta3 = (c + 1 + b * rn - 2 * b) / two3b;
            Rational pre3 = rn * a * (rn - 1) * (a - 1) * (c + 1 + b * rn - 2 * b) /
                            (Rational(2) * c * (c + 1) * (c - 1 + rn));
            Rational third = guarded(pre3, [&] {
                return cpfq({rq(2 - n, third_den), rq(3 - n, third_den), rq(4 - n, third_den),
                            1 + theta3, (Rational(2) - a) / 2, (Rational(3) - a) / 2, a + 1},
                           {rq(4, 3), rq(5, 3), theta3, (c + 2) / Rational(2),
                            (c + 3) / Rational(2), Rational(2 - n) - c}, Rational(1));
            });
            return middle_sign > 0 ? first + second + third : first - second + third;
        };
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "third series' upper row read literally with denominator 2",
                            hr_lhs, rhs_of(2, +1)});
    rec.variants.push_back({"middle-sign-flip", false,
                            "sign probe: '-' on the middle term",
                            hr_lhs, rhs_of(3, -1)});
    rec.variants.push_back({"token-repair", true,
                            "third series' upper row with the triplicate denominator 3",
                            hr_lhs, rhs_of(3, +1)});
    return rec;
}

IdentityRecord make_thm_hrrecirel3() {
    IdentityRecord rec;
    rec.id = "thm-hrrecirel3";
    rec.anchor = "dual of Hagen-Rothe under multiplicate inversion, general ell (instantiated ell = 1..4)";
    rec.status = Status::derived;
    rec.params = {{"a", ParamKind::rational}, {"b", ParamKind::rational}, {"c", ParamKind::rational},
                  {"n", ParamKind::nonneg_integer}, {"ell", ParamKind::nonneg_integer}};
    rec.uses_ell = true;
    rec.side_condition = [](const ParamAssignment& pa) { return pa.ell >= 1 && pa.ell <= 4; };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n, L = pa.ell;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n), rL(L);
        const Rational pair_den = rL - b * (rL + 1);

        // leading term (the i = ell + 1 block of the dual)
        Rational pre1 = pochhammer(Rational(-n), L) * pochhammer(-a, L) /
                        (Rational(factorial(L)) * (Rational(1 - n) - c));
        Rational weight1 = (b - 1) * rL - c - b * rn + 1;
        Rational den1(1);
        for (long j = 1; j <= L; ++j) den1 *= rL - Rational(j) + c;
        Rational term1 = guarded(pre1 * weight1 / den1, [&] {
            Rational theta = (c + b * rn - (b - 1) * rL - 1) / pair_den;
            RV up = {a + 1, 1 + theta};
            for (long j = 0; j <= L; ++j) up.push_back(Rational(L + j - n, L + 1));
            for (long j = 1; j <= L; ++j) up.push_back((rL + Rational(j) - a - 1) / rL);
            RV lo = {Rational(2 - n) - c, theta};
            for (long j = 1; j <= L; ++j) lo.push_back(Rational(L + j + 1, L + 1));
            for (long j = 1; j <= L; ++j) lo.push_back((Rational(2 * L - j) + c) / rL);
            return cpfq(std::move(up), std::move(lo), Rational(1));
        });

        Rational total = term1;
        for (long i = 1; i <= L; ++i) {
            Rational weight_i = c + b * rn - (b - 1) * Rational(i - 1);
            Rational pre_i = pochhammer(Rational(-n), static_cast<unsigned long>(i - 1)) *
                             pochhammer(-a, static_cast<unsigned long>(i - 1)) /
                             Rational(factorial(static_cast<unsigned long>(i - 1)));
            Rational den_i(1);
            for (long j = 1; j <= L; ++j)
                for (long k = 1; k <= (i + j) / (L + 1); ++k)
                    den_i *= Rational(k * L - j) + c;
            total += guarded(pre_i * weight_i / den_i, [&] {
                Rational theta = weight_i / pair_den;
                RV up = {Rational(1), a + 1, 1 + theta};
                for (long j = 0; j <= L; ++j) up.push_back(Rational(i + j - n - 1, L + 1));
                for (long j = 1; j <= L; ++j) up.push_back((Rational(i + j - 2) - a) / rL);
                RV lo = {Rational(1 - n) - c, theta};
                for (long j = 0; j <= L; ++j) lo.push_back(Rational(i + j, L + 1));
                for (long j = 1; j <= L; ++j)
                    lo.push_back((rL - Rational(j) + c) / rL + Rational((i + j) / (L + 1)));
                return cpfq(std::move(up), std::move(lo), Rational(1));
            });
        }
        return total;
    };
    rec.variants.push_back({"printed", true, "", hr_lhs, rhs});
    return rec;
}

} // namespace

void register_hr_family(std::vector<IdentityRecord>& out) {
    out.push_back(make_hr_conv());
    out.push_back(make_thm_hrrecirel1());
    out.push_back(make_prop_hrbalid1());
    out.push_back(make_prop_hrbalid2());
    out.push_back(make_cor_threecor(1));
    out.push_back(make_cor_threecor(2));
    out.push_back(make_cor_threecor(3));
    out.push_back(make_cor_twocor(1));
    out.push_back(make_cor_twocor(2));
    out.push_back(make_thm_hrrecirel2());
    out.push_back(make_thm_hrrecirel3());
}

} // namespace hyperinvert::detail
