// Records built on the Pfaff-Saalschutz summation theorem and its
// duplicate-inversion duals.

#include "catalog_detail.hpp"

namespace hyperinvert::detail {

namespace {

IdentityRecord make_ps() {
    IdentityRecord rec;
    rec.id = "ps";
    rec.anchor = "Pfaff-Saalschutz balanced 3F2 summation";
    rec.status = Status::foundational;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return cpfq({Rational(-pa.n), a, b}, {c, Rational(1 - pa.n) + a + b - c}, Rational(1));
    };
    auto rhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return bracket({c - a, c - b}, {c, c - a - b}, n);
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_psrecirel1() {
    IdentityRecord rec;
    rec.id = "thm-psrecirel1";
    rec.anchor = "dual of Pfaff-Saalschutz under duplicate inversion, first form: 6F5 pair";
    rec.status = Status::derived;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return bracket({c - a, a - b}, {c, -b}, n);
    };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), a, 1 - a, b + c - a, a - b - c + 1},
                             {rq(1, 2), c, Rational(1 - n) - c, b - rn + 1, -b}, Rational(1));
        Rational second = guarded(rn * a * (b + c - a) / (b * (c + rn - 1)), [&] {
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), a + 1, 1 - a, b + c - a + 1, a - b - c + 1},
                       {rq(3, 2), c, Rational(2 - n) - c, b - rn + 1, 1 - b}, Rational(1));
        });
        return first - second;
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_psrecirel2a() {
    IdentityRecord rec;
    rec.id = "thm-psrecirel2a";
    rec.anchor = "dual of Pfaff-Saalschutz under duplicate inversion, second form: 7F6 - 8F7";
    rec.status = Status::derived;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return bracket({c - a, a - b}, {c - 1, 1 - b}, n);
    };
    auto rhs = [](const ParamAssignment& pa) {
        const long n = pa.n;
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
        Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), (Rational(1) - a) / 2, (Rational(2) - a) / 2,
                              c - a, b + c - a, a - b - c + 1},
                             {rq(1, 2), (Rational(1) - b) / 2, (Rational(2) - b) / 2, c - 1,
                              Rational(2 - n) - c, c - a + rn}, Rational(1));
        Rational theta = (c - a + 1) / 3;
        Rational pre = rn * (Rational(1) - a) * (c - a + 1) * (a - b - c + 1) /
                       ((Rational(1) - b) * (Rational(1) - c) * (c - a + rn));
        Rational second = guarded(pre, [&] {
            return cpfq({rq(1 - n, 2), rq(2 - n, 2), 1 + theta, (Rational(2) - a) / 2,
                        (Rational(3) - a) / 2, c - a, b + c - a, a - b - c + 2},
                       {rq(3, 2), theta, (Rational(2) - b) / 2, (Rational(3) - b) / 2, c,
                        Rational(2 - n) - c, c - a + rn + 1}, Rational(1));
        });
        return first - second;
    };
    rec.variants.push_back({"printed", true, "", lhs, rhs});
    return rec;
}

IdentityRecord make_thm_psrecirel2b() {
    IdentityRecord rec;
    rec.id = "thm-psrecirel2b";
    rec.anchor = "dual of Pfaff-Saalschutz under duplicate inversion, second form variant: 8F7 + 7F6";
    rec.status = Status::suspect;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return bracket({Rational(1) + c - a, a - b}, {c, 1 - b}, n);
    };
    // The fourth lower parameter of the 8F7 is garbled in print; the doubled
    // (1-b)_{2k} Pochhammer fixes it as (2-b)/2.
    auto rhs_with_slot = [](bool repaired) {
        return [repaired](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
            Rational slot = repaired ? (Rational(2) - b) / 2 : rq(2 - n, 2);
            Rational theta = (c - a) / 3;
            Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), 1 + theta, (Rational(1) - a) / 2,
                                  (Rational(2) - a) / 2, c - a, b + c - a, a - b - c + 1},
                                 {rq(1, 2), theta, (Rational(1) - b) / 2, slot, c,
                                  Rational(1 - n) - c, c - a + rn + 1}, Rational(1));
            Rational pre = rn * (Rational(1) - a) * (b + c - a) /
                           ((Rational(1) - b) * (Rational(1 - n) - c));
            Rational second = guarded(pre, [&] {
                return cpfq({rq(1 - n, 2), rq(2 - n, 2), (Rational(2) - a) / 2, (Rational(3) - a) / 2,
                            c - a + 1, b + c - a + 1, a - b - c + 1},
                           {rq(3, 2), (Rational(2) - b) / 2, (Rational(3) - b) / 2, c,
                            Rational(2 - n) - c, c - a + rn + 1}, Rational(1));
            });
            return first + second;
        };
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "fourth lower parameter read literally as (2-n)/2",
                            lhs, rhs_with_slot(false)});
    rec.variants.push_back({"token-repair", true,
                            "fourth lower parameter read as (2-b)/2",
                            lhs, rhs_with_slot(true)});
    return rec;
}

IdentityRecord make_thm_psrecirel3() {
    IdentityRecord rec;
    rec.id = "thm-psrecirel3";
    rec.anchor = "dual of Pfaff-Saalschutz under duplicate inversion, third form: 9F8 pair at z = 1/16";
    rec.status = Status::suspect;
    rec.params = params_abcn();
    auto lhs = [](const ParamAssignment& pa) {
        const auto n = static_cast<unsigned long>(pa.n);
        const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c");
        return bracket({c - a, a - b + 1}, {c, 1 - b}, n);
    };
    // Final lower parameter of the second 9F8: the (a-b+n)_{k+1} factor of the
    // dual forces a-b+n+1; the print repeats a-b-c+1 from the upper row.
    auto rhs_with_slot = [](bool repaired) {
        return [repaired](const ParamAssignment& pa) {
            const long n = pa.n;
            const Rational a = pa.r("a"), b = pa.r("b"), c = pa.r("c"), rn(n);
            const Rational z = rq(1, 16);
            Rational theta1 = (a - b) / 3;
            Rational first = cpfq({rq(-n, 2), rq(1 - n, 2), 1 + theta1, a - b, c - a, a, 1 - a,
                                  b + c - a, a - b - c + 1},
                                 {rq(1, 2), theta1, (Rational(1) - b) / 2, (Rational(2) - b) / 2,
                                  c / 2, (c + 1) / Rational(2), c - a + rn, Rational(1) + a - b + rn},
                                 z);
            Rational slot = repaired ? a - b + rn + 1 : a - b - c + 1;
            Rational theta2 = (c - a + 1) / 3;
            Rational pre = rn * a * (c - a + 1) * (a - b - c + 1) /
                           ((Rational(1) - b) * c * (c - a + rn));
            Rational second = guarded(pre, [&] {
                return cpfq({rq(1 - n, 2), rq(2 - n, 2), 1 + theta2, a + 1, a - b + 1, c - a, 1 - a,
                            b + c - a, a - b - c + 2},
                           {rq(3, 2), theta2, (Rational(2) - b) / 2, (Rational(3) - b) / 2,
                            (c + 1) / Rational(2), (c + 2) / Rational(2), c - a + rn + 1, slot},
                           z);
            });
            return first - second;
        };
    };
    rec.variants.push_back({"printed-verbatim", false,
                            "last lower parameter of the second series read literally as a-b-c+1",
                            lhs, rhs_with_slot(false)});
    rec.variants.push_back({"token-repair", true,
                            "last lower parameter of the second series read as a-b+n+1",
                            lhs, rhs_with_slot(true)});
    return rec;
}

} // namespace

void register_ps_family(std::vector<IdentityRecord>& out) {
    out.push_back(make_ps());
    out.push_back(make_thm_psrecirel1());
    out.push_back(make_thm_psrecirel2a());
    out.push_back(make_thm_psrecirel2b());
    out.push_back(make_thm_psrecirel3());
}

} // namespace hyperinvert::detail
