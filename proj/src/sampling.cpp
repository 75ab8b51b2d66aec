#include <hyperinvert/sampling.hpp>

#include <hyperinvert/errors.hpp>

namespace hyperinvert {

Rational draw_rational(SplitMix64& gen, const RationalBounds& bounds) {
    const auto span = static_cast<std::uint64_t>(2 * bounds.max_abs_numerator + 1);
    long num = static_cast<long>(gen.next() % span) - bounds.max_abs_numerator;
    long den = 1 + static_cast<long>(gen.next() % static_cast<std::uint64_t>(bounds.max_denominator));
    return Rational(num, den);
}

std::vector<ParamAssignment> sample_params(const Catalog& cat, const SamplingPlan& plan) {
    const IdentityRecord& rec = cat.find(plan.id);
    SplitMix64 gen(plan.seed);
    std::vector<ParamAssignment> out;
    out.reserve(plan.sample_count);
    unsigned rejections = 0;
    while (out.size() < plan.sample_count) {
        ParamAssignment pa;
        for (const auto& param : rec.params) {
            if (param.kind == ParamKind::rational) {
                pa.rationals.emplace_back(param.name, draw_rational(gen, plan.bounds));
            } else if (param.name == "ell") {
                pa.ell = 1 + static_cast<long>(gen.next() % 4);
            } else {
                pa.n = static_cast<long>(gen.next() % static_cast<std::uint64_t>(plan.max_n + 1));
            }
        }
        if (admissible(rec, pa)) {
            out.push_back(std::move(pa));
            rejections = 0;
        } else if (++rejections >= 10000) {
            throw SamplingExhausted(plan.id);
        }
    }
    return out;
}

} // namespace hyperinvert
