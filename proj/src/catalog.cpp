#include <hyperinvert/catalog.hpp>

#include <algorithm>

#include <hyperinvert/errors.hpp>

namespace hyperinvert {

const Rational& ParamAssignment::r(std::string_view name) const {
    for (const auto& [key, value] : rationals)
        if (key == name) return value;
    throw std::invalid_argument("assignment is missing parameter " + std::string(name));
}

bool ParamAssignment::has(std::string_view name) const {
    return std::any_of(rationals.begin(), rationals.end(),
                       [&](const auto& kv) { return kv.first == name; });
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::foundational: return "foundational";
        case Status::derived: return "derived";
        case Status::suspect: return "suspect";
    }
    return "?";
}

const Variant& IdentityRecord::variant(std::string_view name) const {
    for (const auto& v : variants)
        if (v.name == name) return v;
    throw UnknownVariant(id, std::string(name));
}

Catalog::Catalog() {
    detail::register_cvg_family(records_);
    detail::register_ps_family(records_);
    detail::register_hr_family(records_);
}

const IdentityRecord& Catalog::find(std::string_view id) const {
    for (const auto& rec : records_)
        if (rec.id == id) return rec;
    throw UnknownIdentity(std::string(id));
}

bool Catalog::contains(std::string_view id) const {
    return std::any_of(records_.begin(), records_.end(),
                       [&](const auto& rec) { return rec.id == id; });
}

std::pair<Rational, Rational> eval_identity_sides(const Catalog& cat, std::string_view id,
                                                  std::string_view variant,
                                                  const ParamAssignment& pa) {
    const IdentityRecord& rec = cat.find(id);
    const Variant& var = rec.variant(variant);
    if (rec.side_condition && !rec.side_condition(pa))
        throw NotAdmissible("side condition violated");
    try {
        return {var.lhs(pa), var.rhs(pa)};
    } catch (const EvalError& e) {
        throw NotAdmissible(e.what());
    }
}

VerificationOutcome check_identity(const Catalog& cat, std::string_view id,
                                   std::string_view variant, const ParamAssignment& pa) {
    try {
        auto [lhs, rhs] = eval_identity_sides(cat, id, variant, pa);
        if (lhs == rhs) return {OutcomeKind::holds, lhs, rhs, ""};
        return {OutcomeKind::fails, lhs, rhs, ""};
    } catch (const NotAdmissible& e) {
        return {OutcomeKind::not_admissible, Rational(0), Rational(0), e.reason};
    }
}

bool admissible(const IdentityRecord& rec, const ParamAssignment& pa) {
    if (rec.side_condition && !rec.side_condition(pa)) return false;
    for (const auto& var : rec.variants) {
        try {
            var.lhs(pa);
            var.rhs(pa);
            return true;
        } catch (const EvalError&) {
            // try the next variant
        }
    }
    return false;
}

} // namespace hyperinvert
