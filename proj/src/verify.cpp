#include <hyperinvert/verify.hpp>

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace hyperinvert {

std::vector<VerificationOutcome> check_batch_serial(const Catalog& cat, std::string_view id,
                                                    std::string_view variant,
                                                    const std::vector<ParamAssignment>& samples) {
    std::vector<VerificationOutcome> out(samples.size(),
                                         {OutcomeKind::not_admissible, Rational(0), Rational(0), ""});
    for (std::size_t i = 0; i < samples.size(); ++i)
        out[i] = check_identity(cat, id, variant, samples[i]);
    return out;
}

std::vector<VerificationOutcome> check_batch_parallel(const Catalog& cat, std::string_view id,
                                                      std::string_view variant,
                                                      const std::vector<ParamAssignment>& samples) {
    std::vector<VerificationOutcome> out(samples.size(),
                                         {OutcomeKind::not_admissible, Rational(0), Rational(0), ""});
    const long count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        out[i] = check_identity(cat, id, variant, samples[i]);
    return out;
}

namespace {

VariantTally fold_outcomes(const std::string& name, bool expected_holds,
                           const std::vector<ParamAssignment>& samples,
                           const std::vector<VerificationOutcome>& outcomes,
                           unsigned long cap) {
    VariantTally tally;
    tally.name = name;
    tally.expected_holds = expected_holds;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        switch (outcomes[i].kind) {
            case OutcomeKind::holds:
                ++tally.holds;
                break;
            case OutcomeKind::fails:
                ++tally.fails;
                if (tally.counterexamples.size() < cap)
                    tally.counterexamples.push_back({samples[i], outcomes[i].lhs, outcomes[i].rhs});
                break;
            case OutcomeKind::not_admissible:
                ++tally.not_admissible;
                break;
        }
    }
    return tally;
}

std::string resolve_from_tallies(const std::vector<VariantTally>& tallies) {
    std::string winner;
    unsigned candidates = 0;
    for (const auto& t : tallies) {
        if (t.fails == 0 && t.holds >= 1) {
            ++candidates;
            winner = t.name;
        }
    }
    return candidates == 1 ? winner : std::string("unresolved");
}

} // namespace

VerificationReport run_verification(const Catalog& cat, const SamplingPlan& plan,
                                    const RunOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const IdentityRecord& rec = cat.find(plan.id); // throws UnknownIdentity

    VerificationReport report;
    report.id = rec.id;
    report.engine_version = kEngineVersion;
    report.seed = plan.seed;
    report.plan = plan;
    report.declared_status = rec.status;

    std::vector<const Variant*> selected;
    if (plan.all_variants) {
        for (const auto& v : rec.variants) selected.push_back(&v);
    } else if (!plan.variant.empty()) {
        selected.push_back(&rec.variant(plan.variant)); // throws UnknownVariant
    } else {
        selected.push_back(&rec.variants.front());
    }

    const auto samples = sample_params(cat, plan);
    const unsigned long cap =
        options.full_counterexamples ? static_cast<unsigned long>(-1) : kCounterexampleCap;
    for (const Variant* v : selected) {
        auto outcomes = options.parallel ? check_batch_parallel(cat, rec.id, v->name, samples)
                                         : check_batch_serial(cat, rec.id, v->name, samples);
        report.variants.push_back(fold_outcomes(v->name, v->expected_holds, samples, outcomes, cap));
    }

    report.resolved_variant = resolve_from_tallies(report.variants);
    report.effective_status = rec.status;
    if (rec.status != Status::suspect) {
        for (const auto& t : report.variants)
            if (t.name == rec.variants.front().name && t.fails > 0)
                report.effective_status = Status::suspect; // downgrade, counterexamples retained
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

VariantResolution resolve_variants(const Catalog& cat, std::string_view id,
                                   const SamplingPlan& plan, const RunOptions& options) {
    SamplingPlan all = plan;
    all.id = std::string(id);
    all.all_variants = true;
    all.variant.clear();
    VerificationReport report = run_verification(cat, all, options);
    if (report.resolved_variant == "unresolved") return {false, "unresolved"};
    return {true, report.resolved_variant};
}

bool report_passes(const VerificationReport& report) {
    for (const auto& t : report.variants)
        if (t.expected_holds && t.fails > 0) return false;
    return true;
}

namespace {

nlohmann::ordered_json assignment_to_json(const ParamAssignment& pa, bool with_ell) {
    nlohmann::ordered_json j;
    for (const auto& [name, value] : pa.rationals) j[name] = value.to_string();
    j["n"] = pa.n;
    if (with_ell) j["ell"] = pa.ell;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report, bool include_wall_time) {
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["engine_version"] = report.engine_version;
    j["seed"] = report.seed;
    j["plan"] = {{"id", report.plan.id},
                 {"variant", report.plan.all_variants ? "all" : report.plan.variant},
                 {"sample_count", report.plan.sample_count},
                 {"max_n", report.plan.max_n},
                 {"seed", report.plan.seed},
                 {"max_abs_numerator", report.plan.bounds.max_abs_numerator},
                 {"max_denominator", report.plan.bounds.max_denominator}};
    j["declared_status"] = std::string(to_string(report.declared_status));
    j["effective_status"] = std::string(to_string(report.effective_status));
    j["variants"] = nlohmann::ordered_json::array();
    const bool with_ell = report.plan.id == "thm-hrrecirel3";
    for (const auto& t : report.variants) {
        nlohmann::ordered_json v;
        v["name"] = t.name;
        v["expected_holds"] = t.expected_holds;
        v["holds"] = t.holds;
        v["fails"] = t.fails;
        v["not_admissible"] = t.not_admissible;
        v["counterexamples"] = nlohmann::ordered_json::array();
        for (const auto& ce : t.counterexamples) {
            v["counterexamples"].push_back({{"assignment", assignment_to_json(ce.assignment, with_ell)},
                                            {"lhs", ce.lhs.to_string()},
                                            {"rhs", ce.rhs.to_string()}});
        }
        j["variants"].push_back(std::move(v));
    }
    j["resolved_variant"] = report.resolved_variant;
    if (include_wall_time) j["wall_time_ms"] = report.wall_time_ms;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "id,variant,expected_holds,holds,fails,not_admissible,resolved_variant\n";
    for (const auto& t : report.variants) {
        os << report.id << ',' << t.name << ',' << (t.expected_holds ? 1 : 0) << ',' << t.holds
           << ',' << t.fails << ',' << t.not_admissible << ',' << report.resolved_variant << '\n';
    }
    return os.str();
}

SamplingPlan default_plan(const IdentityRecord& rec) {
    SamplingPlan plan;
    plan.id = rec.id;
    plan.all_variants = true;
    plan.sample_count = rec.status == Status::foundational ? 100 : 50;
    plan.max_n = 8;
    plan.seed = 42;
    return plan;
}

} // namespace hyperinvert
