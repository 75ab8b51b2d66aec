#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyperinvert/verify.hpp>

using namespace hyperinvert;

namespace {

const Catalog& cat() {
    static Catalog c;
    return c;
}

} // namespace

TEST_CASE("cvg verifies clean over 100 samples") {
    SamplingPlan plan;
    plan.id = "cvg";
    plan.sample_count = 100;
    VerificationReport report = run_verification(cat(), plan);
    REQUIRE(report.variants.size() == 1);
    CHECK(report.variants[0].holds == 100);
    CHECK(report.variants[0].fails == 0);
    CHECK(report.variants[0].not_admissible == 0);
    CHECK(report.variants[0].counterexamples.empty());
    CHECK(report.resolved_variant == "printed");
    CHECK(report_passes(report));
}

TEST_CASE("chuwei1 all-variants run isolates the symmetrized form") {
    SamplingPlan plan;
    plan.id = "cor-chuwei1";
    plan.all_variants = true;
    plan.sample_count = 100;
    VerificationReport report = run_verification(cat(), plan);
    REQUIRE(report.variants.size() == 2);
    const auto& printed = report.variants[0];
    const auto& symmetrized = report.variants[1];
    CHECK(printed.name == "printed-verbatim");
    CHECK(printed.fails >= 1);
    CHECK(!printed.counterexamples.empty());
    CHECK(printed.counterexamples.size() <= kCounterexampleCap);
    CHECK(symmetrized.fails == 0);
    CHECK(symmetrized.holds + symmetrized.not_admissible == 100);
    CHECK(report.resolved_variant == "symmetrized");
    CHECK(report_passes(report)); // printed-verbatim is not expected to hold

    auto resolution = resolve_variants(cat(), "cor-chuwei1", plan);
    CHECK(resolution.resolved);
    CHECK(resolution.name == "symmetrized");
}

TEST_CASE("tallies always sum to the sample count") {
    for (const char* id : {"ps", "thm-recirel2", "thm-hrrecirel1", "thm-recirel3b"}) {
        SamplingPlan plan;
        plan.id = id;
        plan.all_variants = true;
        plan.sample_count = 40;
        VerificationReport report = run_verification(cat(), plan);
        for (const auto& t : report.variants) {
            CHECK(t.holds + t.fails + t.not_admissible == 40);
            CHECK((t.fails > 0) == !t.counterexamples.empty());
        }
    }
}

TEST_CASE("failing derived records are downgraded to suspect with a counterexample") {
    SamplingPlan plan;
    plan.id = "thm-recirel3b";
    plan.all_variants = true;
    plan.sample_count = 50;
    VerificationReport report = run_verification(cat(), plan);
    CHECK(report.declared_status == Status::derived);
    CHECK(report.effective_status == Status::suspect);
    CHECK(report.variants[0].fails > 0);
    CHECK(!report.variants[0].counterexamples.empty());
    CHECK(report.resolved_variant == "second-term-sign-flip");
}

TEST_CASE("serial and parallel kernels agree exactly") {
    SamplingPlan plan;
    plan.id = "prop-hrbalid1";
    plan.sample_count = 60;
    auto samples = sample_params(cat(), plan);
    auto serial = check_batch_serial(cat(), plan.id, "printed", samples);
    auto parallel = check_batch_parallel(cat(), plan.id, "printed", samples);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].kind == parallel[i].kind);
        CHECK(serial[i].lhs == parallel[i].lhs);
        CHECK(serial[i].rhs == parallel[i].rhs);
    }

    RunOptions serial_options{false, false};
    std::string a = report_to_json(run_verification(cat(), plan, serial_options), false);
    std::string b = report_to_json(run_verification(cat(), plan), false);
    CHECK(a == b);
}

TEST_CASE("reports are byte-reproducible modulo wall time") {
    SamplingPlan plan;
    plan.id = "cvg";
    plan.sample_count = 100;
    plan.seed = 42;
    std::string a = report_to_json(run_verification(cat(), plan), false);
    std::string b = report_to_json(run_verification(cat(), plan), false);
    CHECK(a == b);
    CHECK(a.find("\"engine_version\": \"" + std::string(kEngineVersion) + "\"") != std::string::npos);
    CHECK(a.find("\"seed\": 42") != std::string::npos);
    CHECK(a.find("\"resolved_variant\"") != std::string::npos);
    CHECK(a.find("wall_time") == std::string::npos);
}

TEST_CASE("csv report shape") {
    SamplingPlan plan;
    plan.id = "cor-chuwei1";
    plan.all_variants = true;
    plan.sample_count = 30;
    std::string csv = report_to_csv(run_verification(cat(), plan));
    CHECK(csv.rfind("id,variant,expected_holds,holds,fails,not_admissible,resolved_variant\n", 0) == 0);
    CHECK(csv.find("cor-chuwei1,printed-verbatim,0,") != std::string::npos);
    CHECK(csv.find("cor-chuwei1,symmetrized,1,") != std::string::npos);
}

TEST_CASE("resolution outcomes") {
    // single variant, zero failures
    SamplingPlan plan;
    plan.id = "cvg";
    plan.sample_count = 50;
    auto single = resolve_variants(cat(), "cvg", plan);
    CHECK(single.resolved);
    CHECK(single.name == "printed");

    // variants that coincide on every sample leave the record unresolved:
    // at n = 0 both chuwei2 readings evaluate to 1 = 1
    plan.id = "cor-chuwei2";
    plan.max_n = 0;
    plan.sample_count = 20;
    auto tied = resolve_variants(cat(), "cor-chuwei2", plan);
    CHECK_FALSE(tied.resolved);
    CHECK(tied.name == "unresolved");
}

TEST_CASE("unknown identities are reported before sampling") {
    SamplingPlan plan;
    plan.id = "does-not-exist";
    CHECK_THROWS_AS(run_verification(cat(), plan), UnknownIdentity);
}
