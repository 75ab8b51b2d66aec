/**
 * @file verify.hpp
 * @brief Batch verification runs, variant resolution and reporting.
 *
 * The per-sample checks are pure, so the batch kernel comes in two builds: a
 * serial reference and an OpenMP-parallel version. Outcomes are collected
 * into a vector indexed by sample, and the report is a deterministic fold
 * over that vector, so both kernels produce byte-identical reports.
 */
#ifndef HYPERINVERT_VERIFY_HPP
#define HYPERINVERT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <hyperinvert/catalog.hpp>
#include <hyperinvert/sampling.hpp>

namespace hyperinvert {

inline constexpr const char* kEngineVersion = "hyperinvert/0.1.0";
inline constexpr unsigned long kCounterexampleCap = 10;

/// One outcome per assignment, in order. Serial reference implementation.
std::vector<VerificationOutcome> check_batch_serial(const Catalog& cat, std::string_view id,
                                                    std::string_view variant,
                                                    const std::vector<ParamAssignment>& samples);

/// OpenMP build of the same kernel; must agree with the serial one exactly.
std::vector<VerificationOutcome> check_batch_parallel(const Catalog& cat, std::string_view id,
                                                      std::string_view variant,
                                                      const std::vector<ParamAssignment>& samples);

struct Counterexample {
    ParamAssignment assignment;
    Rational lhs, rhs;
};

struct VariantTally {
    std::string name;
    bool expected_holds;
    unsigned long holds = 0, fails = 0, not_admissible = 0;
    std::vector<Counterexample> counterexamples; // capped unless full stream requested
};

struct VerificationReport {
    std::string id;
    std::string engine_version;
    std::uint64_t seed = 0;
    SamplingPlan plan;
    std::vector<VariantTally> variants;
    std::string resolved_variant; // variant name or "unresolved"
    Status declared_status = Status::derived;
    Status effective_status = Status::derived; // downgraded to suspect on any failure
    double wall_time_ms = 0.0;
};

struct RunOptions {
    bool parallel = true;
    bool full_counterexamples = false; // lift the cap of 10
};

VerificationReport run_verification(const Catalog& cat, const SamplingPlan& plan,
                                    const RunOptions& options = {});

struct VariantResolution {
    bool resolved;
    std::string name; // meaningful when resolved
};

/// The unique variant with zero failures and at least one holding sample,
/// if exactly one exists.
VariantResolution resolve_variants(const Catalog& cat, std::string_view id,
                                   const SamplingPlan& plan, const RunOptions& options = {});

/// Exit-code predicate: every variant marked expected-holds has zero failures.
bool report_passes(const VerificationReport& report);

std::string report_to_json(const VerificationReport& report, bool include_wall_time = true);
std::string report_to_csv(const VerificationReport& report);

/// Default plan per record: 100 samples for foundational records, 50
/// otherwise; max_n = 8; seed 42.
SamplingPlan default_plan(const IdentityRecord& rec);

} // namespace hyperinvert

#endif
