/**
 * @file selftest.hpp
 * @brief Randomized exact checks of the inversion engine's invariants.
 *
 * Every check is exact equality of rationals; a single mismatch fails the
 * suite. Instance generation is seeded and the per-instance work is
 * independent, so the batches run under OpenMP with per-instance substreams
 * and are deterministic regardless of thread count.
 */
#ifndef HYPERINVERT_SELFTEST_HPP
#define HYPERINVERT_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <hyperinvert/inversion.hpp>
#include <hyperinvert/sampling.hpp>

namespace hyperinvert {

struct SelfTestResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SelfTestOptions {
    std::uint64_t seed = 42;
    bool parallel = true;
    unsigned round_trip_instances = 100; // per ell in {0,1,2,3}
    unsigned long round_trip_max_len = 13;
    unsigned vanishing_instances = 25;   // per ell in {0,1,2}
    unsigned long vanishing_max_n = 10;
    unsigned printed_form_instances = 50;
    unsigned long printed_form_max_n = 10;
    unsigned degree_instances = 10;      // per ell in {0,1,2}
    unsigned long degree_max_n = 8;
};

std::vector<SelfTestResult> run_selftest(const SelfTestOptions& options = {});

bool all_passed(const std::vector<SelfTestResult>& results);

/// Random affine coefficient families for one inversion instance; retried by
/// callers when a touched Phi happens to vanish.
FactorSequences random_factor_sequences(SplitMix64& gen, unsigned ell);

FiniteSequence random_sequence(SplitMix64& gen, std::size_t length);

} // namespace hyperinvert

#endif
