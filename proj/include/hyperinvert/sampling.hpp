/**
 * @file sampling.hpp
 * @brief Deterministic parameter sampling for identity verification.
 *
 * The generator is splitmix64; its update constants are documented in the
 * README so the sample streams can be reproduced from any language. Draws:
 *   rational: numerator = next() mod (2*maxnum+1) - maxnum,
 *             denominator = 1 + next() mod maxden
 *   n:        next() mod (max_n + 1)
 *   ell:      1 + next() mod 4        (general-ell records only)
 * One assignment consumes draws in the record's declared parameter order;
 * inadmissible assignments are discarded and redrawn.
 */
#ifndef HYPERINVERT_SAMPLING_HPP
#define HYPERINVERT_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <hyperinvert/catalog.hpp>

namespace hyperinvert {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct RationalBounds {
    long max_abs_numerator = 9;
    long max_denominator = 4;
};

struct SamplingPlan {
    std::string id;
    std::string variant;      // empty = primary variant only
    bool all_variants = false;
    unsigned long sample_count = 100;
    long max_n = 8;
    std::uint64_t seed = 42;
    RationalBounds bounds;
};

Rational draw_rational(SplitMix64& gen, const RationalBounds& bounds);

/// Deterministic given the plan's seed; every returned assignment satisfies
/// the identity's admissibility predicate. Throws SamplingExhausted after
/// 10000 consecutive rejections.
std::vector<ParamAssignment> sample_params(const Catalog& cat, const SamplingPlan& plan);

} // namespace hyperinvert

#endif
