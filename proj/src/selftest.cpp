#include <hyperinvert/selftest.hpp>

#include <hyperinvert/errors.hpp>
#include <hyperinvert/factorials.hpp>

namespace hyperinvert {

namespace {

Rational small_rational(SplitMix64& gen) {
    long num = static_cast<long>(gen.next() % 19) - 9;
    long den = 1 + static_cast<long>(gen.next() % 4);
    return Rational(num, den);
}

Rational small_nonzero_rational(SplitMix64& gen) {
    for (;;) {
        Rational r = small_rational(gen);
        if (!r.is_zero()) return r;
    }
}

/// Runs `body(instance_seed, instance_index)` for each instance, serially or
/// under OpenMP; failures are collected by index so the verdict and detail
/// string do not depend on the thread count.
template <typename Body>
SelfTestResult run_instances(const std::string& name, SplitMix64& gen, unsigned instances,
                             bool parallel, Body body) {
    std::vector<std::uint64_t> seeds(instances);
    for (auto& s : seeds) s = gen.next();
    std::vector<std::string> failures(instances);
    const long count = instances;
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) failures[i] = body(seeds[i], i);
    } else {
        for (long i = 0; i < count; ++i) failures[i] = body(seeds[i], i);
    }
    for (long i = 0; i < count; ++i)
        if (!failures[i].empty())
            return {name, false, "instance " + std::to_string(i) + ": " + failures[i]};
    return {name, true, std::to_string(instances) + " instances exact"};
}

FactorSequences retry_nondegenerate(SplitMix64& gen, unsigned ell, std::size_t touched_len) {
    // rejection loop: a touched Phi(x;k) vanishing makes the instance unusable
    for (int attempt = 0; attempt < 200; ++attempt) {
        FactorSequences seqs = random_factor_sequences(gen, ell);
        bool ok = true;
        for (std::size_t x = 0; x < touched_len && ok; ++x)
            for (std::size_t k = 1; k <= touched_len && ok; ++k)
                if (phi_big(seqs, Rational(static_cast<long>(x)), k).is_zero()) ok = false;
        if (ok) return seqs;
    }
    throw std::runtime_error("could not draw a nondegenerate coefficient instance");
}

} // namespace

FactorSequences random_factor_sequences(SplitMix64& gen, unsigned ell) {
    std::vector<CoefficientFamily> a, b;
    for (unsigned i = 0; i <= ell; ++i) {
        a.push_back(CoefficientFamily::affine(small_nonzero_rational(gen), small_rational(gen)));
        b.push_back(CoefficientFamily::affine(small_rational(gen), small_rational(gen)));
    }
    return FactorSequences(ell, std::move(a), std::move(b));
}

FiniteSequence random_sequence(SplitMix64& gen, std::size_t length) {
    FiniteSequence seq(length);
    for (auto& v : seq) v = small_rational(gen);
    return seq;
}

std::vector<SelfTestResult> run_selftest(const SelfTestOptions& opt) {
    std::vector<SelfTestResult> results;
    SplitMix64 gen(opt.seed);

    // round trips, both directions, per ell
    for (unsigned ell = 0; ell <= 3; ++ell) {
        auto body = [&, ell](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            const std::size_t len = 1 + local.next() % opt.round_trip_max_len;
            FactorSequences seqs = retry_nondegenerate(local, ell, len);
            FiniteSequence g = random_sequence(local, len);
            if (inverse_transform(seqs, forward_transform(seqs, g)) != g)
                return "inverse(forward(g)) != g";
            FiniteSequence f = random_sequence(local, len);
            if (forward_transform(seqs, inverse_transform(seqs, f)) != f)
                return "forward(inverse(f)) != f";
            return "";
        };
        results.push_back(run_instances("round-trip ell=" + std::to_string(ell), gen,
                                        opt.round_trip_instances, opt.parallel, body));
    }

    // S(i,n) = 0 for i < n, 1/lambda(n) at i = n
    for (unsigned ell = 0; ell <= 2; ++ell) {
        auto body = [&, ell](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            FactorSequences seqs = retry_nondegenerate(local, ell, opt.vanishing_max_n + 1);
            for (unsigned long n = 0; n <= opt.vanishing_max_n; ++n) {
                for (unsigned long i = 0; i < n; ++i)
                    if (!inner_sum_S(seqs, i, n).is_zero())
                        return "S(" + std::to_string(i) + "," + std::to_string(n) + ") != 0";
                Rational lam = lambda_factor(seqs, n);
                if (lam.is_zero()) return "degenerate lambda draw"; // rejected as a failure; practically never hit
                if (inner_sum_S(seqs, n, n) != Rational(1) / lam)
                    return "S(n,n) != 1/lambda(n) at n = " + std::to_string(n);
            }
            return "";
        };
        results.push_back(run_instances("inner-sum vanishing ell=" + std::to_string(ell), gen,
                                        opt.vanishing_instances, opt.parallel, body));
    }

    // printed duplicate split == generic engine
    {
        auto body = [&](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            const std::size_t len = 1 + local.next() % (opt.printed_form_max_n + 1);
            FactorSequences seqs = retry_nondegenerate(local, 1, len);
            FiniteSequence f = random_sequence(local, len);
            if (duplicate_inverse_printed(seqs, f) != inverse_transform(seqs, f))
                return "printed duplicate formula disagrees with the generic engine";
            return "";
        };
        results.push_back(run_instances("printed duplicate == generic", gen,
                                        opt.printed_form_instances, opt.parallel, body));
    }

    // corrected triplicate split == generic engine
    {
        auto body = [&](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            const std::size_t len = 1 + local.next() % (opt.printed_form_max_n + 1);
            FactorSequences seqs = retry_nondegenerate(local, 2, len);
            FiniteSequence f = random_sequence(local, len);
            if (triplicate_inverse_printed(seqs, f, TriplicateReading::corrected) !=
                inverse_transform(seqs, f))
                return "corrected triplicate formula disagrees with the generic engine";
            return "";
        };
        results.push_back(run_instances("corrected triplicate == generic", gen,
                                        opt.printed_form_instances, opt.parallel, body));
    }

    // verbatim triplicate must disagree once the chi-class slope is nonzero
    {
        bool found = false;
        SplitMix64 local(gen.next());
        for (unsigned attempt = 0; attempt < opt.printed_form_instances && !found; ++attempt) {
            const std::size_t len = 7;
            FactorSequences seqs = retry_nondegenerate(local, 2, len);
            if (seqs.b(2).base().is_zero() && seqs.b(2).step().is_zero()) continue;
            FiniteSequence f = random_sequence(local, len);
            try {
                found = triplicate_inverse_printed(seqs, f, TriplicateReading::printed_verbatim) !=
                        inverse_transform(seqs, f);
            } catch (const PhiVanishes&) {
                // verbatim denominators touch points the generic engine does not
            }
        }
        results.push_back({"verbatim triplicate counterexample", found,
                           found ? "printed weight e_k+3f_k differs from the engine"
                                 : "no counterexample found"});
    }

    // Phi(x;n) is a degree-n polynomial in x: order n+1 differences vanish
    for (unsigned ell = 0; ell <= 2; ++ell) {
        auto body = [&, ell](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            FactorSequences seqs = random_factor_sequences(local, ell);
            for (unsigned long n = 0; n <= opt.degree_max_n; ++n) {
                Rational diff(0);
                for (unsigned long j = 0; j <= n + 1; ++j) {
                    Rational term = binomial_nk(n + 1, static_cast<long>(j)) *
                                    phi_big(seqs, Rational(static_cast<long>(j)), n);
                    diff += (n + 1 - j) % 2 == 1 ? -term : term;
                }
                if (!diff.is_zero()) return "order-" + std::to_string(n + 1) + " difference nonzero";
            }
            return "";
        };
        results.push_back(run_instances("phi degree ell=" + std::to_string(ell), gen,
                                        opt.degree_instances, opt.parallel, body));
    }

    // ell = 0 reduces to the classic pair, evaluated from its own formulas
    {
        auto body = [&](std::uint64_t seed, long) -> std::string {
            SplitMix64 local(seed);
            const std::size_t len = 1 + local.next() % opt.round_trip_max_len;
            FactorSequences seqs = retry_nondegenerate(local, 0, len);
            FiniteSequence g = random_sequence(local, len);
            FiniteSequence f = forward_transform(seqs, g);
            for (std::size_t n = 0; n < len; ++n) {
                Rational direct_f(0), direct_g(0);
                for (std::size_t k = 0; k <= n; ++k) {
                    Rational sign = k % 2 == 1 ? Rational(-1) : Rational(1);
                    direct_f += sign * binomial_nk(n, static_cast<long>(k)) *
                                phi_component(seqs, 0, Rational(static_cast<long>(k)), n) * g[k];
                    Rational weight = seqs.a(0).at(k) +
                                      Rational(static_cast<long>(k)) * seqs.b(0).at(k);
                    direct_g += sign * binomial_nk(n, static_cast<long>(k)) * weight /
                                phi_component(seqs, 0, Rational(static_cast<long>(n)), k + 1) * f[k];
                }
                if (direct_f != f[n]) return "classic forward formula disagrees";
                if (direct_g != g[n]) return "classic inverse formula disagrees";
            }
            return "";
        };
        results.push_back(run_instances("classic pair specialization", gen, 25, opt.parallel, body));
    }

    return results;
}

bool all_passed(const std::vector<SelfTestResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace hyperinvert
