// Compares the serial reference kernels against the OpenMP builds on the two
// hot paths: batch identity checking and the randomized inversion suite.
// The outputs must match exactly; only the wall time may differ.

#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include <hyperinvert/selftest.hpp>
#include <hyperinvert/verify.hpp>

using namespace hyperinvert;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void report_row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
              << parallel_ms << " ms   x" << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (equal ? "" : "   RESULTS DIFFER") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark for the verification kernels"};
    unsigned long samples = 2000;
    std::uint64_t seed = 42;
    app.add_option("--samples", samples, "batch size per identity");
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads available: " << omp_get_max_threads() << "\n\n";
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(13) << "serial"
              << std::setw(13) << "parallel" << "   speedup\n";

    Catalog cat;
    bool all_equal = true;
    for (const char* id : {"cvg", "ps", "prop-hrbalid1"}) {
        SamplingPlan plan;
        plan.id = id;
        plan.sample_count = samples;
        plan.seed = seed;
        auto assignments = sample_params(cat, plan);
        const std::string variant = cat.find(id).variants.front().name;

        auto t0 = clock_type::now();
        auto serial = check_batch_serial(cat, id, variant, assignments);
        double serial_ms = ms_since(t0);

        t0 = clock_type::now();
        auto parallel = check_batch_parallel(cat, id, variant, assignments);
        double parallel_ms = ms_since(t0);

        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].kind == parallel[i].kind && serial[i].lhs == parallel[i].lhs &&
                    serial[i].rhs == parallel[i].rhs;
        all_equal = all_equal && equal;
        report_row(std::string("verify batch: ") + id, serial_ms, parallel_ms, equal);
    }

    {
        SelfTestOptions opt;
        opt.seed = seed;
        opt.parallel = false;
        auto t0 = clock_type::now();
        auto serial_results = run_selftest(opt);
        double serial_ms = ms_since(t0);

        opt.parallel = true;
        t0 = clock_type::now();
        auto parallel_results = run_selftest(opt);
        double parallel_ms = ms_since(t0);

        bool equal = serial_results.size() == parallel_results.size();
        for (std::size_t i = 0; equal && i < serial_results.size(); ++i)
            equal = serial_results[i].passed == parallel_results[i].passed &&
                    serial_results[i].detail == parallel_results[i].detail;
        all_equal = all_equal && equal && all_passed(parallel_results);
        report_row("inversion selftest", serial_ms, parallel_ms, equal);
    }

    std::cout << (all_equal ? "\nserial and parallel kernels agree exactly\n"
                            : "\nERROR: kernel outputs diverged\n");
    return all_equal ? 0 : 1;
}
