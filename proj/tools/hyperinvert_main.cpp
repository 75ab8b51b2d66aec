// hyperinvert: exact verification of terminating hypergeometric identities
// via multiplicate inverse series relations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 sampling exhausted.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include <hyperinvert/catalog.hpp>
#include <hyperinvert/errors.hpp>
#include <hyperinvert/io_formats.hpp>
#include <hyperinvert/selftest.hpp>
#include <hyperinvert/verify.hpp>

namespace {

using namespace hyperinvert;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
    out << text;
}

int cmd_list(const Catalog& cat, const std::string& format) {
    if (format == "json") {
        std::string sep;
        std::cout << "[\n";
        for (const auto& rec : cat.records()) {
            std::cout << sep << "  {\"id\": \"" << rec.id << "\", \"anchor\": \"" << rec.anchor
                      << "\", \"params\": [";
            std::string psep;
            for (const auto& p : rec.params) {
                std::cout << psep << '"' << p.name << '"';
                psep = ", ";
            }
            std::cout << "], \"status\": \"" << to_string(rec.status) << "\", \"variants\": [";
            psep = "";
            for (const auto& v : rec.variants) {
                std::cout << psep << '"' << v.name << '"';
                psep = ", ";
            }
            std::cout << "]}";
            sep = ",\n";
        }
        std::cout << "\n]\n";
        return 0;
    }
    for (const auto& rec : cat.records()) {
        std::cout << std::left << std::setw(18) << rec.id << std::setw(14) << to_string(rec.status);
        std::string psep;
        std::string params;
        for (const auto& p : rec.params) {
            params += psep + p.name;
            psep = ",";
        }
        std::cout << std::setw(14) << params << rec.anchor << '\n';
    }
    return 0;
}

int cmd_verify_one(const Catalog& cat, SamplingPlan plan, const RunOptions& options,
                   const std::string& format, const std::string& out_path) {
    VerificationReport report = run_verification(cat, plan, options);
    write_output(format == "csv" ? report_to_csv(report) : report_to_json(report), out_path);
    return report_passes(report) ? 0 : 1;
}

int cmd_verify_all(const Catalog& cat, std::uint64_t seed, const RunOptions& options,
                   const std::string& out_path) {
    int exit_code = 0;
    std::string json_all = "[\n";
    std::string sep;
    for (const auto& rec : cat.records()) {
        SamplingPlan plan = default_plan(rec);
        plan.seed = seed;
        VerificationReport report = run_verification(cat, plan, options);
        const bool ok = report_passes(report);
        if (!ok) exit_code = 1;
        std::cout << std::left << std::setw(18) << rec.id << (ok ? "ok    " : "FAIL  ")
                  << "resolved=" << report.resolved_variant;
        if (report.effective_status != report.declared_status)
            std::cout << "  [" << to_string(report.declared_status) << " -> "
                      << to_string(report.effective_status) << "]";
        std::cout << '\n';
        if (!out_path.empty()) {
            std::string one = report_to_json(report);
            one.pop_back(); // trailing newline
            json_all += sep + one;
            sep = ",\n";
        }
    }
    if (!out_path.empty()) write_output(json_all + "\n]\n", out_path);
    return exit_code;
}

int cmd_invert(const Catalog&, long ell, const std::string& coeffs_path,
               const std::string& sequence_path, const std::string& direction) {
    FactorSequences seqs = load_coefficients_file(coeffs_path);
    if (static_cast<long>(seqs.ell()) != ell)
        throw CLI::ValidationError("--ell", "coefficient file defines ell = " +
                                                std::to_string(seqs.ell()));
    FiniteSequence input = load_sequence_file(sequence_path);
    FiniteSequence output = direction == "forward" ? forward_transform(seqs, input)
                                                   : inverse_transform(seqs, input);
    std::cout << sequence_to_json(output);
    return 0;
}

int cmd_selftest(std::uint64_t seed, bool serial) {
    SelfTestOptions opt;
    opt.seed = seed;
    opt.parallel = !serial;
    auto results = run_selftest(opt);
    for (const auto& r : results)
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for terminating hypergeometric series identities"};
    app.require_subcommand(1);

    std::string format = "table", out_path, id, variant, coeffs_path, sequence_path;
    std::string direction = "inverse";
    bool all_variants = false, all_ids = false, serial = false, full_counterexamples = false;
    unsigned long samples = 100;
    long max_n = 8, ell = 0;
    std::uint64_t seed = 42;

    auto* list = app.add_subcommand("list", "list the identity catalog");
    list->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify", "sample parameters and check an identity exactly");
    verify->add_option("--id", id, "identity key (see `list`)");
    verify->add_flag("--all", all_ids, "verify every record at its default plan");
    verify->add_option("--variant", variant, "check one named variant");
    verify->add_flag("--all-variants", all_variants, "check every cataloged variant");
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--serial", serial, "use the serial reference kernel");
    verify->add_flag("--full-counterexamples", full_counterexamples, "no cap of 10 per variant");

    auto* invert = app.add_subcommand("invert", "apply a multiplicate transform to a sequence file");
    invert->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
    invert->add_option("--coeffs", coeffs_path)->required();
    invert->add_option("--sequence", sequence_path)->required();
    invert->add_option("--direction", direction)->check(CLI::IsMember({"forward", "inverse"}));

    auto* selftest = app.add_subcommand("selftest", "run the inversion-engine invariant suite");
    selftest->add_option("--seed", seed);
    selftest->add_flag("--serial", serial);

    try {
        app.parse(argc, argv);
        hyperinvert::Catalog cat;
        RunOptions options{!serial, full_counterexamples};
        if (list->parsed()) return cmd_list(cat, format);
        if (verify->parsed()) {
            if (all_ids) return cmd_verify_all(cat, seed, options, out_path);
            if (id.empty()) throw CLI::RequiredError("--id or --all");
            SamplingPlan plan;
            plan.id = id;
            plan.variant = variant;
            plan.all_variants = all_variants;
            plan.sample_count = samples;
            plan.max_n = max_n;
            plan.seed = seed;
            if (format == "table") format = "json";
            return cmd_verify_one(cat, plan, options, format, out_path);
        }
        if (invert->parsed()) return cmd_invert(cat, ell, coeffs_path, sequence_path, direction);
        if (selftest->parsed()) return cmd_selftest(seed, serial);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const hyperinvert::SamplingExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
