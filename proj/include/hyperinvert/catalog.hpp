/**
 * @file catalog.hpp
 * @brief Data-driven registry of the terminating-series identities.
 *
 * Each record stores the formula's two sides as exact evaluators over a
 * parameter assignment, plus optional corrected variants for records whose
 * printed form is internally inconsistent. No symbolic engine: identities
 * are discriminated by exact evaluation at sampled rational points.
 */
#ifndef HYPERINVERT_CATALOG_HPP
#define HYPERINVERT_CATALOG_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <hyperinvert/rational.hpp>

namespace hyperinvert {

enum class ParamKind { rational, nonneg_integer };

struct ParamSpec {
    std::string name;
    ParamKind kind;
};

struct ParamAssignment {
    std::vector<std::pair<std::string, Rational>> rationals; // in record order
    long n = 0;
    long ell = 1; // consumed only by the general-ell record

    const Rational& r(std::string_view name) const;
    bool has(std::string_view name) const;
};

using Evaluator = std::function<Rational(const ParamAssignment&)>;

struct Variant {
    std::string name;
    bool expected_holds; // drives the CLI exit code
    std::string note;    // why a variant exists / why it is expected to fail
    Evaluator lhs;
    Evaluator rhs;
};

enum class Status { foundational, derived, suspect };

std::string_view to_string(Status s);

struct IdentityRecord {
    std::string id;
    std::string anchor; // citation of the formula being checked
    std::vector<ParamSpec> params;
    Status status = Status::derived;
    bool uses_ell = false;
    std::function<bool(const ParamAssignment&)> side_condition; // optional extra constraints
    std::vector<Variant> variants; // first entry is the printed/primary form

    const Variant& variant(std::string_view name) const; // throws UnknownVariant
};

class Catalog {
public:
    Catalog(); // registers every record in a fixed, documented order

    const std::vector<IdentityRecord>& records() const { return records_; }
    const IdentityRecord& find(std::string_view id) const; // throws UnknownIdentity
    bool contains(std::string_view id) const;

private:
    std::vector<IdentityRecord> records_;
};

enum class OutcomeKind { holds, fails, not_admissible };

struct VerificationOutcome {
    OutcomeKind kind;
    Rational lhs, rhs;  // meaningful for holds/fails
    std::string reason; // meaningful for not_admissible
};

/// Both sides, exactly. Throws NotAdmissible when the assignment violates the
/// record's side conditions or hits a pole/zero-division while evaluating.
std::pair<Rational, Rational> eval_identity_sides(const Catalog& cat, std::string_view id,
                                                  std::string_view variant,
                                                  const ParamAssignment& pa);

/// Outcome-valued form: admissibility violations are an outcome, not an error.
VerificationOutcome check_identity(const Catalog& cat, std::string_view id,
                                   std::string_view variant, const ParamAssignment& pa);

/// Side conditions hold and at least one variant evaluates on both sides.
bool admissible(const IdentityRecord& rec, const ParamAssignment& pa);

namespace detail {
// Record builders, grouped by the summation theorem they derive from.
void register_cvg_family(std::vector<IdentityRecord>& out);
void register_ps_family(std::vector<IdentityRecord>& out);
void register_hr_family(std::vector<IdentityRecord>& out);
} // namespace detail

} // namespace hyperinvert

#endif
