/**
 * @file inversion.hpp
 * @brief Multiplicate Gould-Hsu inverse series relations.
 *
 * The linear factors a_k + x b_k of the classic inversion are split into
 * ell+1 interleaved classes phi_0..phi_ell. With
 *
 *   Phi(x;n) = prod_{i=0}^{ell} phi_i(x; floor((i+n)/(ell+1)))
 *   lambda(k) = A_{ell-q,p} + k B_{ell-q,p}   where k = (ell+1)p + q
 *
 * the pair
 *
 *   F(n) = sum_k (-1)^k C(n,k) Phi(k;n) G(k)
 *   G(n) = sum_k (-1)^k C(n,k) lambda(k)/Phi(n;k+1) F(k)
 *
 * is reciprocal. ell = 0 is the classic Gould-Hsu pair, ell = 1 the
 * duplicate, ell = 2 the triplicate form. The printed duplicate/triplicate
 * even-odd split systems are provided separately as literal transcriptions
 * so they can be cross-checked against the generic engine.
 */
#ifndef HYPERINVERT_INVERSION_HPP
#define HYPERINVERT_INVERSION_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include <hyperinvert/rational.hpp>

namespace hyperinvert {

/// Total map j -> coefficient, backed by an explicit table or by an
/// affine rule base + j * step. Affine families have no index bound.
class CoefficientFamily {
public:
    static CoefficientFamily table(std::vector<Rational> values);
    static CoefficientFamily affine(Rational base, Rational step);
    static CoefficientFamily constant(Rational value) { return affine(std::move(value), Rational(0)); }

    Rational at(std::size_t j) const;
    std::size_t max_index() const {
        return is_affine_ ? std::numeric_limits<std::size_t>::max() : table_.size() - 1;
    }
    bool is_affine() const { return is_affine_; }
    const Rational& base() const { return base_; }
    const Rational& step() const { return step_; }
    const std::vector<Rational>& values() const { return table_; }

private:
    CoefficientFamily() = default;
    bool is_affine_ = false;
    std::vector<Rational> table_;
    Rational base_, step_;
};

/// The (ell+1) coefficient families {A_{i,j}}, {B_{i,j}} defining the
/// phi_i, Phi and lambda of one inversion instance. Immutable once built.
class FactorSequences {
public:
    FactorSequences(unsigned ell,
                    std::vector<CoefficientFamily> coeff_a,
                    std::vector<CoefficientFamily> coeff_b);

    unsigned ell() const { return ell_; }
    const CoefficientFamily& a(unsigned i) const { return coeff_a_.at(i); }
    const CoefficientFamily& b(unsigned i) const { return coeff_b_.at(i); }

private:
    unsigned ell_;
    std::vector<CoefficientFamily> coeff_a_, coeff_b_;
};

using FiniteSequence = std::vector<Rational>;

/// phi_i(x;n) = prod_{k=0}^{n-1} (A_{i,k} + x B_{i,k}); 1 when n = 0.
Rational phi_component(const FactorSequences& seqs, unsigned i, const Rational& x, unsigned long n);

/// Phi(x;n) = prod_i phi_i(x; floor((i+n)/(ell+1))) -- degree n in x.
Rational phi_big(const FactorSequences& seqs, const Rational& x, unsigned long n);

/// lambda(k) = A_{ell-q,p} + k B_{ell-q,p} with k = (ell+1)p + q.
Rational lambda_factor(const FactorSequences& seqs, unsigned long k);

/// F(n) = sum_{k=0}^{n} (-1)^k C(n,k) Phi(k;n) G(k).
FiniteSequence forward_transform(const FactorSequences& seqs, const FiniteSequence& g);

/// G(n) = sum_{k=0}^{n} (-1)^k C(n,k) lambda(k)/Phi(n;k+1) F(k).
/// Throws PhiVanishes when a touched Phi(n;k+1) is zero.
FiniteSequence inverse_transform(const FactorSequences& seqs, const FiniteSequence& f);

/// S(i,n) = sum_{k=i}^{n} (-1)^{k-i} C(n-i,k-i) Phi(k;n)/Phi(k;i+1).
/// Equals 0 for i < n and 1/lambda(n) at i = n.
Rational inner_sum_S(const FactorSequences& seqs, unsigned long i, unsigned long n);

/// Literal transcription of the printed duplicate (ell = 1) inverse system:
///   G(n) =  sum_k C(n,2k)   (c_k+2k d_k)     / [phi(n;k)   psi(n;k+1)] F(2k)
///         - sum_k C(n,2k+1) (a_k+(2k+1) b_k) / [phi(n;k+1) psi(n;k+1)] F(2k+1)
/// with phi = class 0, psi = class 1.
FiniteSequence duplicate_inverse_printed(const FactorSequences& seqs, const FiniteSequence& f);

/// Reading of the printed triplicate (ell = 2) inverse system.
/// printed_verbatim keeps the weight e_k + 3 f_k, the fixed +,-,+ signs and
/// the psi(n;k+1) order of the first block exactly as displayed; corrected
/// uses the Theorem-consistent weight e_k + 3k f_k, the (-1)^k sign and the
/// psi(n;k) order, which makes the split identical to the generic engine.
enum class TriplicateReading { printed_verbatim, corrected };

FiniteSequence triplicate_inverse_printed(const FactorSequences& seqs, const FiniteSequence& f,
                                          TriplicateReading reading);

} // namespace hyperinvert

#endif
