#ifndef HYPERINVERT_ERRORS_HPP
#define HYPERINVERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperinvert {

/// Base class for everything that can go wrong while evaluating exact
/// expressions. The verification harness treats any EvalError raised during
/// an identity evaluation as "this parameter point is not admissible".
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public EvalError {
public:
    DivisionByZero() : EvalError("division by zero") {}
};

/// No upper parameter of a pFq is a nonpositive integer.
class NotTerminating : public EvalError {
public:
    NotTerminating() : EvalError("series does not terminate: no nonpositive-integer upper parameter") {}
};

/// A lower Pochhammer factor vanishes inside the summation range.
class LowerParameterPole : public EvalError {
public:
    LowerParameterPole(unsigned k, const std::string& param)
        : EvalError("lower parameter " + param + " produces a pole at term k = " + std::to_string(k)),
          term_index(k), parameter(param) {}
    unsigned term_index;
    std::string parameter;
};

/// A denominator Pochhammer of a bracket product vanishes.
class DenominatorPole : public EvalError {
public:
    explicit DenominatorPole(const std::string& param)
        : EvalError("denominator Pochhammer (" + param + ")_n vanishes"), parameter(param) {}
    std::string parameter;
};

/// Phi(x;k) = 0 at a point an inverse transform needs to divide by.
class PhiVanishes : public EvalError {
public:
    PhiVanishes(const std::string& x, unsigned order)
        : EvalError("Phi(" + x + "; " + std::to_string(order) + ") vanishes"),
          point(x), order(order) {}
    std::string point;
    unsigned order;
};

/// A coefficient family backed by a finite table was asked past its end.
class IndexOutOfRange : public std::out_of_range {
public:
    IndexOutOfRange(std::size_t j, std::size_t max_index)
        : std::out_of_range("coefficient index " + std::to_string(j) +
                            " exceeds max_index " + std::to_string(max_index)) {}
};

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string& id)
        : std::invalid_argument("unknown identity: " + id) {}
};

class UnknownVariant : public std::invalid_argument {
public:
    UnknownVariant(const std::string& id, const std::string& variant)
        : std::invalid_argument("identity " + id + " has no variant named " + variant) {}
};

/// An assignment violates an identity's admissibility predicate.
class NotAdmissible : public std::runtime_error {
public:
    explicit NotAdmissible(const std::string& reason)
        : std::runtime_error("not admissible: " + reason), reason(reason) {}
    std::string reason;
};

/// The sampler hit the bounded-retry limit without an admissible draw.
class SamplingExhausted : public std::runtime_error {
public:
    explicit SamplingExhausted(const std::string& id)
        : std::runtime_error("sampling exhausted after 10000 consecutive rejections for " + id) {}
};

} // namespace hyperinvert

#endif
