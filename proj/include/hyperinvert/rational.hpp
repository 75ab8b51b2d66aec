/**
 * @file rational.hpp
 * @brief Exact rational scalar backed by GMP.
 *
 * Denominator is always > 0 and gcd(|num|, den) = 1 after every operation,
 * so equality is plain structural equality. All arithmetic is exact; the
 * only runtime error is division by zero.
 */
#ifndef HYPERINVERT_RATIONAL_HPP
#define HYPERINVERT_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include <hyperinvert/errors.hpp>

namespace hyperinvert {

class Rational {
private:
    mpq_class v_; // kept canonical

public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((signed long)n) {}
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : v_((signed long)num, (signed long)den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    /// Accepts "p", "-p", "p/q" with optional sign on p.
    static Rational parse(std::string_view s) {
        auto pos = s.find('/');
        try {
            if (pos == std::string_view::npos) {
                return Rational(mpz_class(std::string(s)));
            }
            mpz_class num(std::string(s.substr(0, pos)));
            mpz_class den(std::string(s.substr(pos + 1)));
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse rational: " + std::string(s));
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// True when this is one of 0, -1, -2, ... (a series-termination witness).
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    /// Integer value; caller must ensure is_integer() and that it fits.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::overflow_error("rational does not fit a long: " + to_string());
        return v_.get_num().get_si();
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ + b.v_;
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ - b.v_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.v_ = a.v_ * b.v_;
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational r;
        r.v_ = a.v_ / b.v_;
        return r;
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        v_ /= b.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }
};

/// q^e for a nonnegative integer exponent.
inline Rational pow_uint(const Rational& q, unsigned long e) {
    Rational r(1);
    Rational base = q;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace hyperinvert

#endif
