#ifndef JCIRC_RATIONAL_HPP
#define JCIRC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcirc {

/// Arbitrary-precision signed integer. GMP handles the representation;
/// values in this library reach a few thousand bits.
using Integer = mpz_class;

inline Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

inline Integer integer_from_decimal(const std::string& text) {
    return Integer(text, 10);  // throws std::invalid_argument on garbage
}

inline std::size_t decimal_digits(const Integer& value) {
    return mpz_sizeinbase(value.get_mpz_t(), 10);
}

/// Exact rational scalar. Invariants hold for every reachable value:
/// denominator > 0 and gcd(|num|, den) = 1 (canonical form is restored
/// eagerly in every constructor; GMP arithmetic preserves it).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : value_(n) {}                // NOLINT
    Rational(const Integer& n) : value_(n) {}      // NOLINT
    template <typename U>                          // GMP integer expressions
    Rational(const __gmp_expr<mpz_t, U>& n) : value_(Integer(n)) {}  // NOLINT
    Rational(const Integer& num, const Integer& den) : value_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_.canonicalize();
    }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Exact conversion; the value must have denominator 1.
    Integer to_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational: " + to_string() + " is not an integer");
        return value_.get_num();
    }

    double to_double() const { return value_.get_d(); }

    std::string to_string() const {
        return is_integer() ? value_.get_num().get_str()
                            : value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    return Rational(integer_pow(base.num(), exp), integer_pow(base.den(), exp));
}

inline Rational abs(const Rational& q) { return q < Rational(0) ? -q : q; }

}  // namespace jcirc

#endif
