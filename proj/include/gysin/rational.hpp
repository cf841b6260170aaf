#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gysin {

// Exact rational number backed by GMP. The canonical form is maintained at
// all times: gcd(|numerator|, denominator) = 1, denominator >= 1, and zero
// is stored as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}

    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    // Builds an integer from a decimal digit string of arbitrary length.
    static Rational from_integer_string(const std::string& digits) {
        return Rational(mpq_class(mpz_class(digits, 10)));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(value_ / o.value_));
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return value_.get_str(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

inline Rational pow(const Rational& base, std::uint64_t e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num) / mpq_class(den));
}

} // namespace gysin
