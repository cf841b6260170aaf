#pragma once

#include <utility>

#include "gysin/polynomial.hpp"

namespace gysin {

// Unreduced quotient of two polynomials over the same variables. No gcd
// reduction ever happens; equality is decided by cross-multiplication and
// conversion to a polynomial is a single certified exact division.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (num_.nvars() != den_.nvars())
            throw arity_error("RationalFunction: arity mismatch");
        if (den_.is_zero())
            throw std::domain_error("RationalFunction: zero denominator");
    }

    static RationalFunction from_polynomial(Polynomial p) {
        const int n = p.nvars();
        return RationalFunction(std::move(p), Polynomial::one(n));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    int nvars() const { return num_.nvars(); }

private:
    Polynomial num_;
    Polynomial den_;
};

// (a/b) + (c/d) = (a*d + c*b) / (b*d), kept unreduced.
inline RationalFunction frac_add(const RationalFunction& f, const RationalFunction& g) {
    if (f.nvars() != g.nvars()) throw arity_error("frac_add: arity mismatch");
    return RationalFunction(f.numerator() * g.denominator() + g.numerator() * f.denominator(),
                            f.denominator() * g.denominator());
}

// a/b = c/d iff a*d = c*b.
inline bool cross_equal(const RationalFunction& f, const RationalFunction& g) {
    if (f.nvars() != g.nvars()) throw arity_error("cross_equal: arity mismatch");
    return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

// Certifies that f is a polynomial, returning the exact quotient.
// Throws not_divisible_error otherwise.
inline Polynomial frac_to_polynomial(const RationalFunction& f) {
    return exact_divide(f.numerator(), f.denominator());
}

} // namespace gysin
