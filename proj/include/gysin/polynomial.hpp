#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gysin/errors.hpp"
#include "gysin/rational.hpp"

namespace gysin {

// Exponent vector of fixed arity. Total degree is the sum of the entries.
class Monomial {
public:
    explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {
        if (nvars < 1) throw std::invalid_argument("Monomial: arity must be positive");
    }

    explicit Monomial(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
        if (exps_.empty()) throw std::invalid_argument("Monomial: arity must be positive");
        for (auto e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int arity() const { return static_cast<int>(exps_.size()); }

    std::int64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
    }

    std::int64_t operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const {
        check_arity(o);
        std::vector<std::int64_t> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // Requires this->divides(o).
    Monomial quotient_into(const Monomial& o) const {
        check_arity(o);
        std::vector<std::int64_t> e(o.exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    void check_arity(const Monomial& o) const {
        if (arity() != o.arity()) throw arity_error("Monomial: arity mismatch");
    }

    std::vector<std::int64_t> exps_;
};

// Graded lexicographic order: compare total degree first, then the exponent
// vectors lexicographically.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

// Term maps are kept in descending graded-lex order so that begin() is the
// leading term and iteration matches the canonical printing order.
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(b, a);
    }
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; all monomials share the polynomial's arity.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be positive");
    }

    static Polynomial constant(int nvars, Rational c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), std::move(c));
        return p;
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial one(int nvars) { return constant(nvars, Rational(1)); }

    // index is 1-based, matching the x1..xn naming used throughout.
    static Polynomial variable(int nvars, int index) {
        if (index < 1 || index > nvars)
            throw std::out_of_range("Polynomial: variable index out of range");
        std::vector<std::int64_t> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(index - 1)] = 1;
        Polynomial p(nvars);
        p.terms_.emplace(Monomial(std::move(e)), Rational(1));
        return p;
    }

    static Polynomial from_monomial(Monomial m, Rational c) {
        Polynomial p(m.arity());
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    // Adopts an already-canonical term map (no zero coefficients, uniform arity).
    static Polynomial from_map(int nvars, TermMap terms) {
        Polynomial p(nvars);
        for (const auto& [m, c] : terms)
            if (m.arity() != nvars || c.is_zero())
                throw std::invalid_argument("Polynomial::from_map: non-canonical term map");
        p.terms_ = std::move(terms);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // The zero polynomial has no degree (reported as "minus infinity" via
    // an empty optional rather than a sentinel integer).
    std::optional<std::int64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.degree();
    }

    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading term");
        return *terms_.begin();
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool integer_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (!c.is_integer()) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_arity(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.accumulate(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_arity(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.accumulate(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_arity(o);
        Polynomial r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.accumulate(ma.times(mb), ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& s) const {
        Polynomial r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational eval(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw arity_error("Polynomial::eval: point length must equal nvars");
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (int i = 0; i < nvars_; ++i) {
                const auto e = m[i];
                if (e > 0) v *= pow(point[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(e));
            }
            total += v;
        }
        return total;
    }

private:
    void check_arity(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw arity_error("Polynomial: arity mismatch");
    }

    void accumulate(const Monomial& m, const Rational& c) {
        if (m.arity() != nvars_) throw arity_error("Polynomial: monomial arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

// Raised when an exact division leaves a nonzero remainder. Carries the
// remainder and divisor so callers can report the residual fraction.
class not_divisible_error : public std::domain_error {
public:
    not_divisible_error(Polynomial remainder, Polynomial divisor)
        : std::domain_error("polynomial division left a nonzero remainder"),
          remainder_(std::make_shared<const Polynomial>(std::move(remainder))),
          divisor_(std::make_shared<const Polynomial>(std::move(divisor))) {}

    const Polynomial& remainder() const { return *remainder_; }
    const Polynomial& divisor() const { return *divisor_; }

private:
    std::shared_ptr<const Polynomial> remainder_;
    std::shared_ptr<const Polynomial> divisor_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

// Multivariate division by a single divisor with respect to graded-lex
// leading terms. Terms whose leading monomial is not a multiple of LT(d)
// are moved to the remainder.
inline DivisionResult divide(const Polynomial& p, const Polynomial& d) {
    if (p.nvars() != d.nvars()) throw arity_error("divide: arity mismatch");
    if (d.is_zero()) throw std::domain_error("divide: division by zero polynomial");

    const auto [dm, dc] = d.leading_term();
    Polynomial::TermMap q, r, rest(p.terms());

    auto accumulate = [](Polynomial::TermMap& map, Monomial m, Rational c) {
        if (c.is_zero()) return;
        auto it = map.find(m);
        if (it == map.end()) {
            map.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) map.erase(it);
        }
    };

    while (!rest.empty()) {
        const auto& [lm, lc] = *rest.begin();
        if (dm.divides(lm)) {
            const Monomial tm = dm.quotient_into(lm);
            const Rational tc = lc / dc;
            q.emplace(tm, tc);
            for (const auto& [m, c] : d.terms()) accumulate(rest, tm.times(m), -(tc * c));
        } else {
            r.emplace(lm, lc);
            rest.erase(rest.begin());
        }
    }
    return DivisionResult{Polynomial::from_map(p.nvars(), std::move(q)),
                          Polynomial::from_map(p.nvars(), std::move(r))};
}

// Exact division: succeeds iff the remainder is identically zero.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    DivisionResult res = divide(p, d);
    if (!res.remainder.is_zero()) throw not_divisible_error(std::move(res.remainder), d);
    return std::move(res.quotient);
}

} // namespace gysin
