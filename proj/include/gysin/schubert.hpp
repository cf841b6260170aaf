#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gysin/pushforward.hpp"

namespace gysin {

// Weakly decreasing non-negative integer parts. Trailing zeros are allowed
// and ignored for most purposes.
struct Partition {
    std::vector<std::int64_t> parts;

    explicit Partition(std::vector<std::int64_t> p = {}) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    std::int64_t weight() const {
        std::int64_t w = 0;
        for (auto p : parts) w += p;
        return w;
    }

    std::size_t length() const {
        std::size_t l = parts.size();
        while (l > 0 && parts[l - 1] == 0) --l;
        return l;
    }
};

namespace detail {

// det(x_i^{mu_j}) expanded over all permutations.
inline Polynomial alternant(const std::vector<std::int64_t>& mu, int n) {
    Polynomial out(n);
    for (const auto& w : enumerate(GroupSpec{Family::A, n})) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(w.image(i))];
        const Polynomial term = Polynomial::from_monomial(Monomial(std::move(e)), Rational(1));
        out = sign(w) < 0 ? out - term : out + term;
    }
    return out;
}

} // namespace detail

// The bialternant Schur polynomial det(x_i^{lambda_j + n - j}) divided by
// the Vandermonde determinant det(x_i^{n - j}). The division is exact.
inline Polynomial schur_bialternant(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_bialternant: rank must be positive");
    if (static_cast<int>(lambda.length()) > n)
        throw std::invalid_argument("schur_bialternant: partition longer than the rank");
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        const std::int64_t part =
            j < static_cast<int>(lambda.parts.size()) ? lambda.parts[static_cast<std::size_t>(j)] : 0;
        mu[static_cast<std::size_t>(j)] = part + (n - 1 - j);
    }
    const Polynomial numerator = detail::alternant(mu, n);
    const RootSystemData delta = positive_roots(GroupSpec{Family::A, n});
    const Polynomial vandermonde =
        euler_denominator(delta, RootSystemData{delta.spec, {}}, Convention::prop);
    return exact_divide(numerator, vandermonde);
}

// Sum of all monomials of total degree k, each with coefficient 1.
inline Polynomial complete_homogeneous(std::int64_t k, int n) {
    if (k < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
    Polynomial::TermMap terms;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
        if (i == n - 1) {
            e[static_cast<std::size_t>(i)] = left;
            terms.emplace(Monomial(e), Rational(1));
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, k);
    return Polynomial::from_map(n, std::move(terms));
}

// Sum of all squarefree monomials of degree k.
inline Polynomial elementary_symmetric(int k, int n) {
    if (k < 0 || k > n) return Polynomial::zero(n < 1 ? 1 : n);
    Polynomial::TermMap terms;
    std::vector<int> pick(static_cast<std::size_t>(k));
    if (k == 0) return Polynomial::one(n);
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        for (int i : pick) e[static_cast<std::size_t>(i)] = 1;
        terms.emplace(Monomial(std::move(e)), Rational(1));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Polynomial::from_map(n, std::move(terms));
}

// The classical divided difference (b - s_i.b) / (x_i - x_{i+1}); the
// numerator is always divisible. i is 1-based, 1 <= i <= n-1.
inline Polynomial divided_difference(int i, const Polynomial& b) {
    const int n = b.nvars();
    if (i < 1 || i >= n) throw std::out_of_range("divided_difference: index out of range");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) perm[static_cast<std::size_t>(t)] = t;
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    const WeylElement s(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1));
    const Polynomial numerator = b - act(s, b);
    if (numerator.is_zero()) return numerator;
    const Polynomial denom = Polynomial::variable(n, i) - Polynomial::variable(n, i + 1);
    return exact_divide(numerator, denom);
}

// Divided differences composed along the reduced word
// (s1)(s2 s1)(s3 s2 s1)... of the longest permutation; reproduces the Jacobi
// symmetrizer in the prop convention.
inline Polynomial jacobi_via_divided_differences(const Polynomial& b, int n) {
    if (b.nvars() != n)
        throw arity_error("jacobi_via_divided_differences: nvars must equal the rank");
    std::vector<int> word;
    for (int blk = 1; blk < n; ++blk)
        for (int i = blk; i >= 1; --i) word.push_back(i);
    Polynomial out = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(*it, out);
    return out;
}

struct SegreRow {
    std::int64_t j;
    bool pass;
    Polynomial expected;
    Polynomial computed;
};

struct SegreReport {
    int n;
    std::vector<SegreRow> rows;
    bool all_pass;
};

// Verifies the projective-bundle pushforward identity: the Grassmann
// operator with k = 1 sends x1^{n-1+j} to the complete homogeneous
// polynomial of degree j.
inline SegreReport segre_check(int n, std::int64_t jmax) {
    if (n < 2) throw std::invalid_argument("segre_check: rank must be at least 2");
    SegreReport report{n, {}, true};
    for (std::int64_t j = 0; j <= jmax; ++j) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        e[0] = n - 1 + j;
        const Polynomial power = Polynomial::from_monomial(Monomial(std::move(e)), Rational(1));
        const Polynomial computed = lagrange_sylvester(power, n, 1, Convention::prop);
        const Polynomial expected = complete_homogeneous(j, n);
        const bool pass = computed == expected;
        report.rows.push_back(SegreRow{j, pass, expected, computed});
        if (!pass) report.all_pass = false;
    }
    return report;
}

} // namespace gysin
