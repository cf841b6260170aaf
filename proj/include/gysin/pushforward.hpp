#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gysin/rational_function.hpp"
#include "gysin/roots.hpp"
#include "gysin/weyl.hpp"

namespace gysin {

// A fiber bundle with fiber G/H: the group, the composition determining the
// parabolic subgroup H, and the denominator sign convention. The composition
// (1,...,1) means H = T, the complete flag fiber.
struct BundleSpec {
    GroupSpec group;
    Composition fiber;
    Convention convention = Convention::prop;
};

inline BundleSpec full_flag_bundle(Family family, int rank,
                                   Convention convention = Convention::prop) {
    return BundleSpec{GroupSpec{family, rank},
                      Composition{std::vector<int>(static_cast<std::size_t>(rank), 1)}, convention};
}

// Number of roots in the Euler-class denominator, which is also the degree
// drop of the pushforward.
inline int fiber_dimension(const BundleSpec& bundle) {
    const auto delta = positive_roots(bundle.group);
    const auto parab = parabolic_positive_roots(bundle.group, bundle.fiber);
    return static_cast<int>(complement_roots(delta, parab).size());
}

// One fixed point's contribution: the restriction of the class and the
// equivariant Euler class of the normal bundle at that point.
struct FixedPointDatum {
    Polynomial restriction;
    Polynomial euler;
};

// The restriction of the class b at the fixed point w, i.e. the composite
// of pulling b(u) back to b(y~) and restricting y~_i to w.u_i: just w acting
// on b. For a partial flag fiber b must be W_H-invariant for the restriction
// to be well defined on the coset.
inline Polynomial restriction_at(const WeylElement& w, const Polynomial& b,
                                 const BundleSpec& bundle) {
    validate(bundle.group, bundle.fiber);
    if (b.nvars() != bundle.group.rank)
        throw arity_error("restriction_at: nvars must equal the rank");
    if (!bundle.fiber.all_ones() && !is_invariant(b, bundle.group, bundle.fiber))
        throw invariance_error("restriction_at: class is not W_H-invariant");
    return act(w, b);
}

// The equivariant Euler class at the fixed point w: w acting on the product
// of the complement roots.
inline Polynomial euler_at(const WeylElement& w, const BundleSpec& bundle) {
    const auto delta = positive_roots(bundle.group);
    const auto parab = parabolic_positive_roots(bundle.group, bundle.fiber);
    return act(w, euler_denominator(delta, parab, bundle.convention));
}

// Sums restriction/euler over the fixed points in the fraction field and
// certifies that the result is a polynomial. Terms are first merged by
// denominator (equal up to sign), then combined by cross-multiplication.
// Throws not_divisible_error when the sum fails polynomiality.
inline Polynomial localization_sum(std::span<const FixedPointDatum> data) {
    if (data.empty())
        throw std::invalid_argument("localization_sum: no fixed-point data");
    const int n = data.front().restriction.nvars();

    std::vector<std::pair<Polynomial, Polynomial>> buckets;  // (numerator, denominator)
    for (const auto& d : data) {
        if (d.restriction.nvars() != n || d.euler.nvars() != n)
            throw arity_error("localization_sum: arity mismatch");
        if (d.euler.is_zero())
            throw std::domain_error("localization_sum: zero Euler class");
        bool merged = false;
        for (auto& [num, den] : buckets) {
            if (den == d.euler) {
                num = num + d.restriction;
                merged = true;
                break;
            }
            if (den == -d.euler) {
                num = num - d.restriction;
                merged = true;
                break;
            }
        }
        if (!merged) buckets.emplace_back(d.restriction, d.euler);
    }

    RationalFunction total(buckets.front().first, buckets.front().second);
    for (std::size_t i = 1; i < buckets.size(); ++i)
        total = frac_add(total, RationalFunction(buckets[i].first, buckets[i].second));
    return frac_to_polynomial(total);
}

namespace detail {

// Euler class at a coset representative in factored form: an overall sign
// and the set of positive roots whose product it is. Valid because w maps
// each root to plus or minus a positive root.
struct FactoredEuler {
    int sign = 1;
    std::vector<bool> uses;  // indexed like delta.positive
};

inline FactoredEuler factor_euler(const WeylElement& w, const std::vector<Root>& complement,
                                  const std::map<std::vector<int>, int>& root_index,
                                  std::size_t root_count) {
    FactoredEuler fe;
    fe.uses.assign(root_count, false);
    for (const auto& alpha : complement) {
        auto img = apply_to_linear(w, alpha.coeffs);
        if (first_nonzero_negative(img)) {
            for (auto& c : img) c = -c;
            fe.sign = -fe.sign;
        }
        fe.uses[static_cast<std::size_t>(root_index.at(img))] = true;
    }
    return fe;
}

} // namespace detail

// The localization pushforward f^* f_* for the fiber G/H: the sum over the
// coset representatives W_G/W_H of w.(b / product of complement roots),
// certified to be a polynomial by exact division.
//
// The complete flag case sums the closed numerator sign(w) * w.b over the
// whole group and divides once by the Euler-class product. For a general
// composition the denominators genuinely differ between cosets, so they are
// kept in factored form over the positive roots and brought to their least
// common denominator; no polynomial gcd is ever needed.
inline Polynomial gysin_pushforward(const Polynomial& b, const BundleSpec& bundle,
                                    bool require_invariance = true,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
    validate(bundle.group, bundle.fiber);
    const int n = bundle.group.rank;
    if (b.nvars() != n) throw arity_error("gysin_pushforward: nvars must equal the rank");
    if (require_invariance && !bundle.fiber.all_ones() &&
        !is_invariant(b, bundle.group, bundle.fiber))
        throw invariance_error("gysin_pushforward: class is not W_H-invariant");

    const RootSystemData delta = positive_roots(bundle.group);
    const RootSystemData parab = parabolic_positive_roots(bundle.group, bundle.fiber);
    const std::vector<Root> complement = complement_roots(delta, parab);
    const int m = static_cast<int>(complement.size());

    if (b.is_zero()) return b;
    if (m == 0) return b;  // H = G, point fiber

    if (bundle.fiber.all_ones()) {
        Polynomial num(n);
        for (const auto& w : enumerate(bundle.group, cap)) {
            const Polynomial wb = act(w, b);
            num = sign(w) < 0 ? num - wb : num + wb;
        }
        if (num.is_zero()) return num;
        return exact_divide(num, euler_denominator(delta, parab, bundle.convention));
    }

    // family A, general composition
    std::map<std::vector<int>, int> root_index;
    for (int i = 0; i < static_cast<int>(delta.positive.size()); ++i)
        root_index.emplace(delta.positive[static_cast<std::size_t>(i)].coeffs, i);

    const auto reps = coset_reps(bundle.group, bundle.fiber, cap);
    std::vector<detail::FactoredEuler> factored;
    factored.reserve(reps.size());
    std::vector<bool> lcd(delta.positive.size(), false);
    for (const auto& w : reps) {
        factored.push_back(detail::factor_euler(w, complement, root_index, delta.positive.size()));
        for (std::size_t i = 0; i < lcd.size(); ++i)
            if (factored.back().uses[i]) lcd[i] = true;
    }

    Polynomial num(n);
    for (std::size_t t = 0; t < reps.size(); ++t) {
        Polynomial cofactor = Polynomial::one(n);
        for (std::size_t i = 0; i < lcd.size(); ++i)
            if (lcd[i] && !factored[t].uses[i])
                cofactor = cofactor * root_to_linear(delta.positive[i]);
        Polynomial term = act(reps[t], b) * cofactor;
        num = factored[t].sign < 0 ? num - term : num + term;
    }

    Polynomial den = Polynomial::one(n);
    for (std::size_t i = 0; i < lcd.size(); ++i)
        if (lcd[i]) den = den * root_to_linear(delta.positive[i]);

    Polynomial q = num.is_zero() ? num : exact_divide(num, den);
    if (bundle.convention == Convention::sym && (m & 1)) q = -q;
    return q;
}

// The Jacobi symmetrizer: the pushforward of a complete flag bundle in
// family A, taking any polynomial to a symmetric one. Computed by the
// closed-numerator form (sum of signed permutations of b over the
// Vandermonde-style denominator).
inline Polynomial jacobi_symmetrize(const Polynomial& b, int rank,
                                    Convention convention = Convention::prop,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
    return gysin_pushforward(b, full_flag_bundle(Family::A, rank, convention), true, cap);
}

// The Lagrange-Sylvester symmetrizer: the Grassmann bundle pushforward for
// the composition (k, n-k). The input must be S_k x S_{n-k} invariant.
inline Polynomial lagrange_sylvester(const Polynomial& b, int rank, int k,
                                     Convention convention = Convention::prop,
                                     bool require_invariance = true,
                                     std::uint64_t cap = kDefaultEnumerationCap) {
    if (k < 1 || k >= rank)
        throw unsupported_error("lagrange_sylvester: block size must satisfy 1 <= k <= n-1");
    return gysin_pushforward(b, BundleSpec{GroupSpec{Family::A, rank},
                                           Composition{{k, rank - k}}, convention},
                             require_invariance, cap);
}

// The generalized symmetrizing operator attached to (G, H): identical to the
// localization pushforward. For family A it coincides with the Grassmann /
// flag operators; families B/C are supported for the full flag and the
// trivial fiber.
inline Polynomial box_operator(const Polynomial& b, const BundleSpec& bundle,
                               bool require_invariance = true,
                               std::uint64_t cap = kDefaultEnumerationCap) {
    return gysin_pushforward(b, bundle, require_invariance, cap);
}

// Jacobi symmetrizer applied separately inside each block of the
// composition (family A). The output is W_H-invariant.
inline Polynomial block_jacobi(const Polynomial& b, const Composition& comp,
                               Convention convention = Convention::prop,
                               std::uint64_t cap = kDefaultEnumerationCap) {
    const GroupSpec spec{Family::A, comp.sum()};
    validate(spec, comp);
    if (b.nvars() != spec.rank) throw arity_error("block_jacobi: nvars must equal the rank");
    if (b.is_zero()) return b;
    const RootSystemData parab = parabolic_positive_roots(spec, comp);
    if (parab.positive.empty()) return b;  // all blocks trivial

    Polynomial num(spec.rank);
    for (const auto& h : parabolic_elements(spec, comp, cap)) {
        const Polynomial hb = act(h, b);
        num = sign(h) < 0 ? num - hb : num + hb;
    }
    if (num.is_zero()) return num;
    return exact_divide(num, euler_denominator(parab, RootSystemData{spec, {}}, convention));
}

// Pushforward computed through the intermediate flag: full Jacobi
// symmetrization factors as the block symmetrization followed by the
// Grassmann pushforward.
inline Polynomial pushforward_via_factorization(const Polynomial& b, int rank, int k,
                                                Convention convention = Convention::prop,
                                                std::uint64_t cap = kDefaultEnumerationCap) {
    if (k < 1 || k >= rank)
        throw unsupported_error("pushforward_via_factorization: 1 <= k <= n-1 required");
    const Polynomial inner = block_jacobi(b, Composition{{k, rank - k}}, convention, cap);
    if (inner.is_zero()) return inner;
    return lagrange_sylvester(inner, rank, k, convention, true, cap);
}

} // namespace gysin
