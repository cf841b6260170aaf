#pragma once

#include <set>
#include <vector>

#include "gysin/polynomial.hpp"
#include "gysin/weyl.hpp"

namespace gysin {

// A root as the integer linear form sum coeffs[i] * u_{i+1}. The
// characteristic map is modeled as the identity: a root IS its linear
// polynomial in the u-variables.
struct Root {
    std::vector<int> coeffs;

    int arity() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const Root&) const = default;
};

struct RootSystemData {
    GroupSpec spec;
    std::vector<Root> positive;
};

// Sign orientation of Euler-class denominators. prop takes each root as is,
// written (x_i - x_j) for i < j in family A; sym negates every root, giving
// the (x_j - x_i) orientation. The two differ by a global sign
// (-1)^(number of roots in the product).
enum class Convention { prop, sym };

inline const char* convention_name(Convention c) {
    return c == Convention::prop ? "prop" : "sym";
}

inline RootSystemData positive_roots(const GroupSpec& spec) {
    RootSystemData data{spec, {}};
    for (auto& v : detail::positive_root_coeffs(spec)) data.positive.push_back(Root{std::move(v)});
    return data;
}

// Positive roots of the parabolic subgroup H determined by the composition:
// the roots lying within its blocks. Families B/C support only H = T (empty
// set) and H = G (everything).
inline RootSystemData parabolic_positive_roots(const GroupSpec& spec, const Composition& comp) {
    validate(spec, comp);
    if (spec.family != Family::A) {
        if (comp.all_ones()) return RootSystemData{spec, {}};
        return positive_roots(spec);  // single part: H = G
    }
    const int n = spec.rank;
    RootSystemData data{spec, {}};
    for (const auto& [lo, hi] : comp.blocks()) {
        for (int i = lo; i < hi; ++i) {
            for (int j = i + 1; j < hi; ++j) {
                std::vector<int> v(static_cast<std::size_t>(n), 0);
                v[static_cast<std::size_t>(i)] = 1;
                v[static_cast<std::size_t>(j)] = -1;
                data.positive.push_back(Root{std::move(v)});
            }
        }
    }
    return data;
}

inline Polynomial root_to_linear(const Root& alpha) {
    Polynomial::TermMap terms;
    const int n = alpha.arity();
    for (int i = 0; i < n; ++i) {
        if (alpha.coeffs[static_cast<std::size_t>(i)] == 0) continue;
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        terms.emplace(Monomial(std::move(e)), Rational(alpha.coeffs[static_cast<std::size_t>(i)]));
    }
    return Polynomial::from_map(n, std::move(terms));
}

// The difference set "positive roots of G minus positive roots of H",
// validating the containment required of a parabolic subset.
inline std::vector<Root> complement_roots(const RootSystemData& delta,
                                          const RootSystemData& parabolic) {
    std::set<std::vector<int>> all;
    for (const auto& r : delta.positive) all.insert(r.coeffs);
    for (const auto& r : parabolic.positive)
        if (!all.count(r.coeffs))
            throw unsupported_error("parabolic roots are not contained in the positive roots");
    std::set<std::vector<int>> sub;
    for (const auto& r : parabolic.positive) sub.insert(r.coeffs);
    std::vector<Root> out;
    for (const auto& r : delta.positive)
        if (!sub.count(r.coeffs)) out.push_back(r);
    return out;
}

// Product over the complement roots of their linear forms, oriented by the
// convention. This is the equivariant Euler class at the identity coset.
inline Polynomial euler_denominator(const RootSystemData& delta, const RootSystemData& parabolic,
                                    Convention convention) {
    const int n = delta.spec.rank;
    Polynomial product = Polynomial::one(n);
    for (const auto& alpha : complement_roots(delta, parabolic)) {
        Polynomial lin = root_to_linear(alpha);
        product = product * (convention == Convention::sym ? -lin : lin);
    }
    return product;
}

} // namespace gysin
