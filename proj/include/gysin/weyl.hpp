#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "gysin/errors.hpp"
#include "gysin/polynomial.hpp"

namespace gysin {

// Classical group families. A is the symmetric group S_n; B and C share the
// signed-permutation (hyperoctahedral) group and differ only in root data.
enum class Family { A, B, C };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
    }
    return '?';
}

struct GroupSpec {
    Family family;
    int rank;

    bool operator==(const GroupSpec&) const = default;
};

inline void validate(const GroupSpec& spec) {
    if (spec.rank < 1) throw unsupported_error("GroupSpec: rank must be positive");
}

constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

namespace detail {

// factor <= cap is assumed; throws before the product can overflow.
inline std::uint64_t capped_multiply(std::uint64_t value, std::uint64_t factor,
                                     std::uint64_t cap) {
    if (factor != 0 && value > cap / factor)
        throw enumeration_cap_error("Weyl group enumeration exceeds the configured cap");
    return value * factor;
}

} // namespace detail

// |W|: n! for family A, 2^n * n! for B and C. Signals the cap instead of
// overflowing on large ranks.
inline std::uint64_t group_order(const GroupSpec& spec,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
    validate(spec);
    std::uint64_t order = 1;
    for (int i = 2; i <= spec.rank; ++i)
        order = detail::capped_multiply(order, static_cast<std::uint64_t>(i), cap);
    if (spec.family != Family::A)
        for (int i = 0; i < spec.rank; ++i) order = detail::capped_multiply(order, 2, cap);
    return order;
}

// A signed permutation w acting on polynomials by x_i -> sign[w(i)] * x_{w(i)}.
// The sign vector is indexed by the target coordinate, so in window notation
// w sends i to sign[w(i)] * w(i). Family A elements carry all-plus signs.
class WeylElement {
public:
    static WeylElement identity(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        return WeylElement(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    // perm holds 0-based images; signs holds +1/-1 per target coordinate.
    WeylElement(std::vector<int> perm, std::vector<int> signs)
        : perm_(std::move(perm)), signs_(std::move(signs)) {
        const int n = static_cast<int>(perm_.size());
        if (n < 1 || signs_.size() != perm_.size())
            throw std::invalid_argument("WeylElement: inconsistent data");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : perm_) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("WeylElement: perm is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("WeylElement: signs must be +1/-1");
    }

    int rank() const { return static_cast<int>(perm_.size()); }
    int image(int i) const { return perm_[static_cast<std::size_t>(i)]; }
    int sign_at(int target) const { return signs_[static_cast<std::size_t>(target)]; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (perm_[static_cast<std::size_t>(i)] != i || signs_[static_cast<std::size_t>(i)] != 1)
                return false;
        return true;
    }

    bool operator==(const WeylElement& o) const { return perm_ == o.perm_ && signs_ == o.signs_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const {
        if (perm_ != o.perm_) return perm_ < o.perm_;
        return signs_ < o.signs_;
    }

    // Window notation, e.g. "[2, -1, 3]".
    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rank(); ++i) {
            if (i) s += ", ";
            const int v = perm_[static_cast<std::size_t>(i)];
            s += std::to_string(signs_[static_cast<std::size_t>(v)] * (v + 1));
        }
        return s + "]";
    }

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

// Composition convention: act(v, act(w, p)) == act(compose(v, w), p), i.e.
// compose(v, w) is the map i -> v(w(i)) with the sign at target j being
// sign_v[j] * sign_w[v^{-1}(j)]. This is the one place the left/right
// bookkeeping of the substitution action is fixed; everything else follows.
inline WeylElement compose(const WeylElement& v, const WeylElement& w) {
    const int n = v.rank();
    if (w.rank() != n) throw arity_error("compose: rank mismatch");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<int> signs(static_cast<std::size_t>(n));
    std::vector<int> vinv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vinv[static_cast<std::size_t>(v.image(i))] = i;
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = v.image(w.image(i));
    for (int j = 0; j < n; ++j)
        signs[static_cast<std::size_t>(j)] =
            v.sign_at(j) * w.sign_at(vinv[static_cast<std::size_t>(j)]);
    return WeylElement(std::move(perm), std::move(signs));
}

inline WeylElement inverse(const WeylElement& w) {
    const int n = w.rank();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(w.image(i))] = i;
    for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = w.sign_at(w.image(i));
    return WeylElement(std::move(perm), std::move(signs));
}

// Substitutes x_i -> sign[w(i)] * x_{w(i)}, following the convention
// w . b(x_1, ..., x_n) = b(x_{w(1)}, ..., x_{w(n)}) extended by sign flips.
inline Polynomial act(const WeylElement& w, const Polynomial& p) {
    const int n = p.nvars();
    if (w.rank() != n) throw arity_error("act: rank does not match nvars");
    Polynomial::TermMap out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        bool negate = false;
        for (int i = 0; i < n; ++i) {
            const int j = w.image(i);
            e[static_cast<std::size_t>(j)] = m[i];
            if (w.sign_at(j) < 0 && (m[i] & 1)) negate = !negate;
        }
        out.emplace(Monomial(std::move(e)), negate ? -c : c);
    }
    return Polynomial::from_map(n, std::move(out));
}

// sign(w) = (-1)^length(w), computed as the determinant of the signed
// permutation matrix: permutation parity times the product of the signs.
inline int sign(const WeylElement& w) {
    const int n = w.rank();
    int s = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w.image(i) > w.image(j)) s = -s;
    for (int i = 0; i < n; ++i) s *= w.sign_at(i);
    return s;
}

namespace detail {

// Positive roots as integer coefficient vectors, in a fixed deterministic
// order. Family A: e_i - e_j (i < j). Families B/C additionally e_i + e_j,
// plus the short roots e_i (B) or long roots 2e_i (C).
inline std::vector<std::vector<int>> positive_root_coeffs(const GroupSpec& spec) {
    validate(spec);
    const int n = spec.rank;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> minus(static_cast<std::size_t>(n), 0);
            minus[static_cast<std::size_t>(i)] = 1;
            minus[static_cast<std::size_t>(j)] = -1;
            roots.push_back(std::move(minus));
            if (spec.family != Family::A) {
                std::vector<int> plus(static_cast<std::size_t>(n), 0);
                plus[static_cast<std::size_t>(i)] = 1;
                plus[static_cast<std::size_t>(j)] = 1;
                roots.push_back(std::move(plus));
            }
        }
    }
    if (spec.family != Family::A) {
        const int scale = spec.family == Family::C ? 2 : 1;
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = scale;
            roots.push_back(std::move(v));
        }
    }
    return roots;
}

// Image of the linear form sum c_i x_i under w.
inline std::vector<int> apply_to_linear(const WeylElement& w, const std::vector<int>& coeffs) {
    std::vector<int> out(coeffs.size(), 0);
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
        const int j = w.image(i);
        out[static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(i)] * w.sign_at(j);
    }
    return out;
}

// Every root image is plus or minus a positive root; positivity is read off
// the first nonzero coefficient.
inline bool first_nonzero_negative(const std::vector<int>& v) {
    for (int c : v) {
        if (c > 0) return false;
        if (c < 0) return true;
    }
    return false;
}

} // namespace detail

// Coxeter length: the number of positive roots sent to negative roots.
// For family A this is the inversion count of the permutation.
inline int length(const WeylElement& w, const GroupSpec& spec) {
    if (w.rank() != spec.rank) throw arity_error("length: rank mismatch");
    int count = 0;
    for (const auto& alpha : detail::positive_root_coeffs(spec))
        if (detail::first_nonzero_negative(detail::apply_to_linear(w, alpha))) ++count;
    return count;
}

// All group elements, each exactly once, in a deterministic order:
// permutations lexicographically, sign vectors in binary counting order
// (families B/C). Throws when |W| exceeds the cap.
inline std::vector<WeylElement> enumerate(const GroupSpec& spec,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    const std::uint64_t order = group_order(spec, cap);
    const int n = spec.rank;
    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(order));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (spec.family == Family::A) {
            out.emplace_back(perm, std::vector<int>(static_cast<std::size_t>(n), 1));
        } else {
            const std::uint64_t masks = std::uint64_t{1} << n;
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                std::vector<int> signs(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                out.emplace_back(perm, std::move(signs));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Composition (k_1, ..., k_r) of the rank, determining the parabolic
// subgroup W_H = S_{k_1} x ... x S_{k_r} in family A. For families B/C only
// the two extremes are supported: all parts 1 (H = T) and a single part
// (H = G).
struct Composition {
    std::vector<int> parts;

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool all_ones() const {
        return std::all_of(parts.begin(), parts.end(), [](int k) { return k == 1; });
    }
    bool single_part() const { return parts.size() == 1; }

    // Half-open index ranges [lo, hi) of each block, 0-based.
    std::vector<std::pair<int, int>> blocks() const {
        std::vector<std::pair<int, int>> b;
        int lo = 0;
        for (int k : parts) {
            b.emplace_back(lo, lo + k);
            lo += k;
        }
        return b;
    }

    bool operator==(const Composition&) const = default;
};

inline void validate(const GroupSpec& spec, const Composition& comp) {
    validate(spec);
    if (comp.parts.empty()) throw unsupported_error("Composition: no parts");
    for (int k : comp.parts)
        if (k < 1) throw unsupported_error("Composition: parts must be positive");
    if (comp.sum() != spec.rank)
        throw unsupported_error("Composition: parts must sum to the rank");
    if (spec.family != Family::A && !comp.all_ones() && !comp.single_part())
        throw unsupported_error(
            "families B/C support only the full flag (1,...,1) and the trivial bundle (n)");
}

// Generators of the parabolic subgroup W_H: adjacent transpositions inside
// each block, plus the last-coordinate sign flip when H = G in families B/C.
inline std::vector<WeylElement> parabolic_generators(const GroupSpec& spec,
                                                     const Composition& comp) {
    validate(spec, comp);
    const int n = spec.rank;
    std::vector<WeylElement> gens;
    for (const auto& [lo, hi] : comp.blocks()) {
        for (int i = lo; i + 1 < hi; ++i) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
            gens.emplace_back(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1));
        }
    }
    if (spec.family != Family::A && comp.single_part()) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> signs(static_cast<std::size_t>(n), 1);
        signs[static_cast<std::size_t>(n - 1)] = -1;
        gens.emplace_back(std::move(perm), std::move(signs));
    }
    return gens;
}

// All elements of W_H, embedded in W_G. Used for block symmetrizations.
inline std::vector<WeylElement> parabolic_elements(const GroupSpec& spec, const Composition& comp,
                                                   std::uint64_t cap = kDefaultEnumerationCap) {
    validate(spec, comp);
    if (spec.family != Family::A) {
        if (comp.all_ones()) return {WeylElement::identity(spec.rank)};
        return enumerate(spec, cap);
    }
    const int n = spec.rank;
    std::uint64_t count = 1;
    for (int k : comp.parts)
        for (int i = 2; i <= k; ++i)
            count = detail::capped_multiply(count, static_cast<std::uint64_t>(i), cap);
    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const auto blocks = comp.blocks();

    // Odometer over per-block permutations.
    std::vector<std::vector<int>> block_perm;
    for (const auto& [lo, hi] : blocks) {
        std::vector<int> ids(static_cast<std::size_t>(hi - lo));
        std::iota(ids.begin(), ids.end(), lo);
        block_perm.push_back(std::move(ids));
    }
    while (true) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const int lo = blocks[b].first;
            for (std::size_t t = 0; t < block_perm[b].size(); ++t)
                p[static_cast<std::size_t>(lo) + t] = block_perm[b][t];
        }
        out.emplace_back(std::move(p), std::vector<int>(static_cast<std::size_t>(n), 1));
        std::size_t b = 0;
        while (b < block_perm.size() &&
               !std::next_permutation(block_perm[b].begin(), block_perm[b].end()))
            ++b;
        if (b == block_perm.size()) break;
    }
    return out;
}

// Minimal-length representatives of the left cosets w W_H, one per coset.
// In family A these are the permutations increasing within each block; they
// are built directly by distributing values over blocks.
inline std::vector<WeylElement> coset_reps(const GroupSpec& spec, const Composition& comp,
                                           std::uint64_t cap = kDefaultEnumerationCap) {
    validate(spec, comp);
    const int n = spec.rank;
    if (spec.family != Family::A) {
        if (comp.single_part()) return {WeylElement::identity(n)};
        return enumerate(spec, cap);  // H = T: every element is its own coset
    }

    std::uint64_t count = 1;  // multinomial n! / (k_1! ... k_r!)
    {
        int used = 0;
        for (int k : comp.parts) {
            for (int i = 1; i <= k; ++i) {
                // binomial recurrence: count * (used + i) is always divisible by i
                const auto factor = static_cast<std::uint64_t>(used + i);
                if (count > std::numeric_limits<std::uint64_t>::max() / factor)
                    throw enumeration_cap_error("coset enumeration exceeds the configured cap");
                count = count * factor / static_cast<std::uint64_t>(i);
                if (count > cap)
                    throw enumeration_cap_error("coset enumeration exceeds the configured cap");
            }
            used += k;
        }
    }

    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(count));
    const auto blocks = comp.blocks();
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);

    auto place = [&](auto&& self, std::size_t block_index, std::vector<int>& avail) -> void {
        if (block_index == blocks.size()) {
            out.emplace_back(perm, std::vector<int>(static_cast<std::size_t>(n), 1));
            return;
        }
        const auto [lo, hi] = blocks[block_index];
        const int k = hi - lo;
        const int m = static_cast<int>(avail.size());
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> rest;
            rest.reserve(static_cast<std::size_t>(m - k));
            {
                std::size_t t = 0;
                for (int i = 0; i < m; ++i) {
                    if (t < pick.size() && pick[t] == i) {
                        perm[static_cast<std::size_t>(lo) + t] = avail[static_cast<std::size_t>(i)];
                        ++t;
                    } else {
                        rest.push_back(avail[static_cast<std::size_t>(i)]);
                    }
                }
            }
            self(self, block_index + 1, rest);

            // next k-combination of {0..m-1} in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    };
    place(place, 0, remaining);
    return out;
}

// True iff p is fixed by every generator of the parabolic subgroup W_H.
inline bool is_invariant(const Polynomial& p, const GroupSpec& spec, const Composition& comp) {
    if (p.nvars() != spec.rank) throw arity_error("is_invariant: nvars must equal rank");
    for (const auto& g : parabolic_generators(spec, comp))
        if (act(g, p) != p) return false;
    return true;
}

// Full Weyl group invariance, i.e. W_H = W_G.
inline bool is_invariant(const Polynomial& p, const GroupSpec& spec) {
    return is_invariant(p, spec, Composition{{spec.rank}});
}

} // namespace gysin
