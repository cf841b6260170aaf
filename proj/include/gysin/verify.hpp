#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gysin/expr.hpp"
#include "gysin/pushforward.hpp"
#include "gysin/schubert.hpp"

namespace gysin {

// Knobs for the verification suite. The per-criterion rank bounds are fixed
// here; max_rank and max_degree clamp them downward for quicker partial runs.
struct VerifyOptions {
    int max_rank = 6;
    int max_degree = 6;
    Convention convention = Convention::prop;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t seed = 987654321;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational() {
        int num = uniform(-9, 9);
        if (num == 0) num = 1;
        return Rational(num, uniform(1, 4));
    }

    Monomial monomial(int nvars, std::int64_t degree) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(nvars), 0);
        std::int64_t left = degree;
        for (int i = 0; i + 1 < nvars; ++i) {
            const std::int64_t v = uniform(0, static_cast<int>(left));
            e[static_cast<std::size_t>(uniform(0, nvars - 1))] += v;
            left -= v;
        }
        e[static_cast<std::size_t>(uniform(0, nvars - 1))] += left;
        return Monomial(std::move(e));
    }

    Polynomial polynomial(int nvars, int max_degree, int terms) {
        Polynomial p(nvars);
        for (int t = 0; t < terms; ++t) {
            const auto deg = static_cast<std::int64_t>(uniform(0, max_degree));
            p = p + Polynomial::from_monomial(monomial(nvars, deg), rational());
        }
        return p;
    }

    Polynomial homogeneous(int nvars, std::int64_t degree, int terms) {
        Polynomial p(nvars);
        for (int t = 0; t < terms; ++t)
            p = p + Polynomial::from_monomial(monomial(nvars, degree), rational());
        return p;
    }

private:
    std::mt19937_64 eng_;
};

// Sum of the W_H-orbit of p: always W_H-invariant, never leaves the ring.
inline Polynomial symmetrize_parabolic(const Polynomial& p, const GroupSpec& spec,
                                       const Composition& comp) {
    Polynomial out(p.nvars());
    for (const auto& h : parabolic_elements(spec, comp)) out = out + act(h, p);
    return out;
}

// All partitions of weight <= max_weight with at most max_parts parts,
// including the empty partition.
inline std::vector<Partition> partitions_up_to(std::int64_t max_weight, int max_parts) {
    std::vector<Partition> out;
    std::vector<std::int64_t> parts;
    auto rec = [&](auto&& self, std::int64_t left, std::int64_t max_part) -> void {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (std::int64_t p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    return out;
}

inline int convention_sign(Convention c, int root_count) {
    return c == Convention::sym && (root_count & 1) ? -1 : 1;
}

inline PropertyResult criterion_schur(const VerifyOptions& o) {
    PropertyResult r{"schur-identity", true, ""};
    int checked = 0;
    const int top = std::min(4, o.max_rank);
    for (int n = 2; n <= top; ++n) {
        const int m = n * (n - 1) / 2;
        for (const auto& lambda : partitions_up_to(std::min<std::int64_t>(6, o.max_degree), n)) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                const std::int64_t part = i < static_cast<int>(lambda.parts.size())
                                              ? lambda.parts[static_cast<std::size_t>(i)]
                                              : 0;
                e[static_cast<std::size_t>(i)] = part + (n - 1 - i);
            }
            const Polynomial staircase =
                Polynomial::from_monomial(Monomial(std::move(e)), Rational(1));
            const Polynomial got = jacobi_symmetrize(staircase, n, o.convention);
            Polynomial expected = schur_bialternant(lambda, n);
            if (convention_sign(o.convention, m) < 0) expected = -expected;
            ++checked;
            if (got != expected) {
                r.passed = false;
                r.detail = "mismatch at n=" + std::to_string(n) + ", lambda weight " +
                           std::to_string(lambda.weight());
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " Schur identities verified";
    return r;
}

inline PropertyResult criterion_segre(const VerifyOptions& o) {
    PropertyResult r{"segre-identity", true, ""};
    int checked = 0;
    const int top = std::min(6, o.max_rank);
    for (int n = 2; n <= top; ++n) {
        for (std::int64_t j = 0; j <= 4; ++j) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
            e[0] = n - 1 + j;
            const Polynomial power = Polynomial::from_monomial(Monomial(std::move(e)), Rational(1));
            const Polynomial got = lagrange_sylvester(power, n, 1, o.convention);
            Polynomial expected = complete_homogeneous(j, n);
            if (convention_sign(o.convention, n - 1) < 0) expected = -expected;
            ++checked;
            if (got != expected) {
                r.passed = false;
                r.detail = "mismatch at n=" + std::to_string(n) + ", j=" + std::to_string(j);
                return r;
            }
        }
        if (o.convention == Convention::prop && !segre_check(n, 4).all_pass) {
            r.passed = false;
            r.detail = "segre_check report disagrees at n=" + std::to_string(n);
            return r;
        }
    }
    r.detail = std::to_string(checked) + " Segre identities verified";
    return r;
}

inline PropertyResult criterion_two_form(const VerifyOptions& o) {
    PropertyResult r{"two-form-agreement", true, ""};
    Rng rng(o.seed + 3);
    const int top = std::min(4, o.max_rank);
    const int degree_cap = std::min(6, o.max_degree);
    for (int s = 0; s < 100; ++s) {
        GroupSpec spec{Family::A, 2 + s % std::max(1, top - 1)};
        if (s % 10 == 9 && o.max_rank >= 2) spec = GroupSpec{Family::B, 2};
        const BundleSpec bundle = full_flag_bundle(spec.family, spec.rank, o.convention);
        const Polynomial b = rng.polynomial(spec.rank, degree_cap, rng.uniform(1, 6));

        std::vector<FixedPointDatum> data;
        for (const auto& w : enumerate(spec, o.enumeration_cap))
            data.push_back(FixedPointDatum{restriction_at(w, b, bundle), euler_at(w, bundle)});
        const Polynomial generic = localization_sum(data);
        const Polynomial closed = gysin_pushforward(b, bundle);
        if (generic != closed) {
            r.passed = false;
            r.detail = "forms disagree at sample " + std::to_string(s);
            return r;
        }
    }
    r.detail = "100 random classes agree between the fraction-sum and closed-numerator forms";
    return r;
}

inline PropertyResult criterion_polynomiality_invariance(const VerifyOptions& o) {
    PropertyResult r{"polynomiality-invariance", true, ""};
    Rng rng(o.seed + 4);
    int outputs = 0;
    const int top = std::min(4, o.max_rank);
    const int degree_cap = std::min(6, o.max_degree);
    try {
        for (int s = 0; s < 40; ++s) {
            const int n = 2 + s % std::max(1, top - 1);
            const GroupSpec spec{Family::A, n};
            const Polynomial b = rng.polynomial(n, degree_cap, rng.uniform(1, 6));

            const Polynomial full = jacobi_symmetrize(b, n, o.convention);
            ++outputs;
            if (!is_invariant(full, spec)) {
                r.passed = false;
                r.detail = "flag output not invariant at sample " + std::to_string(s);
                return r;
            }
            for (int k = 1; k < n; ++k) {
                const Composition comp{{k, n - k}};
                const Polynomial inv = symmetrize_parabolic(b, spec, comp);
                const Polynomial out = lagrange_sylvester(inv, n, k, o.convention);
                ++outputs;
                if (!is_invariant(out, spec)) {
                    r.passed = false;
                    r.detail = "Grassmann output not invariant at sample " + std::to_string(s) +
                               ", k=" + std::to_string(k);
                    return r;
                }
            }
            if (o.max_rank >= 2) {
                for (Family fam : {Family::B, Family::C}) {
                    const int nb = 2;
                    const Polynomial bb = rng.polynomial(nb, degree_cap, rng.uniform(1, 5));
                    const Polynomial out =
                        box_operator(bb, full_flag_bundle(fam, nb, o.convention));
                    ++outputs;
                    if (!is_invariant(out, GroupSpec{fam, nb})) {
                        r.passed = false;
                        r.detail = "signed-family output not invariant at sample " +
                                   std::to_string(s);
                        return r;
                    }
                }
            }
        }
    } catch (const not_divisible_error&) {
        r.passed = false;
        r.detail = "an operator output failed exact division";
        return r;
    }
    r.detail = std::to_string(outputs) + " operator outputs polynomial and W-invariant";
    return r;
}

inline PropertyResult criterion_degree_law(const VerifyOptions& o) {
    PropertyResult r{"degree-law", true, ""};
    Rng rng(o.seed + 5);
    int checked = 0;
    const int top = std::min(4, o.max_rank);

    auto check_output = [&](const Polynomial& out, std::int64_t input_degree, int m,
                            const std::string& where) {
        ++checked;
        if (input_degree < m) {
            if (!out.is_zero()) {
                r.passed = false;
                r.detail = "nonzero output below the degree threshold (" + where + ")";
            }
            return;
        }
        if (!out.is_zero() && out.degree() != input_degree - m) {
            r.passed = false;
            r.detail = "wrong output degree (" + where + ")";
        }
    };

    for (int s = 0; s < 30 && r.passed; ++s) {
        const int n = 2 + s % std::max(1, top - 1);
        const GroupSpec spec{Family::A, n};
        const int m_full = n * (n - 1) / 2;
        for (std::int64_t d = std::max<std::int64_t>(0, m_full - 2); d <= m_full + 3 && r.passed;
             ++d) {
            const Polynomial b = rng.homogeneous(n, d, rng.uniform(1, 5));
            if (b.is_zero()) continue;
            check_output(jacobi_symmetrize(b, n, o.convention), d, m_full, "flag");
        }
        for (int k = 1; k < n && r.passed; ++k) {
            const Composition comp{{k, n - k}};
            const int m = k * (n - k);
            for (std::int64_t d = std::max<std::int64_t>(0, m - 2); d <= m + 3 && r.passed; ++d) {
                const Polynomial raw = rng.homogeneous(n, d, rng.uniform(1, 5));
                const Polynomial b = symmetrize_parabolic(raw, spec, comp);
                if (b.is_zero()) continue;
                check_output(lagrange_sylvester(b, n, k, o.convention), d, m, "grassmann");
            }
        }
        if (o.max_rank >= 2) {
            const GroupSpec bspec{s % 2 ? Family::B : Family::C, 2};
            const int m = 4;
            for (std::int64_t d = 2; d <= m + 3 && r.passed; ++d) {
                const Polynomial b = rng.homogeneous(2, d, rng.uniform(1, 4));
                if (b.is_zero()) continue;
                check_output(box_operator(b, full_flag_bundle(bspec.family, 2, o.convention)), d,
                             m, "signed");
            }
        }
    }
    if (r.passed) r.detail = std::to_string(checked) + " degree checks passed";
    return r;
}

inline PropertyResult criterion_functoriality(const VerifyOptions& o) {
    PropertyResult r{"functoriality", true, ""};
    Rng rng(o.seed + 6);
    int checked = 0;
    const int top = std::min(5, o.max_rank);
    for (int s = 0; s < 50; ++s) {
        const int n = 2 + s % std::max(1, top - 1);
        const int m_full = n * (n - 1) / 2;
        const int degree = rng.uniform(0, m_full + 3);
        const Polynomial b = rng.polynomial(n, degree, rng.uniform(1, 6));
        const Polynomial direct = jacobi_symmetrize(b, n, o.convention);
        for (int k = 1; k < n; ++k) {
            const Polynomial factored = pushforward_via_factorization(b, n, k, o.convention);
            ++checked;
            if (direct != factored) {
                r.passed = false;
                r.detail = "factorization disagrees at sample " + std::to_string(s) +
                           ", k=" + std::to_string(k);
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " factorization identities verified";
    return r;
}

inline PropertyResult criterion_divided_difference(const VerifyOptions& o) {
    PropertyResult r{"divided-difference-oracle", true, ""};
    Rng rng(o.seed + 7);
    const int top = std::min(4, o.max_rank);
    for (int s = 0; s < 50; ++s) {
        const int n = 2 + s % std::max(1, top - 1);
        const Polynomial b = rng.polynomial(n, std::min(6, o.max_degree), rng.uniform(1, 6));
        Polynomial expected = jacobi_via_divided_differences(b, n);
        if (convention_sign(o.convention, n * (n - 1) / 2) < 0) expected = -expected;
        if (jacobi_symmetrize(b, n, o.convention) != expected) {
            r.passed = false;
            r.detail = "oracle disagrees at sample " + std::to_string(s);
            return r;
        }
    }
    r.detail = "50 random classes agree with the divided-difference composition";
    return r;
}

inline PropertyResult criterion_weyl_structure(const VerifyOptions& o) {
    PropertyResult r{"weyl-structure", true, ""};
    int checked = 0;
    std::uint64_t factorial = 1;
    for (int n = 1; n <= std::min(6, o.max_rank); ++n) {
        factorial *= static_cast<std::uint64_t>(n);
        const GroupSpec spec{Family::A, n};
        const auto elems = enumerate(spec, o.enumeration_cap);
        ++checked;
        if (elems.size() != factorial) {
            r.passed = false;
            r.detail = "|W(A" + std::to_string(n) + ")| wrong";
            return r;
        }
        for (const auto& w : elems) {
            if (((length(w, spec) & 1) ? -1 : 1) != sign(w)) {
                r.passed = false;
                r.detail = "sign/length parity mismatch in A" + std::to_string(n);
                return r;
            }
        }
        for (int k = 1; k < n; ++k) {
            std::uint64_t binom = 1;
            for (int i = 1; i <= k; ++i)
                binom = binom * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
            ++checked;
            if (coset_reps(spec, Composition{{k, n - k}}, o.enumeration_cap).size() != binom) {
                r.passed = false;
                r.detail = "coset count wrong for (A," + std::to_string(n) + "), k=" +
                           std::to_string(k);
                return r;
            }
        }
        if (n >= 3) {
            std::vector<int> parts{1, 1, n - 2};
            std::uint64_t expected = factorial;
            std::uint64_t block = 1;
            for (int i = 2; i <= n - 2; ++i) block *= static_cast<std::uint64_t>(i);
            expected /= block;
            ++checked;
            if (coset_reps(spec, Composition{parts}, o.enumeration_cap).size() != expected) {
                r.passed = false;
                r.detail = "multi-block coset count wrong at n=" + std::to_string(n);
                return r;
            }
        }
    }
    std::uint64_t signed_order = 1;
    for (int n = 1; n <= std::min(4, o.max_rank); ++n) {
        signed_order *= static_cast<std::uint64_t>(2 * n);
        for (Family fam : {Family::B, Family::C}) {
            const GroupSpec spec{fam, n};
            const auto elems = enumerate(spec, o.enumeration_cap);
            ++checked;
            if (elems.size() != signed_order) {
                r.passed = false;
                r.detail = "|W| wrong for signed family at n=" + std::to_string(n);
                return r;
            }
            for (const auto& w : elems) {
                if (((length(w, spec) & 1) ? -1 : 1) != sign(w)) {
                    r.passed = false;
                    r.detail = "sign/length parity mismatch in signed family, n=" +
                               std::to_string(n);
                    return r;
                }
            }
        }
    }
    r.detail = std::to_string(checked) + " structural counts verified";
    return r;
}

inline PropertyResult criterion_convention_relation(const VerifyOptions& o) {
    PropertyResult r{"convention-relation", true, ""};
    Rng rng(o.seed + 9);
    int checked = 0;
    const int top = std::min(4, o.max_rank);
    for (int s = 0; s < 20; ++s) {
        const int n = 2 + s % std::max(1, top - 1);
        const GroupSpec spec{Family::A, n};
        const Polynomial b = rng.polynomial(n, std::min(6, o.max_degree), rng.uniform(1, 6));

        const int m_full = n * (n - 1) / 2;
        Polynomial prop_out = jacobi_symmetrize(b, n, Convention::prop);
        Polynomial sym_out = jacobi_symmetrize(b, n, Convention::sym);
        ++checked;
        if (prop_out != ((m_full & 1) ? -sym_out : sym_out)) {
            r.passed = false;
            r.detail = "flag relation fails at sample " + std::to_string(s);
            return r;
        }
        for (int k = 1; k < n; ++k) {
            const Composition comp{{k, n - k}};
            const Polynomial inv = symmetrize_parabolic(b, spec, comp);
            const int m = k * (n - k);
            prop_out = lagrange_sylvester(inv, n, k, Convention::prop);
            sym_out = lagrange_sylvester(inv, n, k, Convention::sym);
            ++checked;
            if (prop_out != ((m & 1) ? -sym_out : sym_out)) {
                r.passed = false;
                r.detail = "Grassmann relation fails at sample " + std::to_string(s);
                return r;
            }
        }
        if (o.max_rank >= 2) {
            const Polynomial bb = rng.polynomial(2, std::min(6, o.max_degree), rng.uniform(1, 4));
            prop_out = box_operator(bb, full_flag_bundle(Family::B, 2, Convention::prop));
            sym_out = box_operator(bb, full_flag_bundle(Family::B, 2, Convention::sym));
            ++checked;
            if (prop_out != sym_out) {  // m = 4 is even
                r.passed = false;
                r.detail = "signed-family relation fails at sample " + std::to_string(s);
                return r;
            }
        }
    }
    r.detail = std::to_string(checked) + " convention relations verified";
    return r;
}

inline PropertyResult criterion_round_trip(const VerifyOptions& o) {
    PropertyResult r{"parser-round-trip", true, ""};
    Rng rng(o.seed + 10);
    const char alphabets[3] = {'x', 'u', 'a'};
    for (int s = 0; s < 200; ++s) {
        const int n = 1 + s % std::min(4, std::max(1, o.max_rank));
        const Polynomial p = rng.polynomial(n, std::min(6, o.max_degree), rng.uniform(0, 6));
        const char alpha = alphabets[s % 3];
        if (parse(print(p, alpha), n) != p) {
            r.passed = false;
            r.detail = "round trip fails at sample " + std::to_string(s);
            return r;
        }
    }

    const auto positioned = [](const char* text, int nvars) {
        try {
            parse(text, nvars);
            return false;
        } catch (const parse_error& e) {
            return e.line() >= 1 && e.column() >= 1;
        }
    };
    if (!positioned("x1 + + x2", 2) || !positioned("x0", 2) ||
        !positioned("x1^2147483648", 2)) {
        r.passed = false;
        r.detail = "a documented parse error is missing its position";
        return r;
    }
    r.detail = "200 round trips and 3 positioned errors verified";
    return r;
}

} // namespace detail

// Runs the whole verification suite. Each entry corresponds to one
// acceptance property; failures are reported, never thrown.
inline std::vector<PropertyResult> run_verification(const VerifyOptions& options = {}) {
    using Criterion = PropertyResult (*)(const VerifyOptions&);
    const Criterion criteria[] = {
        detail::criterion_schur,
        detail::criterion_segre,
        detail::criterion_two_form,
        detail::criterion_polynomiality_invariance,
        detail::criterion_degree_law,
        detail::criterion_functoriality,
        detail::criterion_divided_difference,
        detail::criterion_weyl_structure,
        detail::criterion_convention_relation,
        detail::criterion_round_trip,
    };
    std::vector<PropertyResult> results;
    for (const auto& criterion : criteria) {
        try {
            results.push_back(criterion(options));
        } catch (const std::exception& e) {
            results.push_back(PropertyResult{"(criterion aborted)", false, e.what()});
        }
    }
    return results;
}

} // namespace gysin
