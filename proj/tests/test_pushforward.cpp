#include <catch2/catch_amalgamated.hpp>

#include "gysin/pushforward.hpp"
#include "gysin/schubert.hpp"
#include "testutil.hpp"

using namespace gysin;
using testutil::P;
using testutil::Rng;

namespace {

// Independent brute-force oracle: sum w.(b / denominator) term by term in
// the unreduced fraction field, then certify. Used to pin expected values
// without going through the engine's summation strategies.
Polynomial brute_force_sum(const Polynomial& b, const std::vector<WeylElement>& elements,
                           const Polynomial& denominator) {
    RationalFunction total = RationalFunction::from_polynomial(Polynomial::zero(b.nvars()));
    for (const auto& w : elements)
        total = frac_add(total, RationalFunction(act(w, b), act(w, denominator)));
    return frac_to_polynomial(total);
}

} // namespace

TEST_CASE("restriction at a fixed point") {
    const auto full3 = full_flag_bundle(Family::A, 3);
    const WeylElement s1({1, 0, 2}, {1, 1, 1});
    CHECK(restriction_at(s1, P("u1", 3), full3) == P("u2", 3));

    Rng rng(31);
    const auto b = rng.polynomial(3, 4, 4);
    CHECK(restriction_at(WeylElement::identity(3), b, full3) == b);

    const BundleSpec partial{GroupSpec{Family::A, 3}, Composition{{1, 2}}, Convention::prop};
    const WeylElement cyclic({1, 2, 0}, {1, 1, 1});
    CHECK(restriction_at(cyclic, P("u1*(u2 + u3)", 3), partial) == P("u2*(u3 + u1)", 3));
    CHECK_THROWS_AS(restriction_at(cyclic, P("u2", 3), partial), invariance_error);
}

TEST_CASE("euler class at a fixed point") {
    const auto full2 = full_flag_bundle(Family::A, 2);
    CHECK(euler_at(WeylElement::identity(2), full2) == P("u1 - u2", 2));
    const WeylElement s1({1, 0}, {1, 1});
    CHECK(euler_at(s1, full2) == P("u2 - u1", 2));
    CHECK(euler_at(s1, full2) == -euler_at(WeylElement::identity(2), full2));  // (-1)^w

    const BundleSpec partial{GroupSpec{Family::A, 3}, Composition{{1, 2}}, Convention::prop};
    const WeylElement send1to2({1, 0, 2}, {1, 1, 1});
    CHECK(euler_at(send1to2, partial) == P("(u2 - u1)*(u2 - u3)", 3));
}

TEST_CASE("localization sums") {
    {
        std::vector<FixedPointDatum> data{{P("x1", 2), P("x1 - x2", 2)},
                                          {P("x2", 2), P("x2 - x1", 2)}};
        CHECK(localization_sum(data) == Polynomial::one(2));
    }
    {
        std::vector<FixedPointDatum> data{{Polynomial::one(2), P("x1 - x2", 2)},
                                          {Polynomial::one(2), P("x2 - x1", 2)}};
        CHECK(localization_sum(data).is_zero());
    }
    {
        Rng rng(32);
        const auto p = rng.polynomial(2, 4, 4);
        std::vector<FixedPointDatum> data{{p, Polynomial::one(2)}};
        CHECK(localization_sum(data) == p);  // point fiber
    }
    {
        std::vector<FixedPointDatum> data{{P("x1", 2), P("x1 - x2", 2)}};
        CHECK_THROWS_AS(localization_sum(data), not_divisible_error);  // single pole
    }
    {
        std::vector<FixedPointDatum> data{{P("x1", 2), Polynomial::zero(2)}};
        CHECK_THROWS_AS(localization_sum(data), std::domain_error);
    }
}

TEST_CASE("grassmann pushforward examples") {
    const BundleSpec bundle{GroupSpec{Family::A, 3}, Composition{{1, 2}}, Convention::prop};
    CHECK(gysin_pushforward(P("x1^3", 3), bundle) == P("x1 + x2 + x3", 3));
    CHECK(gysin_pushforward(P("x1^2", 3), bundle) == Polynomial::one(3));
    CHECK(gysin_pushforward(Polynomial::one(3), bundle).is_zero());  // degree drop
    CHECK_THROWS_AS(gysin_pushforward(P("x2", 3), bundle), invariance_error);

    // expert escape hatch: the invariance check is skipped, so the failure
    // surfaces as non-polynomiality instead of a precondition error
    CHECK_THROWS_AS(gysin_pushforward(P("x2", 3), bundle, false), not_divisible_error);
    CHECK(gysin_pushforward(P("x1^3", 3), bundle, false) ==
          gysin_pushforward(P("x1^3", 3), bundle));

    // point fiber: H = G
    const BundleSpec trivial{GroupSpec{Family::A, 3}, Composition{{3}}, Convention::prop};
    const auto sym = P("x1 + x2 + x3", 3);
    CHECK(gysin_pushforward(sym, trivial) == sym);
}

TEST_CASE("jacobi symmetrizer examples") {
    CHECK(jacobi_symmetrize(P("x1", 2), 2) == Polynomial::one(2));
    CHECK(jacobi_symmetrize(P("x1^2", 2), 2) == P("x1 + x2", 2));
    CHECK(jacobi_symmetrize(P("x1^2*x2", 2), 2) == P("x1*x2", 2));
    CHECK(jacobi_symmetrize(Polynomial::one(2), 2).is_zero());
    CHECK(jacobi_symmetrize(P("x1", 1), 1) == P("x1", 1));  // rank 1: identity
}

TEST_CASE("lagrange-sylvester examples") {
    CHECK(lagrange_sylvester(P("x1", 2), 2, 1) == Polynomial::one(2));
    CHECK(lagrange_sylvester(P("x1^3", 3), 3, 1) == P("x1 + x2 + x3", 3));
    CHECK(lagrange_sylvester(P("x1*x2", 3), 3, 2) == Polynomial::one(3));
    CHECK_THROWS_AS(lagrange_sylvester(P("x1", 3), 3, 3), unsupported_error);
    CHECK_THROWS_AS(lagrange_sylvester(P("x2", 3), 3, 1), invariance_error);
}

TEST_CASE("generic fraction sum agrees with the engine") {
    Rng rng(33);
    for (Family fam : {Family::A, Family::B}) {
        const int n = fam == Family::A ? 3 : 2;
        const BundleSpec bundle = full_flag_bundle(fam, n);
        const auto elements = enumerate(bundle.group);
        for (int t = 0; t < 10; ++t) {
            const auto b = rng.polynomial(n, 5, 4);
            std::vector<FixedPointDatum> data;
            for (const auto& w : elements)
                data.push_back({restriction_at(w, b, bundle), euler_at(w, bundle)});
            CHECK(localization_sum(data) == gysin_pushforward(b, bundle));
        }
    }

    // partial flag: distinct denominators, compared against the brute force
    const BundleSpec partial{GroupSpec{Family::A, 4}, Composition{{2, 2}}, Convention::prop};
    const auto reps = coset_reps(partial.group, partial.fiber);
    const auto denominator =
        euler_denominator(positive_roots(partial.group),
                          parabolic_positive_roots(partial.group, partial.fiber),
                          Convention::prop);
    for (int t = 0; t < 3; ++t) {
        const auto b = gysin::detail::symmetrize_parabolic(rng.polynomial(4, 5, 4),
                                                           partial.group, partial.fiber);
        CHECK(gysin_pushforward(b, partial) == brute_force_sum(b, reps, denominator));
    }
}

TEST_CASE("box operator on signed families") {
    const BundleSpec b1 = full_flag_bundle(Family::B, 1);
    const auto elements = enumerate(b1.group);
    const auto rho = euler_denominator(positive_roots(b1.group),
                                       parabolic_positive_roots(b1.group, b1.fiber),
                                       Convention::prop);
    REQUIRE(rho == P("x1", 1));

    // pinned by the two-term brute-force fraction sum
    CHECK(brute_force_sum(P("x1^2", 1), elements, rho).is_zero());
    CHECK(brute_force_sum(P("x1^3", 1), elements, rho) == P("2*x1^2", 1));

    CHECK(box_operator(P("x1^2", 1), b1).is_zero());
    CHECK(box_operator(P("x1^3", 1), b1) == P("2*x1^2", 1));
    CHECK(box_operator(P("x1", 1), b1) == P("2", 1));

    const BundleSpec b1_sym = full_flag_bundle(Family::B, 1, Convention::sym);
    CHECK(box_operator(P("x1^2", 1), b1_sym).is_zero());
    CHECK(box_operator(P("x1^3", 1), b1_sym) == P("-2*x1^2", 1));

    // family A: the box operator is the Grassmann pushforward
    const BundleSpec grass{GroupSpec{Family::A, 3}, Composition{{1, 2}}, Convention::prop};
    CHECK(box_operator(P("x1^2", 3), grass) == lagrange_sylvester(P("x1^2", 3), 3, 1));

    CHECK(box_operator(Polynomial::one(2), full_flag_bundle(Family::C, 2)).is_zero());
    CHECK_THROWS_AS(box_operator(P("x1", 3), BundleSpec{GroupSpec{Family::B, 3},
                                                        Composition{{1, 2}}, Convention::prop}),
                    unsupported_error);
}

TEST_CASE("box operator output on B2 against the brute force") {
    const BundleSpec b2 = full_flag_bundle(Family::B, 2);
    const auto elements = enumerate(b2.group);
    const auto rho = euler_denominator(positive_roots(b2.group),
                                       parabolic_positive_roots(b2.group, b2.fiber),
                                       Convention::prop);
    Rng rng(34);
    for (int t = 0; t < 5; ++t) {
        const auto b = rng.polynomial(2, 6, 4);
        CHECK(box_operator(b, b2) == brute_force_sum(b, elements, rho));
    }
}

TEST_CASE("factorization through the intermediate flag") {
    CHECK(pushforward_via_factorization(P("x1^2", 2), 2, 1) == P("x1 + x2", 2));
    CHECK(pushforward_via_factorization(P("x1^2", 2), 2, 1) ==
          jacobi_symmetrize(P("x1^2", 2), 2));
    CHECK(pushforward_via_factorization(Polynomial::one(3), 3, 1).is_zero());

    Rng rng(35);
    for (int t = 0; t < 5; ++t) {
        const auto b = rng.polynomial(4, 8, 5);
        for (int k = 1; k < 4; ++k)
            CHECK(pushforward_via_factorization(b, 4, k) == jacobi_symmetrize(b, 4));
    }
}

TEST_CASE("block jacobi symmetrizes within blocks") {
    const auto b = P("x1^2*x3", 3);
    const auto inner = block_jacobi(b, Composition{{2, 1}});
    CHECK(inner == P("(x1 + x2)*x3", 3));  // (x1^2 - x2^2)/(x1 - x2) * x3
    CHECK(is_invariant(inner, GroupSpec{Family::A, 3}, Composition{{2, 1}}));
    CHECK(block_jacobi(b, Composition{{1, 1, 1}}) == b);
}

TEST_CASE("operators are linear over the rationals") {
    Rng rng(36);
    for (int t = 0; t < 8; ++t) {
        const auto b = rng.polynomial(3, 5, 4);
        const auto c = rng.polynomial(3, 5, 4);
        const Rational alpha = rng.rational(), beta = rng.rational();
        CHECK(jacobi_symmetrize(b * alpha + c * beta, 3) ==
              jacobi_symmetrize(b, 3) * alpha + jacobi_symmetrize(c, 3) * beta);
    }
}

TEST_CASE("module homomorphism over the invariant ring") {
    Rng rng(37);
    const auto s = complete_homogeneous(2, 3);  // W-invariant scalar
    for (int t = 0; t < 5; ++t) {
        const auto b = rng.polynomial(3, 4, 4);
        CHECK(jacobi_symmetrize(s * b, 3) == s * jacobi_symmetrize(b, 3));
    }
}

TEST_CASE("convention relation on operator outputs") {
    Rng rng(38);
    for (int t = 0; t < 5; ++t) {
        const auto b = rng.polynomial(3, 6, 4);
        const int m = 3;  // |positive roots| of A rank 3
        const auto prop = jacobi_symmetrize(b, 3, Convention::prop);
        const auto sym = jacobi_symmetrize(b, 3, Convention::sym);
        CHECK(prop == (m % 2 ? -sym : sym));
    }
}

TEST_CASE("degree law on homogeneous inputs") {
    Rng rng(39);
    const BundleSpec bundle{GroupSpec{Family::A, 3}, Composition{{1, 2}}, Convention::prop};
    const int m = fiber_dimension(bundle);
    REQUIRE(m == 2);
    for (std::int64_t d = 0; d <= 5; ++d) {
        const auto raw = rng.homogeneous(3, d, 3);
        const auto b = gysin::detail::symmetrize_parabolic(raw, bundle.group, bundle.fiber);
        if (b.is_zero()) continue;
        const auto out = gysin_pushforward(b, bundle);
        if (d < m) {
            CHECK(out.is_zero());
        } else if (!out.is_zero()) {
            CHECK(out.degree() == d - m);
        }
    }
}

TEST_CASE("outputs are invariant under the full Weyl group") {
    Rng rng(40);
    for (int t = 0; t < 5; ++t) {
        const auto b = rng.polynomial(3, 5, 5);
        CHECK(is_invariant(jacobi_symmetrize(b, 3), GroupSpec{Family::A, 3}));

        const auto bb = rng.polynomial(2, 5, 4);
        CHECK(is_invariant(box_operator(bb, full_flag_bundle(Family::C, 2)),
                           GroupSpec{Family::C, 2}));
    }
}
