#include <catch2/catch_amalgamated.hpp>

#include "gysin/schubert.hpp"
#include "testutil.hpp"

using namespace gysin;
using testutil::P;
using testutil::Rng;

TEST_CASE("bialternant Schur polynomials") {
    CHECK(schur_bialternant(Partition({1}), 2) == P("x1 + x2", 2));
    CHECK(schur_bialternant(Partition({1, 1}), 2) == P("x1*x2", 2));
    CHECK(schur_bialternant(Partition({2}), 2) == P("x1^2 + x1*x2 + x2^2", 2));
    CHECK(schur_bialternant(Partition{}, 3) == Polynomial::one(3));

    // column shapes give the elementary symmetric polynomials
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(schur_bialternant(Partition(std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)), n) ==
                  elementary_symmetric(k, n));

    // row shapes give the complete homogeneous polynomials
    for (int n = 2; n <= 4; ++n)
        for (std::int64_t k = 0; k <= 4; ++k)
            CHECK(schur_bialternant(Partition({k}), n) == complete_homogeneous(k, n));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(schur_bialternant(Partition({1, 1, 1}), 2), std::invalid_argument);
    CHECK(Partition({3, 1, 0}).length() == 2);
    CHECK(Partition({3, 1}).weight() == 4);
}

TEST_CASE("complete homogeneous polynomials") {
    CHECK(complete_homogeneous(0, 3) == Polynomial::one(3));
    CHECK(complete_homogeneous(1, 3) == P("x1 + x2 + x3", 3));
    CHECK(complete_homogeneous(2, 2) == P("x1^2 + x1*x2 + x2^2", 2));
    CHECK(complete_homogeneous(3, 2).term_count() == 4);

    for (std::int64_t k = 0; k <= 4; ++k)
        CHECK(is_invariant(complete_homogeneous(k, 3), GroupSpec{Family::A, 3}));
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(2, 3) == P("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(elementary_symmetric(0, 3) == Polynomial::one(3));
    CHECK(elementary_symmetric(4, 3).is_zero());
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(1, P("x1^2", 2)) == P("x1 + x2", 2));
    CHECK(divided_difference(1, P("x1 + x2", 2)).is_zero());
    CHECK(divided_difference(1, P("x1", 2)) == Polynomial::one(2));
    CHECK_THROWS_AS(divided_difference(2, P("x1", 2)), std::out_of_range);
    CHECK_THROWS_AS(divided_difference(0, P("x1", 2)), std::out_of_range);

    Rng rng(21);
    for (int t = 0; t < 15; ++t) {
        const int n = 2 + t % 3;
        const auto b = rng.polynomial(n, 5, 5);
        const int i = 1 + t % (n - 1);
        CHECK(divided_difference(i, divided_difference(i, b)).is_zero());
    }
}

TEST_CASE("divided differences along the longest word") {
    CHECK(jacobi_via_divided_differences(P("x1^2", 2), 2) == P("x1 + x2", 2));
    CHECK(jacobi_via_divided_differences(Polynomial::one(3), 3).is_zero());
    CHECK(jacobi_via_divided_differences(P("x1^2*x2", 3), 3) == Polynomial::one(3));
    CHECK(jacobi_via_divided_differences(P("x1^2*x2", 3), 3) ==
          jacobi_symmetrize(P("x1^2*x2", 3), 3, Convention::prop));
}

TEST_CASE("segre report") {
    const auto report = segre_check(3, 2);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.all_pass);
    CHECK(report.rows[0].computed == Polynomial::one(3));
    CHECK(report.rows[1].computed == P("x1 + x2 + x3", 3));

    const auto hand = segre_check(2, 2);
    CHECK(hand.rows[2].computed == P("x1^2 + x1*x2 + x2^2", 2));  // (x1^3 - x2^3)/(x1 - x2)
}
