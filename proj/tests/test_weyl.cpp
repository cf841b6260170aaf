#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "gysin/weyl.hpp"
#include "testutil.hpp"

using namespace gysin;
using testutil::P;
using testutil::Rng;

namespace {

WeylElement transposition(int n, int i) {  // swaps coordinates i, i+1 (1-based)
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) perm[static_cast<std::size_t>(t)] = t;
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    return WeylElement(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1));
}

} // namespace

TEST_CASE("enumeration counts and determinism") {
    CHECK(enumerate(GroupSpec{Family::A, 3}).size() == 6);
    CHECK(enumerate(GroupSpec{Family::B, 2}).size() == 8);
    CHECK(enumerate(GroupSpec{Family::A, 1}).size() == 1);
    CHECK(enumerate(GroupSpec{Family::C, 3}).size() == 48);

    const auto first = enumerate(GroupSpec{Family::B, 3});
    const auto second = enumerate(GroupSpec{Family::B, 3});
    CHECK(first == second);

    std::vector<WeylElement> sorted(first);
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());  // no duplicates
}

TEST_CASE("enumeration cap guards huge ranks") {
    CHECK_THROWS_AS(enumerate(GroupSpec{Family::A, 10}), enumeration_cap_error);
    CHECK_THROWS_AS(enumerate(GroupSpec{Family::A, 4}, 10), enumeration_cap_error);
    CHECK(enumerate(GroupSpec{Family::A, 4}, 24).size() == 24);
}

TEST_CASE("length") {
    const GroupSpec a3{Family::A, 3};
    CHECK(length(WeylElement::identity(3), a3) == 0);
    CHECK(length(transposition(3, 1), a3) == 1);
    const WeylElement longest({2, 1, 0}, {1, 1, 1});  // window [3, 2, 1]
    CHECK(length(longest, a3) == 3);

    // family A length equals the inversion count
    Rng rng(11);
    for (const auto& w : enumerate(GroupSpec{Family::A, 4})) {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (w.image(i) > w.image(j)) ++inversions;
        CHECK(length(w, GroupSpec{Family::A, 4}) == inversions);
    }

    const GroupSpec b2{Family::B, 2};
    const WeylElement flip_last({0, 1}, {1, -1});
    CHECK(length(flip_last, b2) == 1);  // reflection of the last short root
    CHECK(length(flip_last, GroupSpec{Family::C, 2}) == 1);
}

TEST_CASE("sign is the signed-permutation determinant") {
    CHECK(sign(WeylElement::identity(3)) == 1);
    CHECK(sign(transposition(3, 1)) == -1);
    CHECK(sign(WeylElement({0, 1}, {1, -1})) == -1);  // diag(1, -1)

    for (Family fam : {Family::A, Family::B}) {
        for (int n = 1; n <= 4; ++n) {
            if (fam == Family::A && n < 2) continue;
            const GroupSpec spec{fam, n};
            for (const auto& w : enumerate(spec))
                CHECK(sign(w) == (length(w, spec) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("sign is multiplicative") {
    const auto elems = enumerate(GroupSpec{Family::B, 2});
    for (const auto& v : elems)
        for (const auto& w : elems) CHECK(sign(compose(v, w)) == sign(v) * sign(w));
}

TEST_CASE("action substitutes variables") {
    CHECK(act(transposition(2, 1), P("x1", 2)) == P("x2", 2));

    Rng rng(12);
    const auto p = rng.polynomial(3, 5, 5);
    CHECK(act(WeylElement::identity(3), p) == p);

    const WeylElement flip2({0, 1}, {1, -1});
    CHECK(act(flip2, P("x2^2", 2)) == P("x2^2", 2));
    CHECK(act(flip2, P("x2", 2)) == P("-x2", 2));

    // the cyclic substitution 1 -> 2 -> 3 -> 1
    const WeylElement cyclic({1, 2, 0}, {1, 1, 1});
    CHECK(act(cyclic, P("x1*(x2 + x3)", 3)) == P("x2*(x3 + x1)", 3));
}

TEST_CASE("action is a group action") {
    Rng rng(13);
    for (Family fam : {Family::A, Family::B}) {
        const GroupSpec spec{fam, 3};
        const auto elems = enumerate(spec);
        for (int trial = 0; trial < 25; ++trial) {
            const auto& v = elems[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(elems.size()) - 1))];
            const auto& w = elems[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(elems.size()) - 1))];
            const auto p = rng.polynomial(3, 4, 4);
            CHECK(act(v, act(w, p)) == act(compose(v, w), p));
            CHECK(act(compose(w, inverse(w)), p) == p);
        }
    }
}

TEST_CASE("inverse and compose satisfy the group axioms") {
    for (const auto& w : enumerate(GroupSpec{Family::C, 2})) {
        CHECK(compose(w, inverse(w)) == WeylElement::identity(2));
        CHECK(compose(inverse(w), w) == WeylElement::identity(2));
    }
}

TEST_CASE("coset representative counts") {
    CHECK(coset_reps(GroupSpec{Family::A, 3}, Composition{{1, 2}}).size() == 3);
    CHECK(coset_reps(GroupSpec{Family::A, 4}, Composition{{2, 2}}).size() == 6);
    CHECK(coset_reps(GroupSpec{Family::A, 4}, Composition{{1, 1, 1, 1}}).size() == 24);
    CHECK(coset_reps(GroupSpec{Family::A, 5}, Composition{{2, 3}}).size() == 10);
    CHECK(coset_reps(GroupSpec{Family::A, 4}, Composition{{4}}).size() == 1);
    CHECK(coset_reps(GroupSpec{Family::B, 2}, Composition{{1, 1}}).size() == 8);
    CHECK(coset_reps(GroupSpec{Family::B, 2}, Composition{{2}}).size() == 1);
}

TEST_CASE("coset representatives are minimal and cover the group") {
    for (int n = 2; n <= 4; ++n) {
        const GroupSpec spec{Family::A, n};
        for (int k = 1; k < n; ++k) {
            const Composition comp{{k, n - k}};
            const auto reps = coset_reps(spec, comp);
            const auto subgroup = parabolic_elements(spec, comp);

            std::vector<WeylElement> covered;
            for (const auto& rep : reps) {
                const int rep_length = length(rep, spec);
                for (const auto& h : subgroup) {
                    const auto member = compose(rep, h);
                    covered.push_back(member);
                    if (h.is_identity())
                        CHECK(member == rep);
                    else
                        CHECK(length(member, spec) > rep_length);
                }
            }
            std::sort(covered.begin(), covered.end());
            auto full = enumerate(spec);
            std::sort(full.begin(), full.end());
            CHECK(covered == full);  // disjoint union of the cosets is the whole group
        }
    }
}

TEST_CASE("invariance checks") {
    CHECK(is_invariant(P("x1 + x2", 2), GroupSpec{Family::A, 2}));
    CHECK_FALSE(is_invariant(P("x1", 2), GroupSpec{Family::A, 2}));
    CHECK(is_invariant(P("x1*(x2 + x3)", 3), GroupSpec{Family::A, 3}, Composition{{1, 2}}));
    CHECK_FALSE(is_invariant(P("x2", 3), GroupSpec{Family::A, 3}, Composition{{1, 2}}));

    // full hyperoctahedral invariance needs even symmetric polynomials
    CHECK(is_invariant(P("x1^2 + x2^2", 2), GroupSpec{Family::B, 2}));
    CHECK_FALSE(is_invariant(P("x1 + x2", 2), GroupSpec{Family::B, 2}));
    // H = T: no constraint at all
    CHECK(is_invariant(P("x1", 2), GroupSpec{Family::B, 2}, Composition{{1, 1}}));
}

TEST_CASE("unsupported compositions are rejected") {
    CHECK_THROWS_AS(validate(GroupSpec{Family::A, 3}, Composition{{1, 1}}), unsupported_error);
    CHECK_THROWS_AS(validate(GroupSpec{Family::A, 3}, Composition{{0, 3}}), unsupported_error);
    CHECK_THROWS_AS(validate(GroupSpec{Family::B, 3}, Composition{{1, 2}}), unsupported_error);
    CHECK_NOTHROW(validate(GroupSpec{Family::B, 3}, Composition{{1, 1, 1}}));
    CHECK_NOTHROW(validate(GroupSpec{Family::C, 3}, Composition{{3}}));
}
