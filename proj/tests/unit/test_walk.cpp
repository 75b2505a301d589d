#include "doctest.h"

#include "../reference_values.hpp"
#include "binsum/inequality.hpp"
#include "binsum/walk.hpp"
#include "support.hpp"

using namespace binsum;
using binsum::testing::near;
using binsum::testing::q;

TEST_CASE("exact walk distributions") {
    const auto d = walk_distribution(WalkLaw::from_q(q(1, 2)), 2);
    CHECK(d.at(0) == q(3, 8));
    CHECK(d.at(1) == q(1, 4));
    CHECK(d.at(-1) == q(1, 4));
    CHECK(d.at(2) == q(1, 16));
    CHECK(d.at(-2) == q(1, 16));
    CHECK(d.at(3) == 0);

    const auto zero = walk_distribution(WalkLaw::from_q(q(1, 3)), 0);
    CHECK(zero.at(0) == 1);

    const auto right = walk_distribution(WalkLaw::from_q(q(1)), 4);
    CHECK(right.at(0) == q(1, 16));
    for (long m = -4; m < 0; ++m) {
        CHECK(right.at(m) == 0);
    }
    CHECK(WalkLaw::from_right_probability(q(1, 3)).q == q(2, 3));
    CHECK_THROWS_AS(WalkLaw::from_q(q(3, 2)), DomainError);
    CHECK_THROWS_AS(WalkLaw::from_right_probability(q(2, 3)), DomainError);
}

TEST_CASE("walk invariants") {
    const ExactRational qs[] = {q(0), q(1, 7), q(3, 10), q(1, 2), q(5, 6), q(1)};
    for (const auto& qv : qs) {
        const WalkLaw law = WalkLaw::from_q(qv);
        const WalkLaw mirror = WalkLaw::from_q(ExactRational(1 - qv));
        for (unsigned n : {1U, 3U, 8U}) {
            const auto d = walk_distribution(law, n);
            CHECK(d.total() == 1);
            const auto m = walk_distribution(mirror, n);
            for (long s = -static_cast<long>(n); s <= static_cast<long>(n); ++s) {
                CHECK(d.at(s) == m.at(-s));
                CHECK(d.at(s) >= 0);
            }
        }
        const auto sum = convolve(walk_distribution(law, 3), walk_distribution(law, 5));
        const auto direct = walk_distribution(law, 8);
        for (long s = -8; s <= 8; ++s) {
            CHECK(sum.at(s) == direct.at(s));
        }
    }
}

TEST_CASE("endpoint probabilities") {
    const auto a = endpoint_probs(WalkLaw::from_q(q(1, 2)), 2);
    CHECK(a.left == q(1, 16));
    CHECK(a.middle == q(3, 8));
    CHECK(a.right == q(1, 16));
    const auto b = endpoint_probs(WalkLaw::from_q(q(0)), 3);
    CHECK(b.left == q(1, 8));
    CHECK(b.middle == q(1, 8));
    CHECK(b.right == 0);
    const auto c = endpoint_probs(WalkLaw::from_q(q(2, 3)), 1);
    CHECK(c.left == q(1, 6));
    CHECK(c.middle == q(1, 2));
    CHECK(c.right == q(1, 3));
    for (unsigned k : {1U, 7U, 30U, 100U}) {
        for (long i = 0; i <= 20; ++i) {
            const WalkLaw law = WalkLaw::from_q(q(i, 20));
            if (k <= 30) {
                CHECK(walk_distribution(law, k).at(0) == middle_probability_formula(law, k));
            }
            const auto e = endpoint_probs(law, k);
            CHECK(e.middle == middle_probability_formula(law, k));
        }
    }
}

TEST_CASE("walk inequality") {
    VerifyOptions opts;
    for (unsigned k : {1U, 2U, 9U}) {
        CHECK(verify_probineq(WalkLaw::from_q(q(1, 2)), k, opts).verdict == Verdict::ExactEquality);
        CHECK(verify_probineq(WalkLaw::from_q(q(0)), k, opts).verdict == Verdict::ExactEquality);
        CHECK(verify_probineq(WalkLaw::from_q(q(1)), k, opts).verdict == Verdict::ExactEquality);
    }
    const auto r = verify_probineq(WalkLaw::from_q(q(3, 10)), 5, opts);
    CHECK(r.verdict == Verdict::CertainTrue);
    const Interval expected = log2(Interval::from_string(reference::kProbineq310K5Rhs, 256)) -
                              log2(Interval::from_string(reference::kProbineq310K5Lhs, 256));
    CHECK(binsum::testing::agrees(*r.margin, expected));
    for (long i = 1; i < 20; ++i) {
        CHECK(is_pass(verify_probineq(WalkLaw::from_q(q(i, 20)), 6, opts).verdict));
    }
    // Exponent override below p_k fails at q = 1/2.
    CHECK(verify_probineq(WalkLaw::from_q(q(1, 2)), 5, opts, q(257, 100)).verdict == Verdict::CertainFalse);
    CHECK(verify_probineq(WalkLaw::from_q(q(1, 2)), 5, opts, q(8)).verdict == Verdict::CertainTrue);
}

TEST_CASE("equivalence with the main inequality") {
    VerifyOptions opts;
    CHECK(equivalence_check(WalkLaw::from_q(q(1, 2)), 2, opts).verdict == Verdict::CertainTrue);
    CHECK(equivalence_check(WalkLaw::from_q(q(1, 4)), 3, opts).verdict == Verdict::CertainTrue);
    CHECK(equivalence_check(WalkLaw::from_q(q(1)), 4, opts).verdict == Verdict::CertainTrue);
    CHECK(equivalence_check(WalkLaw::from_q(q(0)), 4, opts).verdict == Verdict::CertainTrue);
}

TEST_CASE("sharpness of p_k") {
    VerifyOptions opts;
    CHECK(sharpness_scan(2, q(1, 100), opts).verdict == Verdict::CertainFalse);
    CHECK(sharpness_scan(10, q(1, 1000), opts).verdict == Verdict::CertainFalse);
    CHECK_THROWS_AS(sharpness_scan(2, q(0), opts), DomainError);
    CHECK_THROWS_AS(sharpness_scan(2, q(3), opts), DomainError);
}

TEST_CASE("simulation") {
    const WalkLaw half = WalkLaw::from_q(q(1, 2));
    const auto a = simulate(half, 2, 200000, 1);
    CHECK(a.endpoints[1].exact == q(3, 8));
    CHECK(a.verdict == Verdict::CertainTrue);
    const auto b = simulate(half, 2, 200000, 1, Exec::Serial);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.endpoints[i].count == b.endpoints[i].count);
        CHECK(a.endpoints[i].z == b.endpoints[i].z);
    }
    const auto right = simulate(WalkLaw::from_q(q(1)), 3, 50000, 9);
    CHECK(right.negative == 0);
    CHECK(right.endpoints[0].count == 0);
    CHECK(right.verdict == Verdict::CertainTrue);
    std::uint64_t total = 0;
    const auto small = simulate(half, 1, 1000, 5);
    for (const auto& e : small.endpoints) {
        total += e.count;
    }
    CHECK(total == 1000);
    CHECK_THROWS_AS(simulate(half, 2, 0, 1), DomainError);
}
