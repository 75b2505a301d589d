#include "doctest.h"

#include "../reference_values.hpp"
#include "binsum/certified.hpp"
#include "binsum/rng.hpp"
#include "binsum/verdict.hpp"
#include "support.hpp"

using namespace binsum;
using binsum::testing::near;
using binsum::testing::q;

TEST_CASE("rational enclosures contain the exact value") {
    const Interval third = Interval::from_rational(q(1, 3), 128);
    CHECK(third.contains(q(1, 3)));
    CHECK_FALSE(third.is_point());
    CHECK(third.width_at_most_pow2(-120));
    CHECK(Interval::from_rational(q(3, 8), 64).is_point());
    CHECK(Interval::from_int(7, 64).contains(q(7)));
}

TEST_CASE("arithmetic preserves containment on random rationals") {
    Xoshiro256 rng(7, 0);
    auto draw = [&] {
        const long n = static_cast<long>(rng.below(2001)) - 1000;
        const long d = static_cast<long>(rng.below(999)) + 1;
        return q(n, d);
    };
    for (int i = 0; i < 500; ++i) {
        const ExactRational a = draw();
        const ExactRational b = draw();
        const Interval ia = Interval::from_rational(a, 96);
        const Interval ib = Interval::from_rational(b, 96);
        CHECK((ia + ib).contains(ExactRational(a + b)));
        CHECK((ia - ib).contains(ExactRational(a - b)));
        CHECK((ia * ib).contains(ExactRational(a * b)));
        if (b != 0) {
            CHECK((ia / ib).contains(ExactRational(a / b)));
        }
        CHECK(square(ia).contains(ExactRational(a * a)));
        CHECK(pow(ia, 3UL).contains(ExactRational(a * a * a)));
    }
}

TEST_CASE("transcendental enclosures narrow as precision doubles") {
    for (unsigned long k : {2UL, 5UL, 10UL, 100UL}) {
        Interval prev = pk(k, 64);
        for (Precision prec = 128; prec <= 1024; prec *= 2) {
            const Interval cur = pk(k, prec);
            CHECK(prev.contains(cur));
            CHECK(cur.log2_width() < prev.log2_width());
            prev = cur;
        }
    }
    const Interval x = Interval::from_rational(q(7, 3), 256);
    CHECK(exp(log(x)).contains(q(7, 3)));
    CHECK(sqrt(square(x)).contains(q(7, 3)));
}

TEST_CASE("p_k matches the oracle") {
    CHECK(near(pk(2, 256), reference::kPk2));
    CHECK(near(pk(10, 256), reference::kPk10));
    CHECK(pk(1, 256).is_point());
    CHECK(pk(1, 256).contains(q(1)));
    CHECK_THROWS_AS(pk(0, 256), DomainError);
}

TEST_CASE("certified comparison is tri-state") {
    const Interval one = Interval::from_int(1, 128);
    const Interval two = Interval::from_int(2, 128);
    CHECK(certified_compare(one, two) == Certainty::CertainTrue);
    CHECK(certified_compare(two, one) == Certainty::CertainFalse);
    CHECK(certified_compare(one, one) == Certainty::Undecided);
    // p_1 < 1 is false: p_1 = 1 exactly.
    CHECK(certified_less(pk(1, 128), one) == Certainty::CertainFalse);
    CHECK(certified_less(pk(2, 128), Interval::from_int(3, 128)) == Certainty::CertainTrue);
    CHECK(negate(Certainty::CertainTrue) == Certainty::CertainFalse);
    CHECK(both(Certainty::CertainTrue, Certainty::Undecided) == Certainty::Undecided);
    CHECK(both(Certainty::CertainFalse, Certainty::Undecided) == Certainty::CertainFalse);
}

TEST_CASE("antisymmetry of certified comparison") {
    Xoshiro256 rng(11, 0);
    for (int i = 0; i < 300; ++i) {
        const Interval a = Interval::from_rational(q(static_cast<long>(rng.below(100)), 7), 64);
        const Interval b = Interval::from_rational(q(static_cast<long>(rng.below(100)), 11), 64);
        const Certainty ab = certified_compare(a, b);
        const Certainty ba = certified_compare(b, a);
        if (ab == Certainty::CertainTrue) {
            CHECK(ba == Certainty::CertainFalse);
        }
        if (ab == Certainty::Undecided) {
            CHECK(ba == Certainty::Undecided);
        }
    }
}

TEST_CASE("escalation raises precision until decided") {
    // sqrt(2) < 1.41421356237309504880168872420969807857 (digits of sqrt 2 then 7 > 6)
    const auto pred = [](Precision prec) {
        return certified_compare(sqrt(Interval::from_int(2, prec)),
                                 Interval::from_string("1.41421356237309504880168872420969807857", prec));
    };
    const EscalationResult r = escalate(pred, 32, 4096);
    CHECK(r.certainty == Certainty::CertainTrue);
    CHECK(r.precision > 32);
    // An exact tie never resolves.
    const auto tie = [](Precision prec) {
        return certified_compare(Interval::from_int(1, prec), pk(1, prec));
    };
    CHECK(verify_with_escalation(tie, 64, 512) == Certainty::Undecided);
}

TEST_CASE("rational powers are exact when possible") {
    CHECK(exact_rational_pow(q(8, 27), q(2, 3)) == q(4, 9));
    CHECK_FALSE(exact_rational_pow(q(2), q(1, 2)).has_value());
    CHECK(rational_pow(q(2), q(1, 2), 256).contains(sqrt(Interval::from_int(2, 256))));
    CHECK(pow(q(0), Interval::from_int(0, 64), 64).contains(q(1)));
    CHECK(pow(q(0), pk(2, 64), 64).is_zero());
    CHECK_THROWS_AS(log(Interval::from_int(0, 64)), DomainError);
    CHECK_THROWS_AS(Interval::from_int(1, 64) / Interval::hull(Interval::from_int(-1, 64), Interval::from_int(1, 64)),
                    DomainError);
}

TEST_CASE("Stirling and p_k bounds") {
    CHECK(stirling_bounds_check(1, 256) == Certainty::CertainTrue);
    CHECK(stirling_bounds_check(100, 256) == Certainty::CertainTrue);
    CHECK(stirling_bounds_check(10000, 256) == Certainty::CertainTrue);
    CHECK(reference::kStirling10000);
    for (unsigned long k : {1UL, 2UL, 10UL, 1000UL}) {
        CHECK(pk_bounds_check(k, 256) == Certainty::CertainTrue);
    }
}

TEST_CASE("margins print rounded down") {
    const Interval third = Interval::from_rational(q(1, 3), 256);
    CHECK(third.lower_string(5) == "3.3333e-01");
    CHECK(third.upper_string(5) == "3.3334e-01");
    const VerificationReport r = exact_equality("x", 256);
    CHECK(r.verdict == Verdict::ExactEquality);
    CHECK(r.margin->is_zero());
}
