#include "doctest.h"

#include "../reference_values.hpp"
#include "binsum/inequality.hpp"
#include "binsum/rng.hpp"
#include "support.hpp"

#include <cstring>

using namespace binsum;
using binsum::testing::near;
using binsum::testing::q;

namespace {

bool same_bits(const Interval& a, const Interval& b) {
    return mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
}

}  // namespace

TEST_CASE("grid points are exact and ordered") {
    const auto closed = GridSpec::closed(q(0), q(1), 5).points();
    REQUIRE(closed.size() == 5);
    CHECK(closed[1] == q(1, 4));
    CHECK(closed.back() == q(1));
    const auto open = GridSpec::half_open(q(1, 10), q(1, 2), 4).points();
    CHECK(open.back() == q(2, 5));
    CHECK_THROWS_AS(GridSpec::closed(q(1), q(0), 5), DomainError);
    CHECK_THROWS_AS(GridSpec::closed(q(0), q(1), 1), DomainError);
}

TEST_CASE("f_k against the oracle and its exact points") {
    CHECK(near(f_k(2, q(1, 4), 256), reference::kF2AtQuarter));
    CHECK(near(f_k(5, q(9, 10), 256), reference::kF5AtNineTenths));
    for (unsigned k : {1U, 2U, 7U, 40U}) {
        for (const auto& x : {q(0), q(1, 2), q(1)}) {
            const Interval v = f_k(k, x, 256);
            CHECK(v.is_point());
            CHECK(v.contains(q(1)));
        }
    }
    CHECK(f_k(1, q(1, 3), 256).contains(q(1)));
    CHECK_THROWS_AS(f_k(2, q(3, 2), 256), DomainError);
    CHECK_THROWS_AS(f_k(0, q(1, 2), 256), DomainError);
}

TEST_CASE("f_k is symmetric bit for bit") {
    Xoshiro256 rng(3, 0);
    for (int i = 0; i < 100; ++i) {
        const unsigned k = 2 + static_cast<unsigned>(rng.below(30));
        const ExactRational x = q(static_cast<long>(rng.below(999)) + 1, 1000);
        CHECK(same_bits(f_k(k, x, 192), f_k(k, ExactRational(1 - x), 192)));
    }
}

TEST_CASE("main inequality verdicts") {
    VerifyOptions opts;
    CHECK(verify_f_at(2, q(1, 4), opts).verdict == Verdict::CertainTrue);
    CHECK(verify_f_at(2, q(1, 2), opts).verdict == Verdict::ExactEquality);
    CHECK(verify_f_at(3, q(0), opts).verdict == Verdict::ExactEquality);
    CHECK(verify_f_at(1, q(1, 3), opts).verdict == Verdict::ExactEquality);
    const auto r = verify_f_at(2, q(1, 4), opts);
    CHECK(r.margin->is_positive());

    const auto sweep = verify_main_inequality(4, GridSpec::closed(q(0), q(1), 21), opts);
    const VerdictCounts c = count_verdicts(sweep);
    CHECK(c.exact_equality == 3);
    CHECK(c.certain_true == 18);

    CHECK(verify_mainineq_ab(3, q(2), q(5), opts).verdict == Verdict::CertainTrue);
    CHECK(verify_mainineq_ab(3, q(2), q(2), opts).verdict == Verdict::ExactEquality);
    CHECK(verify_mainineq_ab(3, q(0), q(2), opts).verdict == Verdict::ExactEquality);
}

TEST_CASE("serial and parallel sweeps agree") {
    VerifyOptions serial;
    serial.exec = Exec::Serial;
    VerifyOptions parallel;
    const auto grid = GridSpec::closed(q(0), q(1), 33);
    const auto a = verify_main_inequality(6, grid, serial);
    const auto b = verify_main_inequality(6, grid, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(same_bits(*a[i].margin, *b[i].margin));
    }
}

TEST_CASE("binomialwise estimate") {
    VerifyOptions opts;
    const auto r = verify_binomialwise(5, 2, q(1, 20), opts);
    CHECK(r.verdict == Verdict::CertainTrue);
    // log2(rhs/lhs) from the oracle values.
    const Interval expected = log2(Interval::from_string(reference::kBinomialwise52Rhs, 256)) -
                              log2(Interval::from_string(reference::kBinomialwise52Lhs, 256));
    CHECK(binsum::testing::agrees(*r.margin, expected));
    CHECK(verify_binomialwise(12, 1, q(1, 10), opts).verdict == Verdict::CertainTrue);
    CHECK(verify_binomialwise(4, 1, q(0), opts).verdict == Verdict::ExactEquality);
    CHECK_THROWS_AS(verify_binomialwise(4, 1, q(1, 5), opts), DomainError);
}

TEST_CASE("phi, its critical point and the lemma ranges") {
    CHECK(near(phi(10, q(1, 10), 256), reference::kPhi10Tenth));
    CHECK(near(phi(10, q(1, 2), 256), reference::kPhi10Half));
    CHECK(near(phi(50, q(1, 50), 256), reference::kPhi50Fiftieth));
    CHECK(near(t_critical(10, 256), reference::kTCrit10));
    CHECK(near(t_critical(100, 256), reference::kTCrit100));
    CHECK_THROWS_AS(t_critical(9, 256), DomainError);
    // phi'' vanishes at t_k.
    CHECK(phi_second_derivative(10, t_critical(10, 256)).contains_zero());
    CHECK(phi(2, q(1, 10), 256).is_negative());

    VerifyOptions opts;
    CHECK(verify_phi_at_inverse_k(10, opts).verdict == Verdict::CertainTrue);
    CHECK(verify_phi_at_tenth(99, opts).verdict == Verdict::CertainTrue);
    CHECK(verify_phi_at_tenth_power_form(10, opts).verdict == Verdict::CertainTrue);
    CHECK(verify_max_binomial_term(2, opts).verdict == Verdict::CertainTrue);
    CHECK(max_binomial_index(49, opts).size() == 1);
    CHECK(verify_entropy_aux(q(1, 10), opts).verdict == Verdict::ExactEquality);
    CHECK(verify_entropy_aux(q(1, 3), opts).verdict == Verdict::CertainTrue);

    const auto ranges = verify_lemma4_ranges(8, 12, opts);
    const VerdictCounts c = count_verdicts(ranges);
    CHECK(c.all_pass());
    CHECK(c.exact_equality == 1);
    CHECK(c.total() == 3 * 3 + 5 + 99);
}

TEST_CASE("second-order identity") {
    const OdeCoefficients c2 = ode_coefficients(2, q(1, 4), 256);
    CHECK(near(c2.a, reference::kA2Quarter));
    CHECK(near(c2.b, reference::kB2Quarter));
    CHECK(near(c2.c, reference::kC2Quarter));
    CHECK(near(ode_coefficients(3, q(1, 100), 256).a, reference::kA3Hundredth));
    CHECK(near(ode_coefficients(5, q(499, 1000), 256).c, reference::kC5499, "1e-35"));
    const OdeCoefficients half = ode_coefficients(4, q(1, 2), 256);
    CHECK(half.a.is_zero());
    CHECK(half.c.is_zero());

    VerifyOptions opts;
    CHECK(verify_ode_residual(2, q(1, 3), opts).verdict == Verdict::CertainTrue);
    const Interval r256 = ode_residual(7, q(2, 7), 256);
    const Interval r512 = ode_residual(7, q(2, 7), 512);
    CHECK(r256.contains_zero());
    CHECK(r256.width_at_most_pow2(-200));
    CHECK(r256.log2_width() - r512.log2_width() >= 64);
    CHECK(residual_width_exponent(256) == -200);

    const auto ck = verify_ck_negative(3, GridSpec::half_open(q(1, 10), q(1, 2), 40), opts);
    CHECK(count_verdicts(ck).all_pass());
    CHECK_THROWS_AS(verify_ck_negative(3, GridSpec::closed(q(1, 20), q(1, 2), 4), opts), DomainError);
}

TEST_CASE("psi and the sufficient condition") {
    CHECK(near(psi(3, q(9), 256), reference::kPsi39));
    CHECK(psi(3, q(1), 256).is_zero());
    VerifyOptions opts;
    for (unsigned k = 2; k <= 10; ++k) {
        CHECK(verify_suff3(k, opts).verdict == Verdict::CertainTrue);
    }
    const auto r = verify_suff3(2, opts);
    const Interval ratio = Interval::from_string(reference::kSuff32Lhs, 256) /
                           Interval::from_string(reference::kSuff32Rhs, 256);
    CHECK(binsum::testing::agrees(*r.value, ratio));
}

TEST_CASE("Legendre form agrees with f_k") {
    VerifyOptions opts;
    CHECK(legendre_reformulation_check(2, q(1, 4), opts).verdict == Verdict::CertainTrue);
    const auto r = legendre_reformulation_check(5, q(9, 10), opts);
    CHECK(r.verdict == Verdict::CertainTrue);
    CHECK(near(*r.value, reference::kLegendreRhs5NineTenths, "1e-30"));
    CHECK(legendre_reformulation_check(1, q(1, 4), opts).verdict == Verdict::CertainTrue);
    CHECK_THROWS_AS(legendre_reformulation_check(3, q(1, 2), opts), DomainError);
}
