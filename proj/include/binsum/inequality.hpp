#pragma once

// The binomial-sum function f_k, the normalized main inequality f_k <= 1, and
// the auxiliary functions and finite checks used to prove it.
//
// Grid verification certifies the inequality at finitely many exact rational
// points; it is evidence, not a proof over the continuum.

#include "binsum/certified.hpp"
#include "binsum/verdict.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace binsum {

/// Uniform grid of exact rational points. A closed grid has n_points points
/// from lo to hi inclusive; a half-open one stops one step short of hi.
struct GridSpec {
    ExactRational lo;
    ExactRational hi;
    std::size_t n_points = 2;
    bool include_hi = true;

    static GridSpec closed(ExactRational lo, ExactRational hi, std::size_t n);
    static GridSpec half_open(ExactRational lo, ExactRational hi, std::size_t n);

    /// Throws DomainError unless lo < hi and n_points >= 2.
    void validate() const;
    std::vector<ExactRational> points() const;
};

std::string rational_string(const ExactRational& q);

/// f_k(x) = sum_j C(k,j)^2 (1-x)^{p_k(k-j)/k} x^{p_k j/k}, with 0^0 = 1.
/// Exact 1 at x in {0, 1/2, 1} and for k = 1.
Interval f_k(unsigned k, const ExactRational& x, Precision prec);

/// Certifies f_k(x) <= 1 at one point, with escalation.
VerificationReport verify_f_at(unsigned k, const ExactRational& x, const VerifyOptions& opts);

std::vector<VerificationReport> verify_main_inequality(unsigned k, const GridSpec& grid,
                                                       const VerifyOptions& opts = {});

/// sum_j C(k,j)^2 a^{p_k(k-j)/k} b^{p_k j/k} <= (a+b)^{p_k}, reduced to
/// f_k(b/(a+b)) <= 1 by homogeneity.
VerificationReport verify_mainineq_ab(unsigned k, const ExactRational& a, const ExactRational& b,
                                      const VerifyOptions& opts = {});

/// C(k,j)(1-x)^{p_k(k-j)/k} x^{p_k j/k} <= (1-x)^{k-j} x^j for x in [0, 1/10].
VerificationReport verify_binomialwise(unsigned k, unsigned j, const ExactRational& x,
                                       const VerifyOptions& opts = {});

/// phi_k(t) = ((2k-p_k)t + 1/2) log t + ((2k-p_k)(1-t) + 1/2) log(1-t)
///            + log(2 pi k)/2, for 0 < t < 1.
Interval phi(unsigned k, const ExactRational& t, Precision prec);
Interval phi(unsigned k, const Interval& t);
Interval phi_second_derivative(unsigned k, const Interval& t);

/// Inflection point of phi_k: 1/2 - sqrt(1 - 2/(2k+1-p_k))/2, for k >= 10.
Interval t_critical(unsigned k, Precision prec);

/// j maximizing C(k,j) w^j with w = 9^{1-p_k/k}: floor(w(k+1)/(1+w)).
/// Returns every candidate the enclosure cannot separate (normally one).
std::vector<unsigned> max_binomial_index(unsigned k, const VerifyOptions& opts = {});

struct LemmaRangeOptions {
    /// Samples t = i/(n+1), i = 1..n, for the entropy auxiliary inequality.
    std::size_t entropy_samples = 99;
    bool include_entropy = true;
};

/// Per k in [k_lo, k_hi]: phi_k(1/k) >= 0 and phi_k(1/10) >= 0 (in log and
/// power form) for k >= 10; the maximal binomial term bound for k >= 2.
/// Then 9^{1-t} <= 10 (1-t)^{1-t} t^t at the sampled t (equality at 1/10).
std::vector<VerificationReport> verify_lemma4_ranges(unsigned k_lo, unsigned k_hi,
                                                     const VerifyOptions& opts = {},
                                                     const LemmaRangeOptions& lemma = {});

VerificationReport verify_phi_at_inverse_k(unsigned k, const VerifyOptions& opts = {});
VerificationReport verify_phi_at_tenth(unsigned k, const VerifyOptions& opts = {});
VerificationReport verify_phi_at_tenth_power_form(unsigned k, const VerifyOptions& opts = {});
VerificationReport verify_max_binomial_term(unsigned k, const VerifyOptions& opts = {});
VerificationReport verify_entropy_aux(const ExactRational& t, const VerifyOptions& opts = {});

struct OdeCoefficients {
    Interval a;
    Interval b;
    Interval c;
};

OdeCoefficients ode_coefficients(unsigned k, const ExactRational& x, Precision prec);

/// a_k f_k'' + b_k f_k' + p_k c_k f_k with analytic term-wise derivatives.
Interval ode_residual(unsigned k, const ExactRational& x, Precision prec);

/// Width bound used to accept a residual enclosure: 2^{-(25 prec / 32)},
/// i.e. 2^{-200} at 256 bits.
long residual_width_exponent(Precision prec);

/// Verdict for a residual enclosure computed at the enclosure's precision.
VerificationReport residual_verdict(std::string case_id, Interval residual);

/// CertainTrue when the residual enclosure contains 0 and is narrower than
/// the bound; CertainFalse when it excludes 0.
VerificationReport verify_ode_residual(unsigned k, const ExactRational& x,
                                       const VerifyOptions& opts = {});

/// c_k(x) < 0 on a grid inside [1/10, 1/2); requires k >= 2.
std::vector<VerificationReport> verify_ck_negative(unsigned k, const GridSpec& grid,
                                                   const VerifyOptions& opts = {});

/// psi_k(y) = p_k y^{2-p_k/k} + y^{1-p_k/k} - y - p_k; exact 0 at y = 1.
Interval psi(unsigned k, const ExactRational& y, Precision prec);

/// 9^{2-p_k/k} > 1 + 80/(9 p_k + 1), for k >= 2.
VerificationReport verify_suff3(unsigned k, const VerifyOptions& opts = {});

/// f_k(x) against (A-B)^k P_k((A+B)/(A-B)) with A = (1-x)^{p_k/k},
/// B = x^{p_k/k} and P_k in its squared-binomial form. Agreement means the
/// enclosures intersect and both are narrower than 2^{-prec/2}.
VerificationReport legendre_reformulation_check(unsigned k, const ExactRational& x,
                                                const VerifyOptions& opts = {});

}  // namespace binsum
