#include "binsum/inequality.hpp"

#include "binomial_sum.hpp"

#include <algorithm>
#include <utility>

namespace binsum {

namespace {

const ExactRational kHalf(1, 2);
const ExactRational kTenth(1, 10);

std::string case_k(unsigned k) { return "k=" + std::to_string(k); }

std::string case_kx(unsigned k, const ExactRational& x) {
    return case_k(k) + " x=" + rational_string(x);
}

/// Claim value > 0 (or < 0 when `negative`): the margin is the signed slack.
VerificationReport sign_report(std::string id, const Interval& value, bool negative) {
    VerificationReport r;
    r.case_id = std::move(id);
    const Interval zero(value.precision());
    r.verdict = to_verdict(negative ? certified_compare(value, zero) : certified_compare(zero, value));
    r.margin = negative ? -value : value;
    r.value = value;
    r.precision = value.precision();
    return r;
}

void require_k(unsigned k, unsigned min_k) {
    if (k < min_k) {
        throw DomainError("this check requires k >= " + std::to_string(min_k));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Grids

GridSpec GridSpec::closed(ExactRational lo, ExactRational hi, std::size_t n) {
    GridSpec g{std::move(lo), std::move(hi), n, true};
    g.validate();
    return g;
}

GridSpec GridSpec::half_open(ExactRational lo, ExactRational hi, std::size_t n) {
    GridSpec g{std::move(lo), std::move(hi), n, false};
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (!(lo < hi)) {
        throw DomainError("grid requires lo < hi");
    }
    if (n_points < 2) {
        throw DomainError("grid requires at least 2 points");
    }
}

std::vector<ExactRational> GridSpec::points() const {
    validate();
    const std::size_t steps = include_hi ? n_points - 1 : n_points;
    ExactRational step = (hi - lo) / ExactRational(static_cast<unsigned long>(steps));
    std::vector<ExactRational> out;
    out.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        ExactRational p = lo + step * ExactRational(static_cast<unsigned long>(i));
        p.canonicalize();
        out.push_back(std::move(p));
    }
    return out;
}

std::string rational_string(const ExactRational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// f_k and the main inequality

Interval f_k(unsigned k, const ExactRational& x, Precision prec) {
    require_k(k, 1);
    if (x < 0 || x > 1) {
        throw DomainError("f_k is defined on [0, 1]");
    }
    if (k == 1 || x == 0 || x == 1 || x == kHalf) {
        // f_1 = (1-x) + x; endpoints keep one term with 0^0 = 1; at 1/2 every
        // term carries 2^{-p_k} = 1/C(2k,k) and the squares sum to C(2k,k).
        return Interval::from_int(1, prec);
    }
    const Interval alpha = pk(k, prec) / static_cast<long>(k);
    const Interval left = pow(ExactRational(1 - x), alpha, prec);
    const Interval right = pow(x, alpha, prec);
    return detail::mirrored_sum(k, left, right, prec);
}

VerificationReport verify_f_at(unsigned k, const ExactRational& x, const VerifyOptions& opts) {
    require_k(k, 1);
    if (x < 0 || x > 1) {
        throw DomainError("f_k is defined on [0, 1]");
    }
    std::string id = case_kx(k, x);
    if (k == 1 || x == 0 || x == 1 || x == kHalf) {
        return exact_equality(std::move(id), opts.prec);
    }
    return escalate_report(
        [&](Precision prec) {
            const Interval f = f_k(k, x, prec);
            VerificationReport r = compare_logs(id, log2(f), Interval(prec));
            r.value = f;
            return r;
        },
        opts.prec, opts.cap);
}

std::vector<VerificationReport> verify_main_inequality(unsigned k, const GridSpec& grid,
                                                       const VerifyOptions& opts) {
    const auto points = grid.points();
    if (points.front() < 0 || points.back() > 1) {
        throw DomainError("main-inequality grid must lie in [0, 1]");
    }
    return indexed_map<VerificationReport>(points.size(), opts.exec, [&](std::size_t i) {
        return verify_f_at(k, points[i], opts);
    });
}

VerificationReport verify_mainineq_ab(unsigned k, const ExactRational& a, const ExactRational& b,
                                      const VerifyOptions& opts) {
    require_k(k, 1);
    if (a < 0 || b < 0) {
        throw DomainError("a and b must be nonnegative");
    }
    if (a == 0 && b == 0) {
        throw DomainError("a + b must be positive");
    }
    std::string id = case_k(k) + " a=" + rational_string(a) + " b=" + rational_string(b);
    if (k == 1 || a == 0 || b == 0 || a == b) {
        return exact_equality(std::move(id), opts.prec);
    }
    ExactRational x = b / (a + b);
    x.canonicalize();
    VerificationReport r = verify_f_at(k, x, opts);
    r.case_id = std::move(id);
    return r;
}

VerificationReport verify_binomialwise(unsigned k, unsigned j, const ExactRational& x,
                                       const VerifyOptions& opts) {
    require_k(k, 1);
    if (j > k) {
        throw DomainError("binomial index j must satisfy j <= k");
    }
    if (x < 0 || x > kTenth) {
        throw DomainError("x must lie in [0, 1/10]");
    }
    std::string id = case_k(k) + " j=" + std::to_string(j) + " x=" + rational_string(x);
    if (k == 1 || x == 0) {
        // k = 1 has p_1/1 = 1 and C(1,j) = 1; at x = 0 both sides are 1 (j = 0) or 0.
        return exact_equality(std::move(id), opts.prec);
    }
    return escalate_report(
        [&](Precision prec) {
            const Interval alpha = pk(k, prec) / static_cast<long>(k);
            const Interval lx = log2(Interval::from_rational(x, prec));
            const Interval ly = log2(Interval::from_rational(ExactRational(1 - x), prec));
            const Interval rhs = static_cast<long>(k - j) * ly + static_cast<long>(j) * lx;
            const Interval lhs = log2(Interval::from_integer(binomial(k, j), prec)) + alpha * rhs;
            return compare_logs(id, lhs, rhs);
        },
        opts.prec, opts.cap);
}

// ---------------------------------------------------------------------------
// phi_k, t_k and the lemma ranges

Interval phi(unsigned k, const Interval& t) {
    require_k(k, 1);
    const Precision prec = t.precision();
    const Interval w = 2 * static_cast<long>(k) - pk(k, prec);
    const Interval half = Interval::from_rational(kHalf, prec);
    const Interval s = 1 - t;
    return (w * t + half) * log(t) + (w * s + half) * log(s) +
           log(2 * Interval::pi(prec) * static_cast<long>(k)) / 2;
}

Interval phi(unsigned k, const ExactRational& t, Precision prec) {
    if (t <= 0 || t >= 1) {
        throw DomainError("phi_k is defined on (0, 1)");
    }
    return phi(k, Interval::from_rational(t, prec));
}

Interval phi_second_derivative(unsigned k, const Interval& t) {
    const Precision prec = t.precision();
    const Interval w = 2 * static_cast<long>(k) - pk(k, prec);
    const Interval s = 1 - t;
    const Interval st = s * t;
    return w / st - (2 * square(t) - 2 * t + 1) / (2 * square(st));
}

Interval t_critical(unsigned k, Precision prec) {
    require_k(k, 10);
    const Interval radicand = 1 - 2 / (2 * static_cast<long>(k) + 1 - pk(k, prec));
    if (!radicand.is_positive()) {
        throw DomainError("t_k radicand is not positive");
    }
    return Interval::from_rational(kHalf, prec) - sqrt(radicand) / 2;
}

std::vector<unsigned> max_binomial_index(unsigned k, const VerifyOptions& opts) {
    require_k(k, 1);
    Precision prec = opts.prec;
    for (;;) {
        const Interval alpha = pk(k, prec) / static_cast<long>(k);
        const Interval omega = pow(ExactRational(9), 1 - alpha, prec);
        const Interval v = omega * static_cast<long>(k + 1) / (1 + omega);
        const long lo = mpfr_get_si(v.lo(), MPFR_RNDD);
        const long hi = mpfr_get_si(v.hi(), MPFR_RNDD);
        if (lo == hi || prec * 2 > opts.cap) {
            std::vector<unsigned> out;
            for (long j = std::max(lo, 0L); j <= std::min(hi, static_cast<long>(k)); ++j) {
                out.push_back(static_cast<unsigned>(j));
            }
            return out;
        }
        prec *= 2;
    }
}

VerificationReport verify_phi_at_inverse_k(unsigned k, const VerifyOptions& opts) {
    require_k(k, 2);
    return escalate_report(
        [&](Precision prec) {
            return sign_report(case_k(k) + " phi(1/k)>=0", phi(k, ExactRational(1, k), prec), false);
        },
        opts.prec, opts.cap);
}

VerificationReport verify_phi_at_tenth(unsigned k, const VerifyOptions& opts) {
    require_k(k, 2);
    return escalate_report(
        [&](Precision prec) { return sign_report(case_k(k) + " phi(1/10)>=0", phi(k, kTenth, prec), false); },
        opts.prec, opts.cap);
}

VerificationReport verify_phi_at_tenth_power_form(unsigned k, const VerifyOptions& opts) {
    require_k(k, 2);
    // 3^{9w/5+1} / 10^{w+1} >= (2 pi k)^{-1/2} with w = 2k - p_k.
    return escalate_report(
        [&](Precision prec) {
            const Interval w = 2 * static_cast<long>(k) - pk(k, prec);
            const Interval rhs =
                Interval::from_rational(ExactRational(9, 5), prec) * w + 1;
            const Interval log2_big = rhs * log2(Interval::from_int(3, prec)) -
                                      (w + 1) * log2(Interval::from_int(10, prec));
            const Interval log2_small = -log2(2 * Interval::pi(prec) * static_cast<long>(k)) / 2;
            return compare_logs(case_k(k) + " phi(1/10)>=0 power form", log2_small, log2_big);
        },
        opts.prec, opts.cap);
}

VerificationReport verify_max_binomial_term(unsigned k, const VerifyOptions& opts) {
    require_k(k, 2);
    const auto candidates = max_binomial_index(k, opts);
    std::string id = case_k(k) + " max binomial term j=";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        id += (i ? "," : "") + std::to_string(candidates[i]);
    }
    // C(k,j) 9^{(1-p_k/k) j} (9/10)^{p_k-k} <= 1 at every candidate j.
    return escalate_report(
        [&](Precision prec) {
            const Interval p = pk(k, prec);
            const Interval alpha = p / static_cast<long>(k);
            const Interval log2_nine = log2(Interval::from_int(9, prec));
            const Interval log2_ratio = log2(Interval::from_rational(ExactRational(9, 10), prec));
            VerificationReport combined;
            bool first = true;
            for (unsigned j : candidates) {
                const Interval lhs = log2(Interval::from_integer(binomial(k, j), prec)) +
                                     (1 - alpha) * static_cast<long>(j) * log2_nine +
                                     (p - static_cast<long>(k)) * log2_ratio;
                VerificationReport r = compare_logs(id, lhs, Interval(prec));
                if (first) {
                    combined = std::move(r);
                    first = false;
                } else {
                    const Certainty c = both(
                        combined.verdict == Verdict::CertainTrue ? Certainty::CertainTrue
                        : combined.verdict == Verdict::CertainFalse ? Certainty::CertainFalse
                                                                    : Certainty::Undecided,
                        r.verdict == Verdict::CertainTrue ? Certainty::CertainTrue
                        : r.verdict == Verdict::CertainFalse ? Certainty::CertainFalse
                                                             : Certainty::Undecided);
                    combined.verdict = to_verdict(c);
                    combined.margin = Interval::hull(*combined.margin, *r.margin);
                }
            }
            return combined;
        },
        opts.prec, opts.cap);
}

VerificationReport verify_entropy_aux(const ExactRational& t, const VerifyOptions& opts) {
    if (t <= 0 || t >= 1) {
        throw DomainError("entropy inequality is stated for t in (0, 1)");
    }
    std::string id = "entropy t=" + rational_string(t);
    if (t == kTenth) {
        // 10 (9/10)^{9/10} (1/10)^{1/10} = 10^{9/10} (9/10)^{9/10} = 9^{9/10}.
        return exact_equality(std::move(id), opts.prec);
    }
    return escalate_report(
        [&](Precision prec) {
            const ExactRational s = 1 - t;
            const Interval ti = Interval::from_rational(t, prec);
            const Interval si = Interval::from_rational(s, prec);
            const Interval lhs = si * log2(Interval::from_int(9, prec));
            const Interval rhs = log2(Interval::from_int(10, prec)) + si * log2(si) + ti * log2(ti);
            return compare_logs(id, lhs, rhs);
        },
        opts.prec, opts.cap);
}

std::vector<VerificationReport> verify_lemma4_ranges(unsigned k_lo, unsigned k_hi,
                                                     const VerifyOptions& opts,
                                                     const LemmaRangeOptions& lemma) {
    if (k_lo < 2 || k_lo > k_hi) {
        throw DomainError("lemma ranges require 2 <= k_lo <= k_hi");
    }
    enum class Check { InverseK, Tenth, TenthPower, MaxTerm, Entropy };
    struct Task {
        Check check;
        unsigned k;
        ExactRational t;
    };
    std::vector<Task> tasks;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        if (k >= 10) {
            tasks.push_back({Check::InverseK, k, {}});
            tasks.push_back({Check::Tenth, k, {}});
            tasks.push_back({Check::TenthPower, k, {}});
        }
        tasks.push_back({Check::MaxTerm, k, {}});
    }
    if (lemma.include_entropy) {
        const unsigned long n = lemma.entropy_samples;
        for (unsigned long i = 1; i <= n; ++i) {
            tasks.push_back({Check::Entropy, 0, ExactRational(i, n + 1)});
            tasks.back().t.canonicalize();
        }
    }
    return indexed_map<VerificationReport>(tasks.size(), opts.exec, [&](std::size_t i) {
        const Task& task = tasks[i];
        switch (task.check) {
        case Check::InverseK:
            return verify_phi_at_inverse_k(task.k, opts);
        case Check::Tenth:
            return verify_phi_at_tenth(task.k, opts);
        case Check::TenthPower:
            return verify_phi_at_tenth_power_form(task.k, opts);
        case Check::MaxTerm:
            return verify_max_binomial_term(task.k, opts);
        case Check::Entropy:
            break;
        }
        return verify_entropy_aux(task.t, opts);
    });
}

// ---------------------------------------------------------------------------
// The second-order identity

OdeCoefficients ode_coefficients(unsigned k, const ExactRational& x, Precision prec) {
    require_k(k, 1);
    auto co = detail::ode_coefficients(k, pk(k, prec), x, prec);
    return {std::move(co.a), std::move(co.b), std::move(co.c)};
}

Interval ode_residual(unsigned k, const ExactRational& x, Precision prec) {
    require_k(k, 1);
    return detail::ode_residual(k, pk(k, prec), x, prec);
}

long residual_width_exponent(Precision prec) { return -static_cast<long>(25 * prec / 32); }

VerificationReport residual_verdict(std::string case_id, Interval residual) {
    VerificationReport r;
    r.case_id = std::move(case_id);
    r.precision = residual.precision();
    if (!residual.contains_zero()) {
        r.verdict = Verdict::CertainFalse;
    } else if (residual.width_at_most_pow2(residual_width_exponent(r.precision))) {
        r.verdict = Verdict::CertainTrue;
    } else {
        r.verdict = Verdict::Undecided;
    }
    r.value = std::move(residual);
    return r;
}

VerificationReport verify_ode_residual(unsigned k, const ExactRational& x, const VerifyOptions& opts) {
    const std::string id = case_kx(k, x) + " residual";
    return escalate_report([&](Precision prec) { return residual_verdict(id, ode_residual(k, x, prec)); },
                           opts.prec, opts.cap);
}

std::vector<VerificationReport> verify_ck_negative(unsigned k, const GridSpec& grid,
                                                   const VerifyOptions& opts) {
    require_k(k, 2);
    const auto points = grid.points();
    if (points.front() < kTenth || points.back() >= kHalf) {
        throw DomainError("c_k grid must lie in [1/10, 1/2)");
    }
    return indexed_map<VerificationReport>(points.size(), opts.exec, [&](std::size_t i) {
        return escalate_report(
            [&](Precision prec) {
                return sign_report(case_kx(k, points[i]) + " c_k<0",
                                   ode_coefficients(k, points[i], prec).c, true);
            },
            opts.prec, opts.cap);
    });
}

// ---------------------------------------------------------------------------
// psi_k

Interval psi(unsigned k, const ExactRational& y, Precision prec) {
    require_k(k, 1);
    if (y <= 0) {
        throw DomainError("psi_k is defined for y > 0");
    }
    if (y == 1) {
        return Interval(prec);
    }
    const Interval p = pk(k, prec);
    const Interval alpha = p / static_cast<long>(k);
    const Interval yi = Interval::from_rational(y, prec);
    return p * pow(y, 2 - alpha, prec) + pow(y, 1 - alpha, prec) - yi - p;
}

VerificationReport verify_suff3(unsigned k, const VerifyOptions& opts) {
    require_k(k, 2);
    return escalate_report(
        [&](Precision prec) {
            const Interval p = pk(k, prec);
            const Interval alpha = p / static_cast<long>(k);
            const Interval lhs = pow(ExactRational(9), 2 - alpha, prec);
            const Interval rhs = 1 + 80 / (9 * p + 1);
            VerificationReport r = compare_logs(case_k(k) + " psi(9)>0", log2(rhs), log2(lhs));
            r.value = lhs / rhs;
            return r;
        },
        opts.prec, opts.cap);
}

// ---------------------------------------------------------------------------
// Legendre form

VerificationReport legendre_reformulation_check(unsigned k, const ExactRational& x,
                                                const VerifyOptions& opts) {
    require_k(k, 1);
    if (x <= 0 || x >= 1 || x == kHalf) {
        throw DomainError("Legendre form needs x in (0, 1) with x != 1/2");
    }
    std::string id = case_kx(k, x) + " legendre";
    return escalate_report(
        [&](Precision prec) {
            const Interval f = f_k(k, x, prec);
            const Interval alpha = pk(k, prec) / static_cast<long>(k);
            const Interval a = pow(ExactRational(1 - x), alpha, prec);
            const Interval b = pow(x, alpha, prec);
            const Interval d = a - b;
            const Interval z = (a + b) / d;
            const auto c2 = detail::squared_binomials(k, prec);
            Interval poly(prec);
            for (unsigned j = 0; j <= k; ++j) {
                poly += c2[j] * pow(z + 1, k - j) * pow(z - 1, j);
            }
            poly = poly / Interval::from_integer(ExactInt(1) << k, prec);
            const Interval rhs = pow(d, k) * poly;

            VerificationReport r;
            r.case_id = id;
            r.precision = prec;
            const long limit = -static_cast<long>(prec / 2);
            if (!f.intersects(rhs)) {
                r.verdict = Verdict::CertainFalse;
            } else if (f.width_at_most_pow2(limit) && rhs.width_at_most_pow2(limit)) {
                r.verdict = Verdict::CertainTrue;
            } else {
                r.verdict = Verdict::Undecided;
            }
            r.value = rhs;
            return r;
        },
        opts.prec, opts.cap);
}

}  // namespace binsum
