#include "binsum/means.hpp"

#include "binomial_sum.hpp"

#include <algorithm>

namespace binsum {

namespace {

const ExactRational kHalf(1, 2);

ExactRational canonical(ExactRational q) {
    q.canonicalize();
    return q;
}

void require_nonnegative(const ExactRational& x, const ExactRational& y) {
    if (x < 0 || y < 0) {
        throw DomainError("means are taken of nonnegative numbers");
    }
}

std::string pair_id(unsigned k, const MeanPair& p) {
    return "k=" + std::to_string(k) + " x=" + p.first.get_str() + " y=" + p.second.get_str();
}

/// Inner sum of the Whiteley mean, exactly.
ExactRational whiteley_inner(unsigned k, const ExactRational& x, const ExactRational& y) {
    ExactRational sum;
    std::vector<ExactRational> xpow(k + 1, ExactRational(1));
    for (unsigned i = 1; i <= k; ++i) {
        xpow[i] = canonical(xpow[i - 1] * x);
    }
    ExactRational yp(1);
    for (unsigned j = 0; j <= k; ++j) {
        const ExactInt c = binomial(k, j);
        sum += ExactRational(c * c) * xpow[k - j] * yp;
        yp = canonical(yp * y);
    }
    return canonical(sum / ExactRational(binomial(2 * k, k)));
}

void finish(MeanComparisonReport& m) {
    for (const auto& r : m.reports) {
        m.counts.add(r.verdict);
        if (r.margin && (!m.worst_margin || mpfr_less_p(r.margin->lo(), m.worst_margin->lo()))) {
            m.worst_margin = r.margin;
        }
    }
}

}  // namespace

Interval whiteley_mean(unsigned k, const ExactRational& x, const ExactRational& y, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    require_nonnegative(x, y);
    if (x == y) {
        return Interval::from_rational(x, prec);
    }
    return rational_pow(whiteley_inner(k, x, y), ExactRational(1, k), prec);
}

Interval power_mean(const ExactRational& r, const ExactRational& x, const ExactRational& y,
                    Precision prec) {
    require_nonnegative(x, y);
    if (x == y) {
        return Interval::from_rational(x, prec);
    }
    if (sgn(r) <= 0 && (x == 0 || y == 0)) {
        return Interval(prec);
    }
    if (r == 0) {
        return rational_pow(canonical(x * y), kHalf, prec);
    }
    // Smaller argument first, so the mean is symmetric bit for bit.
    const ExactRational& a = std::min(x, y);
    const ExactRational& b = std::max(x, y);
    const ExactRational inv = canonical(1 / r);
    const auto ea = exact_rational_pow(a, r);
    const auto eb = exact_rational_pow(b, r);
    if (ea && eb) {
        return rational_pow(canonical((*ea + *eb) / 2), inv, prec);
    }
    const Interval s = (rational_pow(a, r, prec) + rational_pow(b, r, prec)) / 2;
    return pow(s, Interval::from_rational(inv, prec));
}

Interval power_mean(const Interval& r, const ExactRational& x, const ExactRational& y) {
    require_nonnegative(x, y);
    const Precision prec = r.precision();
    if (!r.is_positive()) {
        throw DomainError("interval exponent must be positive");
    }
    if (x == y) {
        return Interval::from_rational(x, prec);
    }
    const ExactRational& a = std::min(x, y);
    const ExactRational& b = std::max(x, y);
    const Interval s = (pow(a, r, prec) + pow(b, r, prec)) / 2;
    return pow(s, 1 / r);
}

Interval r_k(unsigned k, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    if (k == 1) {
        return Interval::from_int(1, prec);
    }
    return static_cast<long>(k) / pk(k, prec);
}

Certainty r_k_range_check(unsigned k, Precision prec) {
    if (k == 1) {
        return Certainty::CertainTrue;
    }
    const Interval r = r_k(k, prec);
    return both(certified_compare(Interval::from_rational(kHalf, prec), r),
                certified_compare(r, Interval::from_int(1, prec)));
}

std::vector<MeanPair> ray_grid(std::size_t n, const ExactRational& lo, const ExactRational& hi) {
    std::vector<MeanPair> out;
    for (auto& x : GridSpec::closed(lo, hi, n).points()) {
        out.emplace_back(std::move(x), ExactRational(1));
    }
    return out;
}

MeanComparisonReport verify_upper(unsigned k, const std::vector<MeanPair>& pairs,
                                  const VerifyOptions& opts) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    MeanComparisonReport m;
    m.k = k;
    m.exponent = "r_k";
    m.reports = indexed_map<VerificationReport>(pairs.size(), opts.exec, [&](std::size_t i) {
        const auto& [x, y] = pairs[i];
        require_nonnegative(x, y);
        std::string id = pair_id(k, pairs[i]) + " upper";
        if (k == 1 || x == y || x == 0 || y == 0) {
            // Zero argument: both sides are max(x,y) C(2k,k)^{-1/k} = max(x,y) 2^{-1/r_k}.
            return exact_equality(std::move(id), opts.prec);
        }
        return escalate_report(
            [&](Precision prec) {
                return compare_logs(id, log2(whiteley_mean(k, x, y, prec)),
                                    log2(power_mean(r_k(k, prec), x, y)));
            },
            opts.prec, opts.cap);
    });
    finish(m);
    return m;
}

MeanComparisonReport verify_lower(unsigned k, const std::vector<MeanPair>& pairs,
                                  const VerifyOptions& opts, bool prior_bounds) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    const ExactRational r(k, 2 * k - 1);
    const std::size_t per_pair = prior_bounds ? 3 : 1;
    MeanComparisonReport m;
    m.k = k;
    m.exponent = canonical(r).get_str();
    m.reports = indexed_map<VerificationReport>(pairs.size() * per_pair, opts.exec, [&](std::size_t i) {
        const MeanPair& pair = pairs[i / per_pair];
        const auto& [x, y] = pair;
        require_nonnegative(x, y);
        const bool zero_arg = x == 0 || y == 0;
        switch (i % per_pair) {
        case 0: {
            std::string id = pair_id(k, pair) + " lower";
            if (k == 1 || x == y) {
                return exact_equality(std::move(id), opts.prec);
            }
            auto eval = [&](Precision prec) {
                return compare_logs(id, log2(power_mean(r, x, y, prec)), log2(whiteley_mean(k, x, y, prec)));
            };
            if (zero_arg) {
                // C(2k,k)^{-1/k} against 2^{-(2k-1)/k}: C(2k,k) < 2^{2k-1} for k >= 2.
                VerificationReport rep = eval(opts.prec);
                ExactInt two_pow(1);
                two_pow <<= 2 * k - 1;
                rep.verdict = binomial(2 * k, k) < two_pow ? Verdict::CertainTrue : Verdict::CertainFalse;
                return rep;
            }
            return escalate_report(eval, opts.prec, opts.cap);
        }
        case 1: {
            std::string id = pair_id(k, pair) + " prior lower";
            if (x == y) {
                return exact_equality(std::move(id), opts.prec);
            }
            return escalate_report(
                [&](Precision prec) {
                    return compare_logs(id, log2(power_mean(kHalf, x, y, prec)),
                                        log2(whiteley_mean(k, x, y, prec)));
                },
                opts.prec, opts.cap);
        }
        default: {
            std::string id = pair_id(k, pair) + " prior upper";
            if (zero_arg) {
                // 2^{2-1/r_k} max(x,y)/4 = max(x,y) C(2k,k)^{-1/k}.
                return exact_equality(std::move(id), opts.prec);
            }
            return escalate_report(
                [&](Precision prec) {
                    const Interval scale = 2 - pk(k, prec) / static_cast<long>(k);
                    return compare_logs(id, log2(whiteley_mean(k, x, y, prec)),
                                        scale + log2(power_mean(kHalf, x, y, prec)));
                },
                opts.prec, opts.cap);
        }
        }
    });
    finish(m);
    return m;
}

Interval expansion_coefficient(unsigned k, const ExactRational& eps, Precision prec) {
    if (eps <= 0 || eps >= 1) {
        throw DomainError("eps must lie in (0, 1)");
    }
    const Interval w = whiteley_mean(k, canonical(1 + eps), canonical(1 - eps), prec);
    return (1 - w) / Interval::from_rational(canonical(eps * eps), prec);
}

ExactRational expansion_limit(unsigned k) { return canonical(ExactRational(k - 1, 2 * (2 * k - 1))); }

Interval h_k(unsigned k, const ExactRational& x, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    if (x < 0 || x > 1) {
        throw DomainError("h_k is defined on [0, 1]");
    }
    if (k == 1 || x == 0 || x == 1) {
        return Interval::from_int(1, prec);
    }
    if (x == kHalf) {
        return Interval::from_rational(h_k_half(k), prec);
    }
    const ExactRational alpha(2 * k - 1, k);
    return detail::mirrored_sum(k, rational_pow(canonical(1 - x), alpha, prec), rational_pow(x, alpha, prec),
                                prec);
}

ExactRational h_k_half(unsigned k) {
    ExactInt den(1);
    den <<= 2 * k - 1;
    return canonical(ExactRational(binomial(2 * k, k), den));
}

MeanComparisonReport verify_hk_min(unsigned k, const GridSpec& grid, const VerifyOptions& opts) {
    const auto points = grid.points();
    if (points.front() < 0 || points.back() > 1) {
        throw DomainError("h_k grid must lie in [0, 1]");
    }
    const ExactRational half_value = h_k_half(k);
    MeanComparisonReport m;
    m.k = k;
    m.exponent = std::to_string(2 * k - 1) + "/" + std::to_string(k);
    m.reports = indexed_map<VerificationReport>(points.size(), opts.exec, [&](std::size_t i) {
        const ExactRational& x = points[i];
        std::string id = "k=" + std::to_string(k) + " x=" + x.get_str() + " h_k>=h_k(1/2)";
        if (k == 1 || x == kHalf) {
            return exact_equality(std::move(id), opts.prec);
        }
        auto eval = [&](Precision prec) {
            return compare_logs(id, log2(Interval::from_rational(half_value, prec)), log2(h_k(k, x, prec)));
        };
        if (x == 0 || x == 1) {
            // h_k = 1 at the endpoints: an exact rational comparison.
            VerificationReport rep = eval(opts.prec);
            rep.verdict = half_value < 1 ? Verdict::CertainTrue
                          : half_value == 1 ? Verdict::ExactEquality
                                            : Verdict::CertainFalse;
            return rep;
        }
        return escalate_report(eval, opts.prec, opts.cap);
    });
    finish(m);
    return m;
}

Interval hk_ode_residual(unsigned k, const ExactRational& x, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    return detail::ode_residual(k, Interval::from_int(2 * static_cast<long>(k) - 1, prec), x, prec);
}

VerificationReport verify_hk_ode_residual(unsigned k, const ExactRational& x, const VerifyOptions& opts) {
    const std::string id = "k=" + std::to_string(k) + " x=" + x.get_str() + " h_k residual";
    return escalate_report([&](Precision prec) { return residual_verdict(id, hk_ode_residual(k, x, prec)); },
                           opts.prec, opts.cap);
}

Interval tilde_c(unsigned k, const ExactRational& x, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    return detail::ode_coefficients(k, Interval::from_int(2 * static_cast<long>(k) - 1, prec), x, prec).c;
}

Interval tilde_c_factored(unsigned k, const ExactRational& x, Precision prec) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    if (x <= 0 || x >= 1) {
        throw DomainError("the z-substitution needs x in (0, 1)");
    }
    const Interval z = rational_pow(canonical((1 - x) / x), ExactRational(1, k), prec);
    Interval sum(prec);
    for (unsigned i = 1; i < k; ++i) {
        const Interval zi = pow(z, i);
        sum += zi + 1 / zi - 2;
    }
    return (z - 1) * (pow(z, 2 * k - 1) - 1) * sum;
}

std::vector<VerificationReport> tilde_c_positivity(unsigned k, const GridSpec& grid,
                                                   const VerifyOptions& opts) {
    if (k < 2) {
        throw DomainError("positivity is claimed for k >= 2");
    }
    const auto points = grid.points();
    if (points.front() <= 0 || points.back() >= kHalf) {
        throw DomainError("positivity grid must lie in (0, 1/2)");
    }
    return indexed_map<VerificationReport>(2 * points.size(), opts.exec, [&](std::size_t i) {
        const ExactRational& x = points[i / 2];
        const bool factored = i % 2 == 1;
        const std::string id = "k=" + std::to_string(k) + " x=" + x.get_str() +
                               (factored ? " factored>0" : " tilde_c>0");
        return escalate_report(
            [&](Precision prec) {
                const Interval v = factored ? tilde_c_factored(k, x, prec) : tilde_c(k, x, prec);
                VerificationReport r;
                r.case_id = id;
                r.precision = prec;
                r.verdict = to_verdict(certified_compare(Interval(prec), v));
                r.margin = v;
                r.value = v;
                return r;
            },
            opts.prec, opts.cap);
    });
}

}  // namespace binsum
