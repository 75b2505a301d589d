#include "binsum/walk.hpp"

#include "binsum/rng.hpp"
#include "binomial_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace binsum {

namespace {

const ExactRational kHalf(1, 2);

ExactRational canonical(ExactRational q) {
    q.canonicalize();
    return q;
}

ExactRational rational_power(const ExactRational& base, unsigned n) {
    ExactRational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    return out;
}

std::string case_id(const WalkLaw& law, unsigned k) {
    return "k=" + std::to_string(k) + " q=" + law.q.get_str();
}

bool is_exact_equality_case(const WalkLaw& law, unsigned k) {
    return k == 1 || law.q == 0 || law.q == 1 || law.q == kHalf;
}

}  // namespace

WalkLaw WalkLaw::from_q(const ExactRational& q) {
    if (q < 0 || q > 1) {
        throw DomainError("q must lie in [0, 1]");
    }
    return WalkLaw{canonical(q)};
}

WalkLaw WalkLaw::from_right_probability(const ExactRational& p) {
    if (p < 0 || p > kHalf) {
        throw DomainError("P(X=1) must lie in [0, 1/2]");
    }
    return WalkLaw{canonical(2 * p)};
}

ExactRational WalkLaw::left() const { return canonical((1 - q) / 2); }
ExactRational WalkLaw::right() const { return canonical(q / 2); }

ExactRational WalkDistribution::at(long m) const {
    if (m < -static_cast<long>(n) || m > static_cast<long>(n)) {
        return ExactRational(0);
    }
    return probs[static_cast<std::size_t>(m + static_cast<long>(n))];
}

ExactRational WalkDistribution::total() const {
    ExactRational s;
    for (const auto& p : probs) {
        s += p;
    }
    return s;
}

WalkDistribution walk_distribution(const WalkLaw& law, unsigned n) {
    // With q = a/b the step weights over 2b are b-a, b, a; convolve integers
    // and divide by (2b)^n once.
    const ExactInt a = law.q.get_num();
    const ExactInt b = law.q.get_den();
    const ExactInt w[3] = {b - a, b, a};
    std::vector<ExactInt> cur{1};
    for (unsigned step = 0; step < n; ++step) {
        std::vector<ExactInt> next(cur.size() + 2);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == 0) {
                continue;
            }
            for (std::size_t s = 0; s < 3; ++s) {
                next[i + s] += cur[i] * w[s];
            }
        }
        cur.swap(next);
    }
    ExactInt denom;
    const ExactInt two_b = 2 * b;
    mpz_pow_ui(denom.get_mpz_t(), two_b.get_mpz_t(), n);
    WalkDistribution out;
    out.n = n;
    out.probs.reserve(cur.size());
    for (const auto& c : cur) {
        out.probs.push_back(canonical(ExactRational(c, denom)));
    }
    return out;
}

WalkDistribution convolve(const WalkDistribution& a, const WalkDistribution& b) {
    WalkDistribution out;
    out.n = a.n + b.n;
    out.probs.assign(a.probs.size() + b.probs.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < a.probs.size(); ++i) {
        for (std::size_t j = 0; j < b.probs.size(); ++j) {
            out.probs[i + j] += a.probs[i] * b.probs[j];
        }
    }
    for (auto& p : out.probs) {
        p.canonicalize();
    }
    return out;
}

EndpointProbs endpoint_probs(const WalkLaw& law, unsigned k) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    return {rational_power(law.left(), k), middle_probability_formula(law, k),
            rational_power(law.right(), k)};
}

ExactRational middle_probability_formula(const WalkLaw& law, unsigned k) {
    const ExactRational s = 1 - law.q;
    ExactRational sum;
    for (unsigned j = 0; j <= k; ++j) {
        const ExactInt c = binomial(k, j);
        sum += ExactRational(c * c) * rational_power(s, k - j) * rational_power(law.q, j);
    }
    ExactInt two_k(1);
    two_k <<= k;
    return canonical(sum / ExactRational(two_k));
}

namespace {

template <class Exponent>
VerificationReport probineq_report(const EndpointProbs& e, std::string id, Exponent&& exponent,
                                   const VerifyOptions& opts) {
    return escalate_report(
        [&](Precision prec) {
            const Interval inv = 1 / exponent(prec);
            const Interval lhs = pow(e.middle, inv, prec);
            const Interval rhs = pow(e.left, inv, prec) + pow(e.right, inv, prec);
            return compare_logs(id, log2(lhs), log2(rhs));
        },
        opts.prec, opts.cap);
}

}  // namespace

VerificationReport verify_probineq(const WalkLaw& law, unsigned k, const VerifyOptions& opts,
                                   const std::optional<ExactRational>& exponent) {
    const EndpointProbs e = endpoint_probs(law, k);
    std::string id = case_id(law, k);
    // p_1 = 1 is the only rational p_k, so only k = 1 can see its own exponent.
    const bool override = exponent && !(k == 1 && *exponent == 1);
    if (override) {
        if (*exponent <= 0) {
            throw DomainError("exponent must be positive");
        }
        id += " p=" + exponent->get_str();
        // One endpoint empty and the other equal to the middle: equality for any p.
        if ((e.left == 0 || e.right == 0) && e.middle == e.left + e.right) {
            return exact_equality(std::move(id), opts.prec);
        }
        return probineq_report(e, std::move(id),
                               [&](Precision prec) { return Interval::from_rational(*exponent, prec); },
                               opts);
    }
    if (is_exact_equality_case(law, k)) {
        // q = 0, 1: both sides are one endpoint term; q = 1/2: C(2k,k)^{1/p_k} = 2.
        return exact_equality(std::move(id), opts.prec);
    }
    return probineq_report(e, std::move(id), [&](Precision prec) { return pk(k, prec); }, opts);
}

VerificationReport equivalence_check(const WalkLaw& law, unsigned k, const VerifyOptions& opts) {
    const EndpointProbs e = endpoint_probs(law, k);
    const WalkDistribution dist = walk_distribution(law, k);
    const ExactRational left = law.left();
    const ExactRational right = law.right();
    std::string id = case_id(law, k) + " equivalence";
    return escalate_report(
        [&](Precision prec) {
            const Interval p = pk(k, prec);
            const Interval kp = static_cast<long>(k) / p;
            // Walk side, raised to p_k.
            const Interval walk_lhs = Interval::from_rational(dist.at(0), prec);
            const Interval walk_rhs = pow(pow(e.left, 1 / p, prec) + pow(e.right, 1 / p, prec), p);
            // Main-inequality side at the substituted (a, b).
            const Interval a = pow(left, kp, prec);
            const Interval b = pow(right, kp, prec);
            const Interval main_lhs = detail::mirrored_sum(k, pow(a, 1 / kp), pow(b, 1 / kp), prec);
            const Interval main_rhs = pow(a + b, p);

            VerificationReport r;
            r.case_id = id;
            r.precision = prec;
            const long limit = -static_cast<long>(prec / 2);
            auto narrow = [&](const Interval& x) { return x.width_at_most_pow2(limit); };
            if (!walk_lhs.intersects(main_lhs) || !walk_rhs.intersects(main_rhs)) {
                r.verdict = Verdict::CertainFalse;
            } else if (narrow(walk_lhs) && narrow(walk_rhs) && narrow(main_lhs) && narrow(main_rhs)) {
                r.verdict = Verdict::CertainTrue;
            } else {
                r.verdict = Verdict::Undecided;
            }
            r.value = main_rhs - main_lhs;
            return r;
        },
        opts.prec, opts.cap);
}

VerificationReport sharpness_scan(unsigned k, const ExactRational& deficit, const VerifyOptions& opts) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    if (deficit <= 0) {
        throw DomainError("deficit must be positive");
    }
    if (certified_compare(Interval::from_rational(deficit, opts.cap), pk(k, opts.cap)) !=
        Certainty::CertainTrue) {
        throw DomainError("deficit must be below p_k");
    }
    const WalkLaw law = WalkLaw::from_q(kHalf);
    return probineq_report(
        endpoint_probs(law, k), case_id(law, k) + " p=p_k-" + deficit.get_str(),
        [&](Precision prec) { return pk(k, prec) - Interval::from_rational(deficit, prec); }, opts);
}

SimulationResult simulate(const WalkLaw& law, unsigned k, std::uint64_t trials, std::uint64_t seed,
                          Exec exec) {
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    const ExactInt a = law.q.get_num();
    const ExactInt b = law.q.get_den();
    if (!mpz_fits_ulong_p(b.get_mpz_t()) || b.get_ui() > (std::numeric_limits<std::uint64_t>::max() >> 1)) {
        throw DomainError("q denominator too large for simulation");
    }
    // Draw r uniform in [0, 2b): left below b-a, stay below 2b-a, right above.
    const std::uint64_t range = 2 * b.get_ui();
    const std::uint64_t left_cut = b.get_ui() - a.get_ui();
    const std::uint64_t stay_cut = range - a.get_ui();

    struct Tally {
        std::uint64_t left = 0;
        std::uint64_t middle = 0;
        std::uint64_t right = 0;
        std::uint64_t negative = 0;
    };
    const std::uint64_t chunks = (trials + kSimulationChunk - 1) / kSimulationChunk;
    auto tallies = indexed_map<Tally>(chunks, exec, [&](std::size_t c) {
        Xoshiro256 rng(seed, c);
        const std::uint64_t begin = c * kSimulationChunk;
        const std::uint64_t end = std::min(trials, begin + kSimulationChunk);
        Tally t;
        for (std::uint64_t i = begin; i < end; ++i) {
            long s = 0;
            for (unsigned step = 0; step < k; ++step) {
                const std::uint64_t r = rng.below(range);
                s += r < left_cut ? -1 : r < stay_cut ? 0 : 1;
            }
            t.left += s == -static_cast<long>(k);
            t.middle += s == 0;
            t.right += s == static_cast<long>(k);
            t.negative += s < 0;
        }
        return t;
    });
    Tally total;
    for (const auto& t : tallies) {
        total.left += t.left;
        total.middle += t.middle;
        total.right += t.right;
        total.negative += t.negative;
    }

    const EndpointProbs exact = endpoint_probs(law, k);
    SimulationResult out;
    out.trials = trials;
    out.seed = seed;
    out.k = k;
    out.q = law.q;
    out.negative = total.negative;
    out.endpoints = {{-static_cast<long>(k), total.left, exact.left, 0},
                     {0, total.middle, exact.middle, 0},
                     {static_cast<long>(k), total.right, exact.right, 0}};
    bool contradicted = false;
    for (auto& ep : out.endpoints) {
        if (ep.exact == 0 || ep.exact == 1) {
            const bool consistent = ep.exact == 0 ? ep.count == 0 : ep.count == trials;
            contradicted = contradicted || !consistent;
            ep.z = consistent ? 0.0 : std::numeric_limits<double>::infinity();
        } else {
            const double p = ep.exact.get_d();
            const double freq = static_cast<double>(ep.count) / static_cast<double>(trials);
            ep.z = (freq - p) * std::sqrt(static_cast<double>(trials) / (p * (1 - p)));
        }
        out.max_abs_z = std::max(out.max_abs_z, std::abs(ep.z));
    }
    if (law.q == 1 && total.negative != 0) {
        contradicted = true;
    }
    out.verdict = contradicted              ? Verdict::CertainFalse
                  : out.max_abs_z <= 4.0 ? Verdict::CertainTrue
                                          : Verdict::Undecided;
    return out;
}

}  // namespace binsum
