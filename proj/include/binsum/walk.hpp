#pragma once

// Lazy simple random walk: steps -1, 0, +1 with probabilities (1-q)/2, 1/2, q/2.

#include "binsum/certified.hpp"
#include "binsum/verdict.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace binsum {

struct WalkLaw {
    ExactRational q;

    /// q in [0, 1].
    static WalkLaw from_q(const ExactRational& q);
    /// P(X = 1) in [0, 1/2]; q = 2 P(X = 1).
    static WalkLaw from_right_probability(const ExactRational& p);

    ExactRational left() const;
    ExactRational stay() const { return ExactRational(1, 2); }
    ExactRational right() const;
};

/// probs[m + n] = P(S_n = m) for m in -n..n.
struct WalkDistribution {
    unsigned n = 0;
    std::vector<ExactRational> probs;

    ExactRational at(long m) const;
    ExactRational total() const;
};

WalkDistribution walk_distribution(const WalkLaw& law, unsigned n);
WalkDistribution convolve(const WalkDistribution& a, const WalkDistribution& b);

struct EndpointProbs {
    ExactRational left;    // P(S_k = -k)
    ExactRational middle;  // P(S_k = 0)
    ExactRational right;   // P(S_k = k)
};

EndpointProbs endpoint_probs(const WalkLaw& law, unsigned k);

/// 2^{-k} sum_j C(k,j)^2 (1-q)^{k-j} q^j, the closed form of P(S_k = 0).
ExactRational middle_probability_formula(const WalkLaw& law, unsigned k);

/// P(S_k=0)^{1/p} <= P(S_k=-k)^{1/p} + P(S_k=k)^{1/p} with p = p_k unless an
/// exponent is given. Exact equality at q in {0, 1/2, 1} and for k = 1.
VerificationReport verify_probineq(const WalkLaw& law, unsigned k, const VerifyOptions& opts = {},
                                   const std::optional<ExactRational>& exponent = std::nullopt);

/// Both sides of the walk inequality, raised to the power p_k, against both
/// sides of the main inequality at a = ((1-q)/2)^{k/p_k}, b = (q/2)^{k/p_k}.
/// CertainTrue when each pair of enclosures intersects and all are narrower
/// than 2^{-prec/2}.
VerificationReport equivalence_check(const WalkLaw& law, unsigned k, const VerifyOptions& opts = {});

/// The walk inequality at q = 1/2 with exponent p_k - deficit. It fails for
/// every 0 < deficit < p_k, so the expected verdict is CertainFalse.
VerificationReport sharpness_scan(unsigned k, const ExactRational& deficit, const VerifyOptions& opts = {});

struct EndpointStats {
    long value = 0;
    std::uint64_t count = 0;
    ExactRational exact;
    double z = 0;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned k = 0;
    ExactRational q;
    /// S_k = -k, 0, k in this order.
    std::vector<EndpointStats> endpoints;
    std::uint64_t negative = 0;
    double max_abs_z = 0;
    /// CertainTrue when every |z| <= 4; CertainFalse when an event of exact
    /// probability 0 or 1 is contradicted; Undecided otherwise.
    Verdict verdict = Verdict::Undecided;
};

inline constexpr std::uint64_t kSimulationChunk = std::uint64_t{1} << 16;

/// Trials are split into chunks of 2^16; chunk c draws from stream (seed, c).
SimulationResult simulate(const WalkLaw& law, unsigned k, std::uint64_t trials, std::uint64_t seed,
                          Exec exec = Exec::Parallel);

}  // namespace binsum
