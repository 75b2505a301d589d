#pragma once

// Whiteley and power means of two numbers, and the comparisons between them.

#include "binsum/certified.hpp"
#include "binsum/inequality.hpp"
#include "binsum/verdict.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binsum {

/// (sum_j C(k,j)^2 x^{k-j} y^j / C(2k,k))^{1/k}; the inner sum is exact.
Interval whiteley_mean(unsigned k, const ExactRational& x, const ExactRational& y, Precision prec);

/// ((x^r + y^r)/2)^{1/r}; sqrt(xy) at r = 0; exact 0 when r <= 0 and x or y is 0.
Interval power_mean(const ExactRational& r, const ExactRational& x, const ExactRational& y,
                    Precision prec);
/// Same for an irrational exponent r > 0.
Interval power_mean(const Interval& r, const ExactRational& x, const ExactRational& y);

/// k / p_k; exactly 1 at k = 1.
Interval r_k(unsigned k, Precision prec);

/// r_k lies in (1/2, 1].
Certainty r_k_range_check(unsigned k, Precision prec);

using MeanPair = std::pair<ExactRational, ExactRational>;

/// n points (x, 1) with x evenly spaced over [lo, hi].
std::vector<MeanPair> ray_grid(std::size_t n, const ExactRational& lo = 0, const ExactRational& hi = 4);

struct MeanComparisonReport {
    unsigned k = 0;
    std::string exponent;
    std::vector<VerificationReport> reports;
    VerdictCounts counts;
    /// The margin with the smallest lower endpoint.
    std::optional<Interval> worst_margin;
};

/// Whiteley mean <= power mean of exponent r_k at every pair.
MeanComparisonReport verify_upper(unsigned k, const std::vector<MeanPair>& pairs,
                                  const VerifyOptions& opts = {});

/// Whiteley mean >= power mean of exponent k/(2k-1) at every pair; with
/// `prior_bounds` also >= the exponent-1/2 mean and <= 2^{2-1/r_k} times it.
MeanComparisonReport verify_lower(unsigned k, const std::vector<MeanPair>& pairs,
                                  const VerifyOptions& opts = {}, bool prior_bounds = false);

/// (1 - whiteley_mean(k, 1+eps, 1-eps)) / eps^2, close to (k-1)/(2(2k-1)).
Interval expansion_coefficient(unsigned k, const ExactRational& eps, Precision prec);

/// (k-1)/(2(2k-1)).
ExactRational expansion_limit(unsigned k);

/// h_k(x) = sum_j C(k,j)^2 (1-x)^{(2k-1)(k-j)/k} x^{(2k-1)j/k}, with 0^0 = 1.
Interval h_k(unsigned k, const ExactRational& x, Precision prec);

/// h_k(1/2) = C(2k,k) / 2^{2k-1}.
ExactRational h_k_half(unsigned k);

/// h_k(x) >= h_k(1/2) on the grid.
MeanComparisonReport verify_hk_min(unsigned k, const GridSpec& grid, const VerifyOptions& opts = {});

/// a h'' + b h' + (2k-1) c h with the coefficients for exponent 2k - 1.
Interval hk_ode_residual(unsigned k, const ExactRational& x, Precision prec);
VerificationReport verify_hk_ode_residual(unsigned k, const ExactRational& x,
                                          const VerifyOptions& opts = {});

/// Coefficient c of the h_k identity.
Interval tilde_c(unsigned k, const ExactRational& x, Precision prec);

/// (z-1)(z^{2k-1}-1) sum_{i=1}^{k-1} (z^i + z^{-i} - 2) at z = ((1-x)/x)^{1/k}.
Interval tilde_c_factored(unsigned k, const ExactRational& x, Precision prec);

/// Two reports per grid point in (0, 1/2): tilde_c > 0 and the factored
/// form > 0, checked independently. Requires k >= 2.
std::vector<VerificationReport> tilde_c_positivity(unsigned k, const GridSpec& grid,
                                                   const VerifyOptions& opts = {});

}  // namespace binsum
