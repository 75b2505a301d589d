#pragma once

// Shared evaluation of S(x) = sum_j C(k,j)^2 (1-x)^{e(k-j)/k} x^{e j/k} and its
// first two derivatives, for an arbitrary total exponent e. Used with e = p_k
// (f_k) and e = 2k - 1 (h_k).

#include "binsum/certified.hpp"

#include <vector>

namespace binsum::detail {

std::vector<Interval> squared_binomials(unsigned k, Precision prec);

/// sum_j C(k,j)^2 left^{k-j} right^j, summed in mirrored pairs (j, k-j) so that
/// swapping `left` and `right` yields a bit-identical result.
Interval mirrored_sum(unsigned k, const Interval& left, const Interval& right, Precision prec);

struct Jet {
    Interval value;
    Interval first;
    Interval second;
};

/// S, S', S'' at an interior point 0 < x < 1 with term-wise analytic
/// derivatives.
Jet binomial_sum_jet(unsigned k, const Interval& total_exponent, const ExactRational& x,
                     Precision prec);

struct Coefficients {
    Interval a;
    Interval b;
    Interval c;
};

/// a, b, c of the second-order identity a S'' + b S' + e c S = 0 for the
/// total exponent e. At x = 1/2 the factor (1-x)^{e/k} - x^{e/k} and c vanish
/// exactly and are returned as exact zeros.
Coefficients ode_coefficients(unsigned k, const Interval& total_exponent, const ExactRational& x,
                              Precision prec);

Interval ode_residual(unsigned k, const Interval& total_exponent, const ExactRational& x,
                      Precision prec);

}  // namespace binsum::detail
