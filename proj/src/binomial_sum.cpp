#include "binomial_sum.hpp"

namespace binsum::detail {

std::vector<Interval> squared_binomials(unsigned k, Precision prec) {
    std::vector<Interval> out;
    out.reserve(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        const ExactInt c = binomial(k, j);
        out.push_back(Interval::from_integer(c * c, prec));
    }
    return out;
}

namespace {

std::vector<Interval> power_table(const Interval& base, unsigned k, Precision prec) {
    std::vector<Interval> out;
    out.reserve(k + 1);
    out.push_back(Interval::from_int(1, prec));
    for (unsigned i = 1; i <= k; ++i) {
        out.push_back(out.back() * base);
    }
    return out;
}

}  // namespace

Interval mirrored_sum(unsigned k, const Interval& left, const Interval& right, Precision prec) {
    const auto c2 = squared_binomials(k, prec);
    const auto lp = power_table(left, k, prec);
    const auto rp = power_table(right, k, prec);
    auto term = [&](unsigned j) { return c2[j] * (lp[k - j] * rp[j]); };

    Interval sum(prec);
    for (unsigned j = 0; 2 * j <= k; ++j) {
        if (2 * j == k) {
            sum += term(j);
        } else {
            sum += term(j) + term(k - j);
        }
    }
    return sum;
}

Jet binomial_sum_jet(unsigned k, const Interval& total_exponent, const ExactRational& x,
                     Precision prec) {
    if (x <= 0 || x >= 1) {
        throw DomainError("derivatives are evaluated on the open interval (0, 1)");
    }
    const ExactRational y = 1 - x;
    const Interval alpha = total_exponent.with_precision(prec) / static_cast<long>(k);
    const Interval left = pow(y, alpha, prec);
    const Interval right = pow(x, alpha, prec);
    const Interval xi = Interval::from_rational(x, prec);
    const Interval yi = Interval::from_rational(y, prec);
    const Interval x2 = square(xi);
    const Interval y2 = square(yi);

    const auto c2 = squared_binomials(k, prec);
    const auto lp = power_table(left, k, prec);
    const auto rp = power_table(right, k, prec);

    Jet jet{Interval(prec), Interval(prec), Interval(prec)};
    for (unsigned j = 0; j <= k; ++j) {
        const Interval t = c2[j] * (lp[k - j] * rp[j]);
        const Interval n = alpha * static_cast<long>(j);
        const Interval m = alpha * static_cast<long>(k - j);
        const Interval g = n / xi - m / yi;
        jet.value += t;
        jet.first += t * g;
        jet.second += t * (square(g) - n / x2 - m / y2);
    }
    return jet;
}

Coefficients ode_coefficients(unsigned k, const Interval& total_exponent, const ExactRational& x,
                              Precision prec) {
    if (x <= 0 || x >= 1) {
        throw DomainError("coefficients are defined on the open interval (0, 1)");
    }
    if (x == ExactRational(1, 2)) {
        // (1-x)^{e/k} = x^{e/k}: the difference and c cancel identically.
        return {Interval(prec), Interval(prec), Interval(prec)};
    }
    const ExactRational y = 1 - x;
    const Interval e = total_exponent.with_precision(prec);
    const Interval alpha = e / static_cast<long>(k);
    const Interval left = pow(y, alpha, prec);
    const Interval right = pow(x, alpha, prec);
    const Interval xi = Interval::from_rational(x, prec);
    const Interval yi = Interval::from_rational(y, prec);
    const Interval diff = left - right;
    const Interval em1 = e - 1;

    Interval a = square(yi) * square(xi) * square(diff);
    Interval b = yi * xi * diff * (left * (1 + 2 * em1 * xi) + right * (1 + 2 * em1 * yi));
    Interval c = square(left) * xi * (1 + em1 * xi) + square(right) * yi * (1 + em1 * yi) -
                 left * right * (e - 2 * em1 * yi * xi);
    return {std::move(a), std::move(b), std::move(c)};
}

Interval ode_residual(unsigned k, const Interval& total_exponent, const ExactRational& x,
                      Precision prec) {
    const Coefficients co = ode_coefficients(k, total_exponent, x, prec);
    const Jet jet = binomial_sum_jet(k, total_exponent, x, prec);
    return co.a * jet.second + co.b * jet.first +
           total_exponent.with_precision(prec) * co.c * jet.value;
}

}  // namespace binsum::detail
