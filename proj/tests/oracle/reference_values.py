#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Every value here is computed with mpmath at 80 significant digits, directly
from the defining formulas (no interval arithmetic, no shared code with the
library).  Run once and commit the generated header:

    python3 tests/oracle/reference_values.py > tests/reference_values.hpp
"""

from fractions import Fraction
from math import comb

import mpmath as mp

mp.mp.dps = 80
DIGITS = 45


def R(v):
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpf(v)


def pk(k):
    return mp.log(comb(2 * k, k), 2)


def f(k, x, p=None):
    p = pk(k) if p is None else p
    x = R(x)
    return mp.fsum(comb(k, j) ** 2 * (1 - x) ** (p * (k - j) / k) * x ** (p * j / k)
                   for j in range(k + 1))


def binomialwise(k, j, x):
    p = pk(k)
    x = R(x)
    lhs = comb(k, j) * (1 - x) ** (p * (k - j) / k) * x ** (p * j / k)
    rhs = (1 - x) ** (k - j) * x ** j
    return lhs, rhs


def phi(k, t):
    w = 2 * k - pk(k)
    t = R(t)
    return (w * t + mp.mpf(1) / 2) * mp.log(t) + (w * (1 - t) + mp.mpf(1) / 2) * mp.log(1 - t) \
        + mp.log(2 * mp.pi * k) / 2


def t_crit(k):
    return mp.mpf(1) / 2 - mp.sqrt(1 - 2 / (2 * k + 1 - pk(k))) / 2


def coeffs(k, x, p=None):
    p = pk(k) if p is None else mp.mpf(p)
    x = R(x)
    al = p / k
    A = (1 - x) ** al
    B = x ** al
    a = (1 - x) ** 2 * x ** 2 * (A - B) ** 2
    b = (1 - x) * x * (A - B) * (A * (1 + 2 * (p - 1) * x) + B * (1 + 2 * (p - 1) * (1 - x)))
    c = A ** 2 * x * (1 + (p - 1) * x) + B ** 2 * (1 - x) * (1 + (p - 1) * (1 - x)) \
        - A * B * (p - 2 * (p - 1) * (1 - x) * x)
    return a, b, c


def psi(k, y):
    p = pk(k)
    y = R(y)
    return p * y ** (2 - p / k) + y ** (1 - p / k) - y - p


def legendre_rhs(k, x):
    p = pk(k)
    x = R(x)
    A = (1 - x) ** (p / k)
    B = x ** (p / k)
    D = A - B
    z = (A + B) / D
    P = mp.fsum(comb(k, j) ** 2 * (z + 1) ** (k - j) * (z - 1) ** j for j in range(k + 1)) / 2 ** k
    return D ** k * P


def whiteley(k, x, y):
    x = R(x)
    y = R(y)
    s = mp.fsum(comb(k, j) ** 2 * x ** (k - j) * y ** j for j in range(k + 1)) / comb(2 * k, k)
    return s ** (mp.mpf(1) / k)


def power_mean(r, x, y):
    x = R(x)
    y = R(y)
    if r == 0:
        return mp.sqrt(x * y)
    return ((x ** r + y ** r) / 2) ** (1 / r)


def h(k, x):
    x = R(x)
    e = mp.mpf(2 * k - 1) / k
    return mp.fsum(comb(k, j) ** 2 * (1 - x) ** (e * (k - j)) * x ** (e * j) for j in range(k + 1))


def factored(k, x):
    x = R(x)
    z = ((1 - x) / x) ** (mp.mpf(1) / k)
    return (z - 1) * (z ** (2 * k - 1) - 1) * mp.fsum(z ** i + z ** (-i) - 2 for i in range(1, k))


def stirling_ok(n):
    lhs = mp.sqrt(2 * mp.pi) * mp.mpf(n) ** (n + mp.mpf(1) / 2) * mp.e ** (-n + mp.mpf(1) / (12 * n + 1))
    rhs = mp.sqrt(2 * mp.pi) * mp.mpf(n) ** (n + mp.mpf(1) / 2) * mp.e ** (-n + mp.mpf(1) / (12 * n))
    fac = mp.factorial(n)
    return lhs < fac < rhs


def pk_bounds_ok(k):
    p = pk(k)
    base = 2 * k - mp.log(mp.pi * k, 2) / 2
    ok = base - mp.mpf(1) / (4 * k) < p < base
    if k >= 2:
        ok = ok and k < p < 2 * k - 1
    return ok


def walk_probs(q, k):
    q = R(q)
    p0 = mp.fsum(comb(k, j) ** 2 * (1 - q) ** (k - j) * q ** j for j in range(k + 1)) / 2 ** k
    return ((1 - q) / 2) ** k, p0, (q / 2) ** k


def expansion(k, eps):
    eps = R(eps)
    return (1 - whiteley(k, 1 + eps, 1 - eps)) / eps ** 2


def s(v):
    return mp.nstr(v, DIGITS, strip_zeros=False)


def main():
    vals = {}
    vals["PK_2"] = pk(2)
    vals["PK_10"] = pk(10)
    vals["F2_AT_QUARTER"] = f(2, Fraction(1, 4))
    vals["F5_AT_NINE_TENTHS"] = f(5, Fraction(9, 10))
    vals["LEGENDRE_RHS_2_QUARTER"] = legendre_rhs(2, Fraction(1, 4))
    vals["LEGENDRE_RHS_5_NINE_TENTHS"] = legendre_rhs(5, Fraction(9, 10))
    l, r = binomialwise(5, 2, Fraction(1, 20))
    vals["BINOMIALWISE_5_2_LHS"], vals["BINOMIALWISE_5_2_RHS"] = l, r
    l, r = binomialwise(12, 1, Fraction(1, 10))
    vals["BINOMIALWISE_12_1_LHS"], vals["BINOMIALWISE_12_1_RHS"] = l, r
    vals["PHI_10_TENTH"] = phi(10, Fraction(1, 10))
    vals["PHI_10_HALF"] = phi(10, Fraction(1, 2))
    vals["PHI_50_FIFTIETH"] = phi(50, Fraction(1, 50))
    vals["T_CRIT_10"] = t_crit(10)
    vals["T_CRIT_100"] = t_crit(100)
    a, b, c = coeffs(2, Fraction(1, 4))
    vals["A_2_QUARTER"], vals["B_2_QUARTER"], vals["C_2_QUARTER"] = a, b, c
    a, b, c = coeffs(3, Fraction(1, 100))
    vals["A_3_HUNDREDTH"] = a
    vals["C_5_499"] = coeffs(5, Fraction(499, 1000))[2]
    vals["PSI_3_9"] = psi(3, 9)
    p2 = pk(2)
    vals["SUFF3_2_LHS"] = mp.mpf(9) ** (2 - p2 / 2)
    vals["SUFF3_2_RHS"] = 1 + 80 / (9 * p2 + 1)
    vals["WHITELEY_2_4_0"] = whiteley(2, 4, 0)
    vals["WHITELEY_2_3_1"] = whiteley(2, 3, 1)
    vals["R_2"] = 2 / pk(2)
    vals["POWER_MEAN_R2_3_1"] = power_mean(2 / pk(2), 3, 1)
    vals["POWER_MEAN_TWO_THIRDS_3_1"] = power_mean(mp.mpf(2) / 3, 3, 1)
    vals["POWER_MEAN_HALF_4_1"] = power_mean(mp.mpf(1) / 2, 4, 1)
    vals["WHITELEY_2_4_1"] = whiteley(2, 4, 1)
    vals["H2_AT_QUARTER"] = h(2, Fraction(1, 4))
    vals["CTILDE_2_QUARTER"] = coeffs(2, Fraction(1, 4), 3)[2]
    vals["FACTORED_2_QUARTER"] = factored(2, Fraction(1, 4))
    vals["CTILDE_4_49"] = coeffs(4, Fraction(49, 100), 7)[2]
    vals["FACTORED_4_49"] = factored(4, Fraction(49, 100))
    m, z, pl = walk_probs(Fraction(3, 10), 5)
    p5 = pk(5)
    vals["PROBINEQ_3_10_K5_LHS"] = z ** (1 / p5)
    vals["PROBINEQ_3_10_K5_RHS"] = m ** (1 / p5) + pl ** (1 / p5)
    vals["EXPANSION_2_1E4"] = expansion(2, Fraction(1, 10000))
    vals["EXPANSION_5_1E4"] = expansion(5, Fraction(1, 10000))
    vals["ENERGY_BOUND_3_POINTS"] = mp.mpf(3) ** pk(2)

    flags = {
        "STIRLING_1": stirling_ok(1),
        "STIRLING_100": stirling_ok(100),
        "STIRLING_10000": stirling_ok(10000),
        "PK_BOUNDS_1": pk_bounds_ok(1),
        "PK_BOUNDS_2": pk_bounds_ok(2),
        "PK_BOUNDS_10": pk_bounds_ok(10),
    }

    print("// Generated by tests/oracle/reference_values.py -- do not edit.")
    print("// mpmath at %d digits, printed to %d significant digits." % (mp.mp.dps, DIGITS))
    print("#pragma once\n")
    print("namespace binsum::reference {\n")
    for name, v in vals.items():
        print('inline constexpr const char* k%s = "%s";' % (camel(name), s(v)))
    print()
    for name, v in flags.items():
        print("inline constexpr bool k%s = %s;" % (camel(name), "true" if v else "false"))
    print("\n}  // namespace binsum::reference")


def camel(name):
    return "".join(part.capitalize() if not part[0].isdigit() else part for part in name.split("_"))


if __name__ == "__main__":
    main()
