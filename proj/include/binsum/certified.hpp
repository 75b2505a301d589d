#pragma once

// Exact integers/rationals (GMP) and outward-rounded interval arithmetic
// (MPFR) with tri-state certified comparison.

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace binsum {

using ExactInt = mpz_class;
using ExactRational = mpq_class;
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kDefaultPrecisionCap = 4096;

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when a computation would exceed a configured size budget.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Certainty { CertainTrue, CertainFalse, Undecided };

const char* to_string(Certainty c);

/// Closed interval [lo, hi] of binary floating-point endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper toward
/// +inf, so the exact real result of a composed expression stays enclosed.
/// The precision of a result is the larger of its operands' precisions.
class Interval {
  public:
    explicit Interval(Precision prec = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval from_int(long v, Precision prec);
    static Interval from_integer(const ExactInt& v, Precision prec);
    static Interval from_rational(const ExactRational& v, Precision prec);
    static Interval from_string(const std::string& decimal, Precision prec);
    /// Hull of two enclosures.
    static Interval hull(const Interval& a, const Interval& b);
    static Interval pi(Precision prec);

    Precision precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    bool is_point() const;
    bool is_zero() const;
    bool contains_zero() const;
    bool contains(const ExactRational& v) const;
    bool contains(const Interval& inner) const;
    bool intersects(const Interval& other) const;
    bool is_positive() const;   // lo > 0
    bool is_negative() const;   // hi < 0
    bool is_nonnegative() const;

    /// True when the point interval holds a (small) integer; writes it to *out.
    bool is_point_integer(long* out) const;

    /// hi - lo <= 2^e (upper bound of the width is compared).
    bool width_at_most_pow2(long e) const;
    /// log2 of the (upward-rounded) width; -inf for a point.
    double log2_width() const;

    double lo_double() const;
    double hi_double() const;
    double mid_double() const;

    /// Lower endpoint in scientific notation with `digits` significant digits,
    /// rounded down (so it never overstates the enclosed value).
    std::string lower_string(int digits) const;
    std::string upper_string(int digits) const;
    std::string to_string(int digits) const;

    /// Same interval re-rounded (outward) to a different precision.
    Interval with_precision(Precision prec) const;
    /// Point interval [hi, hi].
    Interval upper_endpoint() const;

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

  private:
    void init(Precision prec);

    Precision prec_;
    mpfr_t lo_;
    mpfr_t hi_;

    friend Interval operator+(const Interval&, const Interval&);
    friend Interval operator-(const Interval&, const Interval&);
    friend Interval operator-(const Interval&);
    friend Interval operator*(const Interval&, const Interval&);
    friend Interval operator/(const Interval&, const Interval&);
    friend Interval square(const Interval&);
    friend Interval exp(const Interval&);
    friend Interval log(const Interval&);
    friend Interval log2(const Interval&);
    friend Interval sqrt(const Interval&);
    friend Interval pow(const Interval&, unsigned long);
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval operator+(const Interval& a, long b);
Interval operator+(long a, const Interval& b);
Interval operator-(const Interval& a, long b);
Interval operator-(long a, const Interval& b);
Interval operator*(const Interval& a, long b);
Interval operator*(long a, const Interval& b);
Interval operator*(const Interval& a, const ExactInt& b);
Interval operator/(const Interval& a, long b);
Interval operator/(long a, const Interval& b);

Interval square(const Interval& a);
Interval exp(const Interval& a);
/// Natural logarithm; throws DomainError unless lo > 0.
Interval log(const Interval& a);
Interval log2(const Interval& a);
Interval sqrt(const Interval& a);
Interval pow(const Interval& base, unsigned long n);
/// base^e for base >= 0 via exp(e * log(base)); integer point exponents use
/// exact powering, and 0^e is 0 for e > 0 and 1 for e == 0.
Interval pow(const Interval& base, const Interval& e);
/// Exact-base convenience: 0 and 1 bases are handled exactly.
Interval pow(const ExactRational& base, const Interval& e, Precision prec);

/// If base^e is rational (base an exact d-th power for e = n/d), return it.
std::optional<ExactRational> exact_rational_pow(const ExactRational& base, const ExactRational& e);
/// base^e for rational base >= 0 and rational exponent, exact when possible.
Interval rational_pow(const ExactRational& base, const ExactRational& e, Precision prec);

/// C(n, r) exactly; throws DomainError when r > n.
ExactInt binomial(unsigned long n, unsigned long r);

/// Enclosure of p_k = log2 C(2k, k).
Interval pk(unsigned long k, Precision prec);

/// Disjointness comparator for the claim a < b: CertainTrue iff a.hi < b.lo,
/// CertainFalse iff a.lo > b.hi, Undecided otherwise.
Certainty certified_compare(const Interval& a, const Interval& b);

/// Decides the strict claim a < b: CertainTrue iff a.hi < b.lo, CertainFalse
/// iff a.lo >= b.hi (then a >= b holds for every enclosed pair).
Certainty certified_less(const Interval& a, const Interval& b);

Certainty negate(Certainty c);
Certainty both(Certainty a, Certainty b);

struct EscalationResult {
    Certainty certainty;
    Precision precision;
};

/// Re-evaluates `predicate` doubling the precision from prec0 until it is
/// decided or the next precision would exceed prec_max.
EscalationResult escalate(const std::function<Certainty(Precision)>& predicate, Precision prec0,
                          Precision prec_max);

Certainty verify_with_escalation(const std::function<Certainty(Precision)>& predicate,
                                 Precision prec0, Precision prec_max);

/// Robbins' two-sided Stirling bounds for n!, certified.
Certainty stirling_bounds_check(unsigned long n, Precision prec);

/// 2k - log2(pi k)/2 - 1/(4k) < p_k < 2k - log2(pi k)/2, and for k >= 2
/// additionally k < p_k < 2k - 1.
Certainty pk_bounds_check(unsigned long k, Precision prec);

}  // namespace binsum
