#include "binsum/certified.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace binsum {

const char* to_string(Certainty c) {
    switch (c) {
    case Certainty::CertainTrue:
        return "CertainTrue";
    case Certainty::CertainFalse:
        return "CertainFalse";
    case Certainty::Undecided:
        return "Undecided";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Interval lifetime

void Interval::init(Precision prec) {
    prec_ = std::max<Precision>(prec, MPFR_PREC_MIN);
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

Interval::Interval(Precision prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    init(other.prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
    init(MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        if (prec_ != other.prec_) {
            mpfr_set_prec(lo_, other.prec_);
            mpfr_set_prec(hi_, other.prec_);
            prec_ = other.prec_;
        }
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

// ---------------------------------------------------------------------------
// Construction

Interval Interval::from_int(long v, Precision prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_integer(const ExactInt& v, Precision prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const ExactRational& v, Precision prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_string(const std::string& decimal, Precision prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, decimal.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, decimal.c_str(), 10, MPFR_RNDU) != 0) {
        throw DomainError("not a decimal number: " + decimal);
    }
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pi(Precision prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::upper_endpoint() const {
    Interval r(prec_);
    mpfr_set(r.lo_, hi_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::with_precision(Precision prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

// ---------------------------------------------------------------------------
// Queries

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Interval::is_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const ExactRational& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::intersects(const Interval& other) const {
    return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

bool Interval::is_point_integer(long* out) const {
    if (!is_point() || !mpfr_integer_p(lo_) || !mpfr_fits_slong_p(lo_, MPFR_RNDN)) {
        return false;
    }
    if (out != nullptr) {
        *out = mpfr_get_si(lo_, MPFR_RNDN);
    }
    return true;
}

bool Interval::width_at_most_pow2(long e) const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const bool ok = mpfr_cmp_si_2exp(w, 1, e) <= 0;
    mpfr_clear(w);
    return ok;
}

double Interval::log2_width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = -std::numeric_limits<double>::infinity();
    if (!mpfr_zero_p(w)) {
        long e = 0;
        const double m = mpfr_get_d_2exp(&e, w, MPFR_RNDU);
        out = static_cast<double>(e) + std::log2(m);
    }
    mpfr_clear(w);
    return out;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_ + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    const double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

namespace {

std::string format_endpoint(mpfr_srcptr v, int digits, const char* fmt) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt, std::max(digits - 1, 0), v);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace

std::string Interval::lower_string(int digits) const { return format_endpoint(lo_, digits, "%.*RDe"); }
std::string Interval::upper_string(int digits) const { return format_endpoint(hi_, digits, "%.*RUe"); }

std::string Interval::to_string(int digits) const {
    return "[" + lower_string(digits) + ", " + upper_string(digits) + "]";
}

// ---------------------------------------------------------------------------
// Arithmetic

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (mpfr_srcptr x : as) {
        for (mpfr_srcptr y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) {
                mpfr_set(r.lo_, t, MPFR_RNDD);
            }
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) {
                mpfr_set(r.hi_, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        throw DomainError("interval division by an enclosure of zero");
    }
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (mpfr_srcptr x : as) {
        for (mpfr_srcptr y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) {
                mpfr_set(r.lo_, t, MPFR_RNDD);
            }
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) {
                mpfr_set(r.hi_, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator+(const Interval& a, long b) { return a + Interval::from_int(b, a.precision()); }
Interval operator+(long a, const Interval& b) { return b + a; }
Interval operator-(const Interval& a, long b) { return a - Interval::from_int(b, a.precision()); }
Interval operator-(long a, const Interval& b) { return Interval::from_int(a, b.precision()) - b; }
Interval operator*(const Interval& a, long b) { return a * Interval::from_int(b, a.precision()); }
Interval operator*(long a, const Interval& b) { return Interval::from_int(a, b.precision()) * b; }
Interval operator*(const Interval& a, const ExactInt& b) {
    return a * Interval::from_integer(b, a.precision());
}
Interval operator/(const Interval& a, long b) { return a / Interval::from_int(b, a.precision()); }
Interval operator/(long a, const Interval& b) { return Interval::from_int(a, b.precision()) / b; }

Interval square(const Interval& a) {
    Interval r(a.prec_);
    if (mpfr_sgn(a.lo_) >= 0) {
        mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, a.prec_);
        mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
        mpfr_sqr(t, a.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log(const Interval& a) {
    if (!a.is_positive()) {
        throw DomainError("logarithm of an enclosure that is not strictly positive");
    }
    Interval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval log2(const Interval& a) {
    if (!a.is_positive()) {
        throw DomainError("logarithm of an enclosure that is not strictly positive");
    }
    Interval r(a.prec_);
    mpfr_log2(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) {
        throw DomainError("square root of an enclosure with negative part");
    }
    Interval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval pow(const Interval& a, unsigned long n) {
    Interval r(a.prec_);
    if (n == 0) {
        mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
        mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    const bool even = (n % 2) == 0;
    if (mpfr_sgn(a.lo_) >= 0 || !even) {
        // monotone increasing on the enclosure
        mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
        mpfr_pow_ui(r.lo_, a.hi_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.lo_, n, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, a.prec_);
        mpfr_pow_ui(r.hi_, a.lo_, n, MPFR_RNDU);
        mpfr_pow_ui(t, a.hi_, n, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

Interval pow(const Interval& base, const Interval& e) {
    long n = 0;
    if (e.is_point_integer(&n) && n >= 0) {
        return pow(base, static_cast<unsigned long>(n));
    }
    const Precision prec = std::max(base.precision(), e.precision());
    if (base.is_zero()) {
        if (e.is_positive()) {
            return Interval(prec);
        }
        throw DomainError("0^e is only defined here for e >= 0");
    }
    if (mpfr_sgn(base.lo()) < 0) {
        throw DomainError("real power of an enclosure with negative part");
    }
    if (mpfr_sgn(base.lo()) == 0) {
        if (!e.is_positive()) {
            throw DomainError("power of an enclosure touching zero needs e > 0");
        }
        return Interval::hull(Interval(prec), exp(e * log(base.upper_endpoint())));
    }
    return exp(e * log(base));
}

Interval pow(const ExactRational& base, const Interval& e, Precision prec) {
    if (sgn(base) < 0) {
        throw DomainError("real power of a negative base");
    }
    if (sgn(base) == 0) {
        if (e.is_zero()) {
            return Interval::from_int(1, prec);
        }
        if (e.is_positive()) {
            return Interval(prec);
        }
        throw DomainError("0^e is only defined here for e >= 0");
    }
    if (base == 1) {
        return Interval::from_int(1, prec);
    }
    return pow(Interval::from_rational(base, prec), e.with_precision(std::max(prec, e.precision())));
}

std::optional<ExactRational> exact_rational_pow(const ExactRational& base, const ExactRational& e) {
    if (sgn(base) < 0) {
        return std::nullopt;
    }
    if (sgn(base) == 0) {
        if (sgn(e) > 0) {
            return ExactRational(0);
        }
        if (sgn(e) == 0) {
            return ExactRational(1);
        }
        return std::nullopt;
    }
    const ExactInt& num = e.get_num();
    const ExactInt& den = e.get_den();
    if (!den.fits_ulong_p() || !num.fits_slong_p()) {
        return std::nullopt;
    }
    const unsigned long d = den.get_ui();
    ExactInt rn, rd;
    if (mpz_root(rn.get_mpz_t(), base.get_num_mpz_t(), d) == 0 ||
        mpz_root(rd.get_mpz_t(), base.get_den_mpz_t(), d) == 0) {
        return std::nullopt;
    }
    const long n = num.get_si();
    const unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    ExactInt pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), m);
    mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), m);
    ExactRational out = n < 0 ? ExactRational(pd, pn) : ExactRational(pn, pd);
    out.canonicalize();
    return out;
}

Interval rational_pow(const ExactRational& base, const ExactRational& e, Precision prec) {
    if (auto exact = exact_rational_pow(base, e)) {
        return Interval::from_rational(*exact, prec);
    }
    return pow(base, Interval::from_rational(e, prec), prec);
}

// ---------------------------------------------------------------------------
// Exact helpers and p_k

ExactInt binomial(unsigned long n, unsigned long r) {
    if (r > n) {
        throw DomainError("binomial(n, r) requires r <= n");
    }
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

Interval pk(unsigned long k, Precision prec) {
    if (k == 0) {
        throw DomainError("p_k requires k >= 1");
    }
    return log2(Interval::from_integer(binomial(2 * k, k), prec));
}

// ---------------------------------------------------------------------------
// Certified comparison and escalation

Certainty certified_compare(const Interval& a, const Interval& b) {
    if (mpfr_less_p(a.hi(), b.lo())) {
        return Certainty::CertainTrue;
    }
    if (mpfr_greater_p(a.lo(), b.hi())) {
        return Certainty::CertainFalse;
    }
    return Certainty::Undecided;
}

Certainty certified_less(const Interval& a, const Interval& b) {
    if (mpfr_less_p(a.hi(), b.lo())) {
        return Certainty::CertainTrue;
    }
    if (mpfr_greaterequal_p(a.lo(), b.hi())) {
        return Certainty::CertainFalse;
    }
    return Certainty::Undecided;
}

Certainty negate(Certainty c) {
    switch (c) {
    case Certainty::CertainTrue:
        return Certainty::CertainFalse;
    case Certainty::CertainFalse:
        return Certainty::CertainTrue;
    default:
        return Certainty::Undecided;
    }
}

Certainty both(Certainty a, Certainty b) {
    if (a == Certainty::CertainFalse || b == Certainty::CertainFalse) {
        return Certainty::CertainFalse;
    }
    if (a == Certainty::CertainTrue && b == Certainty::CertainTrue) {
        return Certainty::CertainTrue;
    }
    return Certainty::Undecided;
}

EscalationResult escalate(const std::function<Certainty(Precision)>& predicate, Precision prec0,
                          Precision prec_max) {
    if (prec0 > prec_max) {
        throw DomainError("starting precision exceeds the precision cap");
    }
    Precision prec = prec0;
    for (;;) {
        const Certainty c = predicate(prec);
        if (c != Certainty::Undecided || prec * 2 > prec_max) {
            return {c, prec};
        }
        prec *= 2;
    }
}

Certainty verify_with_escalation(const std::function<Certainty(Precision)>& predicate,
                                 Precision prec0, Precision prec_max) {
    return escalate(predicate, prec0, prec_max).certainty;
}

// ---------------------------------------------------------------------------
// Stirling-type bounds

Certainty stirling_bounds_check(unsigned long n, Precision prec) {
    if (n == 0) {
        throw DomainError("Stirling bounds need n >= 1");
    }
    ExactInt fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    const Interval log_fact = log(Interval::from_integer(fact, prec));

    const Interval nn = Interval::from_int(static_cast<long>(n), prec);
    const Interval half_log_two_pi = log(2 * Interval::pi(prec)) / 2;
    const Interval core = half_log_two_pi +
                          Interval::from_rational(ExactRational(2 * n + 1, 2), prec) * log(nn) - nn;
    const Interval lower = core + Interval::from_rational(ExactRational(1, 12 * n + 1), prec);
    const Interval upper = core + Interval::from_rational(ExactRational(1, 12 * n), prec);
    return both(certified_compare(lower, log_fact), certified_compare(log_fact, upper));
}

Certainty pk_bounds_check(unsigned long k, Precision prec) {
    const Interval p = pk(k, prec);
    const long kk = static_cast<long>(k);
    const Interval base = 2 * kk - log2(Interval::pi(prec) * kk) / 2;
    const Interval lower = base - Interval::from_rational(ExactRational(1, 4 * k), prec);
    Certainty c = both(certified_compare(lower, p), certified_compare(p, base));
    if (k >= 2) {
        c = both(c, certified_compare(Interval::from_int(kk, prec), p));
        c = both(c, certified_compare(p, Interval::from_int(2 * kk - 1, prec)));
    }
    return c;
}

}  // namespace binsum
