#pragma once

#include "binsum/certified.hpp"

#include <algorithm>
#include <string>

namespace binsum::testing {

/// x lies within a relative 1e-40 of the decimal reference value.
inline bool near(const Interval& x, const char* reference, const char* rel = "1e-40") {
    const Precision prec = std::max<Precision>(x.precision(), 256);
    const Interval r = Interval::from_string(reference, prec);
    const Interval mag = r.is_negative() ? -r : r;
    const Interval tol = Interval::from_string(rel, prec) * mag;
    return Interval::hull(r - tol, r + tol).contains(x);
}

/// x meets a relative 1e-40 neighbourhood of the reference enclosure.
inline bool agrees(const Interval& x, const Interval& reference) {
    const Interval mag = reference.is_negative() ? -reference : reference;
    const Interval tol = Interval::from_string("1e-40", reference.precision()) * mag;
    return Interval::hull(reference - tol, reference + tol).intersects(x);
}

inline ExactRational q(long n, long d = 1) {
    ExactRational v(n, d);
    v.canonicalize();
    return v;
}

}  // namespace binsum::testing
