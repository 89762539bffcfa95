#pragma once

#include <cmath>

#include "horncert/types.hpp"

// Error-free transformations of binary64 addition and multiplication.
// Each routine returns the rounded result together with the exact rounding
// error as a second float, so that hi + lo equals the infinitely precise
// result. The sequences are bit-sensitive: they must be compiled without
// floating point contraction (see selftest.hpp).

namespace horncert {

struct EftPair {
    double hi;  // rounded result of the operation
    double lo;  // exact rounding error, hi + lo = a op b
};

// Knuth's branch-free 6-flop sum transformation. Exact for all finite
// inputs, subnormals included; only overflow of hi invalidates it.
inline EftPair two_sum(double a, double b) {
    double hi = a + b;
    double z = hi - a;
    double lo = (a - (hi - z)) + (b - z);
    return {hi, lo};
}

// Dekker's splitting: a = hi + lo with each part carrying at most 26
// significand bits, so pairwise products of parts are exact in binary64.
inline EftPair split(double a) {
    constexpr double factor = 0x1p27 + 1.0;
    double z = a * factor;
    double hi = z - (z - a);
    return {hi, a - hi};
}

// Veltkamp/Dekker 17-flop product transformation. Exact provided the
// product stays clear of the underflow range (see two_prod_may_underflow)
// and nothing overflows.
inline EftPair two_prod(double a, double b) {
    double hi = a * b;
    EftPair as = split(a);
    EftPair bs = split(b);
    double lo = as.lo * bs.lo -
                (((hi - as.hi * bs.hi) - as.lo * bs.hi) - as.hi * bs.lo);
    return {hi, lo};
}

// Same transformation with the second operand already split; the Horner
// loops hoist split(x) out of the iteration.
inline EftPair two_prod_presplit(double a, double b, const EftPair& bs) {
    double hi = a * b;
    EftPair as = split(a);
    double lo = as.lo * bs.lo -
                (((hi - as.hi * bs.hi) - as.lo * bs.hi) - as.hi * bs.lo);
    return {hi, lo};
}

// Below this magnitude the low part of a nonzero product may not be
// representable, so the product transformation loses its exactness.
inline constexpr double kTwoProdGuard = 0x1p-969;

inline bool two_prod_may_underflow(double a, double b, double prod) {
    return a != 0.0 && b != 0.0 && std::fabs(prod) < kTwoProdGuard;
}

inline EvalStatus classify_sum(const EftPair& s) {
    return std::isfinite(s.hi) ? EvalStatus::ok : EvalStatus::overflow;
}

inline EvalStatus classify_prod(double a, double b, const EftPair& p) {
    if (!std::isfinite(p.hi)) return EvalStatus::overflow;
    return two_prod_may_underflow(a, b, p.hi) ? EvalStatus::underflow_unverified
                                              : EvalStatus::ok;
}

}  // namespace horncert
