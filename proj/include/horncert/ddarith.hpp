#pragma once

#include <span>
#include <stdexcept>

#include "horncert/eft.hpp"
#include "horncert/polynomial.hpp"

// Minimal double-double arithmetic: an unevaluated pair hi + lo carrying
// roughly 106 significant bits, renormalized after every operation. Only
// the operations needed by the double-double Horner evaluation are
// provided; it serves as the reference competitor in the accuracy and
// timing comparisons.

namespace horncert {

struct DoubleDouble {
    double hi;
    double lo;  // |lo| <= u*|hi| after renormalization
};

// Dekker's quick renormalization; requires |a| >= |b| or a == 0.
inline DoubleDouble dd_renorm(double a, double b) {
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

// double-double + double, 10 flop.
inline DoubleDouble dd_add(DoubleDouble a, double b) {
    EftPair s = two_sum(a.hi, b);
    return dd_renorm(s.hi, s.lo + a.lo);
}

// double-double * double, 22 flop.
inline DoubleDouble dd_mul_f64(DoubleDouble a, double x) {
    EftPair p = two_prod(a.hi, x);
    return dd_renorm(p.hi, p.lo + a.lo * x);
}

// Horner evaluation carried in double-double, rounded back to binary64.
inline double dd_horner(std::span<const double> coeffs, double x) {
    if (coeffs.empty()) throw std::invalid_argument("dd_horner: no coefficients");
    std::size_t n = coeffs.size() - 1;
    DoubleDouble r{coeffs[n], 0.0};
    for (std::size_t i = n; i-- > 0;) {
        r = dd_mul_f64(r, x);
        r = dd_add(r, coeffs[i]);
    }
    return r.hi;
}

inline double dd_horner(const Polynomial& p, double x) {
    return dd_horner(p.coeffs(), x);
}

}  // namespace horncert
