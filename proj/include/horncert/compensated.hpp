#pragma once

#include <cmath>
#include <stdexcept>

#include "horncert/eft.hpp"
#include "horncert/polynomial.hpp"
#include "horncert/types.hpp"

// Compensated Horner evaluation: the classic recurrence plus a correcting
// term assembled from the exact per-step rounding errors, which makes the
// result as accurate as a Horner evaluation carried out in twice the
// working precision. comp_horner_certified additionally computes a
// validated error bound and a runtime faithful-rounding certificate from
// floating point quantities alone.

namespace horncert {

// fl(k*u) / fl(1 - k*u). Both operands are exact floats for k < 2^53, so
// the only rounding error is the division's; (1+u) * gamma_hat(k) is an
// upper bound for the exact accumulation factor k*u/(1-k*u).
inline double gamma_hat(long long k) {
    if (k < 0 || k >= (1LL << 53))
        throw std::domain_error("gamma_hat: requires 0 <= k and k*u < 1");
    double ku = static_cast<double>(k) * kUnitRoundoff;
    return ku / (1.0 - ku);
}

// Result of a certified evaluation.
struct CertifiedEval {
    double value;      // compensated result
    double err_bound;  // validated bound on |value - p(x)|, valid when status == ok
    double alpha_hat;  // validated bound on the error of the correcting term
    bool is_faithful;  // true only if value is proven a faithful rounding of p(x)
    EvalStatus status = EvalStatus::ok;
};

// Compensated Horner evaluation (value only).
inline double comp_horner(std::span<const double> coeffs, double x) {
    if (coeffs.empty()) throw std::invalid_argument("comp_horner: no coefficients");
    std::size_t n = coeffs.size() - 1;
    if (n == 0) return coeffs[0];
    const EftPair xs = split(x);
    double r = coeffs[n];
    double corr = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        EftPair prod = two_prod_presplit(r, x, xs);
        EftPair sum = two_sum(prod.hi, coeffs[i]);
        r = sum.hi;
        corr = corr * x + (prod.lo + sum.lo);
    }
    return r + corr;
}

inline double comp_horner(const Polynomial& p, double x) {
    return comp_horner(p.coeffs(), x);
}

// Compensated Horner evaluation with a validated absolute error bound and a
// faithful-rounding certificate. The certificate never overclaims: it is
// withheld (false) whenever any precondition of the underlying error
// analysis cannot be verified at run time: product underflow, overflow, a
// result too small to be normalized, or a test threshold that would itself
// be subnormal.
inline CertifiedEval comp_horner_certified(std::span<const double> coeffs, double x) {
    if (coeffs.empty())
        throw std::invalid_argument("comp_horner_certified: no coefficients");
    const std::size_t n = coeffs.size() - 1;
    if (n == 0)  // exact: nothing was rounded
        return {coeffs[0], 0.0, 0.0, true, EvalStatus::ok};

    const EftPair xs = split(x);
    const double ax = std::fabs(x);
    double r = coeffs[n];
    double corr = 0.0;  // running Horner sum of the error polynomials
    double mag = 0.0;   // same on their absolute values, at |x|
    bool underflow = false;
    for (std::size_t i = n; i-- > 0;) {
        EftPair prod = two_prod_presplit(r, x, xs);
        underflow |= two_prod_may_underflow(r, x, prod.hi);
        EftPair sum = two_sum(prod.hi, coeffs[i]);
        r = sum.hi;
        double cx = corr * x;
        double mx = mag * ax;
        // products of the bound recurrences must stay normal (zero is fine
        // only when an operand is zero), else the standard rounding model
        // behind alpha_hat no longer applies
        constexpr double tiny = 0x1p-1022;
        underflow |= (corr != 0.0 && x != 0.0 && std::fabs(cx) < tiny);
        underflow |= (mag != 0.0 && ax != 0.0 && mx < tiny);
        corr = cx + (prod.lo + sum.lo);
        mag = mx + (std::fabs(prod.lo) + std::fabs(sum.lo));
    }
    EftPair fin = two_sum(r, corr);
    const double value = fin.hi;
    const double abs_e = std::fabs(fin.lo);

    const double gh = gamma_hat(2 * static_cast<long long>(n) - 1);
    const double denom = 1.0 - (2.0 * static_cast<double>(n + 1)) * kUnitRoundoff;
    if (denom <= 0.0) throw std::domain_error("comp_horner_certified: degree too large");
    const double alpha = (gh * mag) / denom;
    const double beta = (alpha + abs_e) / (1.0 - 2.0 * kUnitRoundoff);
    if (mag > 0.0 && alpha < 0x1p-1022) underflow = true;

    EvalStatus status = EvalStatus::ok;
    if (!std::isfinite(value) || !std::isfinite(alpha) || !std::isfinite(beta))
        status = EvalStatus::overflow;
    else if (underflow)
        status = EvalStatus::underflow_unverified;

    bool faithful = alpha < (0.5 * kUnitRoundoff) * std::fabs(value);
    if (status != EvalStatus::ok) faithful = false;
    // the certificate criterion needs value normalized and u/2*|value|
    // representable without underflow
    if (std::fabs(value) < 0x1p-968) faithful = false;

    return {value, beta, alpha, faithful, status};
}

inline CertifiedEval comp_horner_certified(const Polynomial& p, double x) {
    return comp_horner_certified(p.coeffs(), x);
}

// Largest condition number (rounded toward zero) for which a degree-n
// compensated evaluation is guaranteed faithfully rounded a priori.
// Computed in exact rational arithmetic; the returned float never exceeds
// the exact bound.
double apriori_threshold(long long n);

}  // namespace horncert
