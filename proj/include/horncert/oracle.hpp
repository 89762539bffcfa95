#pragma once

#include "horncert/exact.hpp"
#include "horncert/polynomial.hpp"

// Exact-arithmetic ground truth used to validate every float-side claim:
// exact polynomial values, condition numbers, floating point neighborhoods
// and the faithful-rounding verdict.

namespace horncert::oracle {

// Exact rational value of p(x).
ExactScalar eval_exact(const Polynomial& p, double x);

// Exact value of the absolute-coefficient polynomial at |x| (p-tilde).
ExactScalar eval_abs_exact(const Polynomial& p, double x);

// Condition number of the evaluation: p-tilde(x) / |p(x)|.
// Throws std::domain_error when p(x) is exactly zero.
ExactScalar cond(const Polynomial& p, double x);

// Adjacent representable neighbors in the finite binary64 order, subnormals
// included. succ of the largest finite value (and pred of the most negative)
// signal overflow by returning the corresponding infinity.
double pred(double f);
double succ(double f);

// Spacing at f: succ(f) - f for f >= 0, mirrored for negatives; falls back
// to the lower neighbor at the very top of the range.
double ulp(double f);

struct FaithfulVerdict {
    ExactScalar exact_value;
    double computed;
    bool faithful;           // pred(computed) < exact < succ(computed)
    ExactScalar ulp_error;   // |exact - computed| / ulp(computed)
};

FaithfulVerdict is_faithful(double computed, const ExactScalar& exact);

}  // namespace horncert::oracle
