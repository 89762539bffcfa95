#include "horncert/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace horncert::oracle {

ExactScalar eval_exact(const Polynomial& p, double x) {
    auto c = p.coeffs();
    std::size_t n = c.size() - 1;
    mpq_class xq;
    mpq_set_d(xq.get_mpq_t(), x);
    mpq_class acc;
    mpq_set_d(acc.get_mpq_t(), c[n]);
    mpq_class ci;
    for (std::size_t i = n; i-- > 0;) {
        mpq_set_d(ci.get_mpq_t(), c[i]);
        acc = acc * xq + ci;
    }
    return ExactScalar(acc);
}

ExactScalar eval_abs_exact(const Polynomial& p, double x) {
    auto c = p.coeffs();
    std::size_t n = c.size() - 1;
    mpq_class xq;
    mpq_set_d(xq.get_mpq_t(), std::fabs(x));
    mpq_class acc;
    mpq_set_d(acc.get_mpq_t(), std::fabs(c[n]));
    mpq_class ci;
    for (std::size_t i = n; i-- > 0;) {
        mpq_set_d(ci.get_mpq_t(), std::fabs(c[i]));
        acc = acc * xq + ci;
    }
    return ExactScalar(acc);
}

ExactScalar cond(const Polynomial& p, double x) {
    ExactScalar value = eval_exact(p, x);
    if (value.is_zero())
        throw std::domain_error("cond: p(x) is exactly zero (infinite condition)");
    return eval_abs_exact(p, x) / value.abs();
}

double pred(double f) {
    if (!std::isfinite(f)) throw std::invalid_argument("pred: non-finite input");
    return std::nextafter(f, -std::numeric_limits<double>::infinity());
}

double succ(double f) {
    if (!std::isfinite(f)) throw std::invalid_argument("succ: non-finite input");
    return std::nextafter(f, std::numeric_limits<double>::infinity());
}

double ulp(double f) {
    double a = std::fabs(f);
    double up = std::nextafter(a, std::numeric_limits<double>::infinity());
    if (std::isinf(up)) return a - std::nextafter(a, 0.0);
    return up - a;
}

FaithfulVerdict is_faithful(double computed, const ExactScalar& exact) {
    if (!std::isfinite(computed))
        throw std::invalid_argument("is_faithful: non-finite computed value");
    double lo = pred(computed);
    double hi = succ(computed);
    bool above = std::isinf(lo) || ExactScalar::from_double(lo) < exact;
    bool below = std::isinf(hi) || exact < ExactScalar::from_double(hi);
    ExactScalar err = (exact - ExactScalar::from_double(computed)).abs();
    ExactScalar ulps = err / ExactScalar::from_double(ulp(computed));
    return {exact, computed, above && below, ulps};
}

}  // namespace horncert::oracle
