#include "horncert/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace horncert {

ExactScalar ExactScalar::from_double(double d) {
    if (!std::isfinite(d))
        throw std::invalid_argument("ExactScalar: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);  // exact by construction
    return ExactScalar(q);
}

ExactScalar ExactScalar::from_ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ExactScalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.q_ == 0) throw std::domain_error("ExactScalar: division by zero");
    return ExactScalar(mpq_class(q_ / o.q_));
}

ExactScalar ExactScalar::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q_.get_den().get_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime; no canonicalization needed
    return ExactScalar(r);
}

double ExactScalar::to_double(Rounding mode) const {
    if (q_ == 0) return 0.0;
    mpfr_rnd_t rnd = (mode == Rounding::nearest_even) ? MPFR_RNDN : MPFR_RNDZ;
    // Emulate binary64 inside MPFR so subnormals and overflow round exactly
    // as a double operation would.
    mpfr_exp_t old_emin = mpfr_get_emin();
    mpfr_exp_t old_emax = mpfr_get_emax();
    mpfr_set_emin(-1073);
    mpfr_set_emax(1024);
    mpfr_t t;
    mpfr_init2(t, 53);
    int ternary = mpfr_set_q(t, q_.get_mpq_t(), rnd);
    ternary = mpfr_check_range(t, ternary, rnd);
    mpfr_subnormalize(t, ternary, rnd);
    double d = mpfr_get_d(t, rnd);
    mpfr_clear(t);
    mpfr_set_emin(old_emin);
    mpfr_set_emax(old_emax);
    return d;
}

std::string ExactScalar::fraction_str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace horncert
