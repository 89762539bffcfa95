#include "horncert/polynomial.hpp"

namespace horncert {

Polynomial Polynomial::abs() const {
    std::vector<double> a(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i] = std::fabs(coeffs_[i]);
    return Polynomial(std::move(a));
}

EftHornerOutput eft_horner(const Polynomial& p, double x) {
    auto c = p.coeffs();
    const std::size_t n = c.size() - 1;
    EftHornerOutput out;
    if (n == 0) {  // no operation performed, nothing to record
        out.value = c[0];
        return out;
    }
    out.pi.resize(n);
    out.sigma.resize(n);
    const EftPair xs = split(x);
    double r = c[n];
    bool underflow = false;
    for (std::size_t i = n; i-- > 0;) {
        EftPair prod = two_prod_presplit(r, x, xs);
        underflow |= two_prod_may_underflow(r, x, prod.hi);
        EftPair sum = two_sum(prod.hi, c[i]);
        out.pi[i] = prod.lo;
        out.sigma[i] = sum.lo;
        r = sum.hi;
    }
    out.value = r;
    if (!std::isfinite(r))
        out.status = EvalStatus::overflow;
    else if (underflow)
        out.status = EvalStatus::underflow_unverified;
    return out;
}

}  // namespace horncert
