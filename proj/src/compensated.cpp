#include "horncert/compensated.hpp"

#include "horncert/exact.hpp"

namespace horncert {

double apriori_threshold(long long n) {
    if (n < 1) throw std::domain_error("apriori_threshold: degree must be >= 1");
    if (2 * n >= (1LL << 53))
        throw std::domain_error("apriori_threshold: 2n*u must be < 1");
    // (1-u)/(2+u) * u / gamma_{2n}^2 with gamma_{2n} = 2nu/(1-2nu), assembled
    // exactly and rounded toward zero so the published bound is conservative.
    ExactScalar u = ExactScalar::from_ratio(1, 1L << 53);
    ExactScalar one = ExactScalar::from_int(1);
    ExactScalar two_n_u = ExactScalar::from_int(2 * n) * u;
    ExactScalar gamma = two_n_u / (one - two_n_u);
    ExactScalar thr = (one - u) / (ExactScalar::from_int(2) + u) * u / (gamma * gamma);
    return thr.to_double(Rounding::toward_zero);
}

}  // namespace horncert
