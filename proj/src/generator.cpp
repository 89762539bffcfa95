#include "horncert/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "horncert/exact.hpp"

namespace horncert {

Polynomial binomial_expand(int n) {
    if (n < 1) throw std::domain_error("binomial_expand: n must be positive");
    if (n > 60) throw std::domain_error("binomial_expand: n > 60 not supported");
    std::vector<unsigned long long> row(static_cast<std::size_t>(n) + 1, 1);
    for (int r = 1; r <= n; ++r)
        for (int i = r - 1; i > 0; --i) row[i] += row[i - 1];
    std::vector<double> coeffs(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        double d = static_cast<double>(row[i]);
        if (static_cast<unsigned long long>(d) != row[i])
            throw std::domain_error(
                "binomial_expand: coefficient not exactly representable");
        coeffs[i] = (i % 2 == 0) ? d : -d;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial generate(const GeneratorSpec& spec) {
    const int n = spec.degree;
    if (n < 2) throw std::domain_error("generate: degree must be >= 2");
    if (!(spec.target_cond >= 1.0) || !std::isfinite(spec.target_cond))
        throw std::domain_error("generate: target_cond must be >= 1");
    if (!std::isfinite(spec.x) || spec.x == 0.0)
        throw std::domain_error("generate: x must be finite and nonzero");

    const std::size_t even_count = static_cast<std::size_t>(n) / 2 + 1;
    const std::size_t odd_count = static_cast<std::size_t>(n + 1) - even_count;
    // Each corrective coefficient shrinks the residual by about one unit
    // roundoff; make sure the available steps can bring it below 1/4.
    if (std::log2(3.0 * spec.target_cond) - 52.0 * static_cast<double>(odd_count) > -2.0)
        throw std::domain_error("generate: target_cond unreachable at this degree");

    SplitMix64 rng(spec.seed);
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);

    // Random half (even indices): log-uniform magnitudes sized so the
    // absolute-value terms sum to roughly target_cond, signs random.
    const double lg_target = std::log2(spec.target_cond);
    const double lg_x = std::log2(std::fabs(spec.x));
    const double lg_share = lg_target - std::log2(2.0 * static_cast<double>(even_count));
    const double half_decade = 0.5 * std::log2(10.0);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); i += 2) {
        double jitter = (2.0 * rng.next_unit() - 1.0) * half_decade;
        double lg = lg_share + jitter - static_cast<double>(i) * lg_x;
        if (lg > 1020.0 || lg < -1020.0)
            throw std::domain_error("generate: coefficient magnitude out of range");
        double mag = std::exp2(lg);
        coeffs[i] = rng.next_bit() ? mag : -mag;
    }

    // Exact powers of x, needed both for the running sum and the steering.
    std::vector<ExactScalar> xpow(static_cast<std::size_t>(n) + 1);
    xpow[0] = ExactScalar::from_int(1);
    ExactScalar xq = ExactScalar::from_double(spec.x);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
        xpow[i] = xpow[i - 1] * xq;

    ExactScalar sum;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); i += 2)
        sum += ExactScalar::from_double(coeffs[i]) * xpow[i];

    // Steering half (odd indices, ascending): each coefficient is the
    // rounding of residual/x^i, so every step multiplies the residual by at
    // most about one unit roundoff.
    const ExactScalar one = ExactScalar::from_int(1);
    const ExactScalar close_enough = ExactScalar::from_double(0x1p-80);
    ExactScalar residual = one - sum;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); i += 2) {
        if (residual.abs() <= close_enough) break;
        double a = (residual / xpow[i]).to_double();
        if (!std::isfinite(a))
            throw std::domain_error("generate: steering coefficient overflows");
        if (a == 0.0) continue;
        coeffs[i] = a;
        sum += ExactScalar::from_double(a) * xpow[i];
        residual = one - sum;
    }

    // p(x) = 1 - residual must sit in the normalization band.
    ExactScalar v = (one - residual).abs();
    if (v < ExactScalar::from_ratio(1, 2) || v > ExactScalar::from_int(2))
        throw std::domain_error("generate: normalization failed for this target");

    return Polynomial(std::move(coeffs));
}

}  // namespace horncert
