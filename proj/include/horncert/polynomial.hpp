#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "horncert/eft.hpp"
#include "horncert/types.hpp"

namespace horncert {

// Dense univariate polynomial over binary64. coeffs()[i] is the coefficient
// of x^i; the degree is structural (the leading coefficient may be zero).
// Construction rejects empty vectors and non-finite coefficients.
class Polynomial {
  public:
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("Polynomial: no coefficients");
        for (double c : coeffs_)
            if (!std::isfinite(c))
                throw std::invalid_argument("Polynomial: non-finite coefficient");
    }
    Polynomial(std::initializer_list<double> coeffs)
        : Polynomial(std::vector<double>(coeffs)) {}

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    // Coefficient-wise absolute value (the polynomial written p-tilde).
    Polynomial abs() const;

  private:
    std::vector<double> coeffs_;
};

// Classic Horner evaluation, highest coefficient first. Overflow propagates
// as a non-finite result.
inline double horner(std::span<const double> coeffs, double x) {
    if (coeffs.empty()) throw std::invalid_argument("horner: no coefficients");
    std::size_t n = coeffs.size() - 1;
    double r = coeffs[n];
    for (std::size_t i = n; i-- > 0;) r = r * x + coeffs[i];
    return r;
}

inline double horner(const Polynomial& p, double x) { return horner(p.coeffs(), x); }

// Horner evaluation of the coefficient-wise float sum p (+) q.
inline double horner_sum(std::span<const double> p, std::span<const double> q, double x) {
    if (p.empty() || p.size() != q.size())
        throw std::invalid_argument("horner_sum: empty or mismatched inputs");
    std::size_t n = p.size() - 1;
    double r = p[n] + q[n];
    for (std::size_t i = n; i-- > 0;) r = r * x + (p[i] + q[i]);
    return r;
}

inline double horner_sum(const Polynomial& p, const Polynomial& q, double x) {
    return horner_sum(p.coeffs(), q.coeffs(), x);
}

// Horner evaluation of |p| (+) |q| at |x|; never negative.
inline double abs_horner_sum(std::span<const double> p, std::span<const double> q,
                             double x) {
    if (p.empty() || p.size() != q.size())
        throw std::invalid_argument("abs_horner_sum: empty or mismatched inputs");
    std::size_t n = p.size() - 1;
    double ax = std::fabs(x);
    double r = std::fabs(p[n]) + std::fabs(q[n]);
    for (std::size_t i = n; i-- > 0;)
        r = r * ax + (std::fabs(p[i]) + std::fabs(q[i]));
    return r;
}

inline double abs_horner_sum(const Polynomial& p, const Polynomial& q, double x) {
    return abs_horner_sum(p.coeffs(), q.coeffs(), x);
}

// Horner evaluation together with the two error polynomials that capture,
// term by term, the rounding errors of its products and sums. When no
// product underflowed, value + (pi + sigma)(x) reconstructs p(x) exactly.
struct EftHornerOutput {
    double value;              // identical bits to horner(p, x)
    std::vector<double> pi;    // product rounding errors, coefficient i of x^i
    std::vector<double> sigma; // sum rounding errors; both empty for degree 0
    EvalStatus status = EvalStatus::ok;
};

EftHornerOutput eft_horner(const Polynomial& p, double x);

}  // namespace horncert
