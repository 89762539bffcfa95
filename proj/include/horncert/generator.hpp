#pragma once

#include <cstdint>

#include "horncert/polynomial.hpp"

// Test-case factory: expanded (1-x)^n rows and a generator of polynomial
// evaluations with a prescribed condition number, used to build the
// experiment corpora.

namespace horncert {

// Deterministic 64-bit stream (splitmix64); owned by the caller so
// generation has no shared state.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_unit() {  // uniform in [0, 1), 53 random bits
        return static_cast<double>(next() >> 11) * 0x1p-53;
    }
    bool next_bit() { return (next() >> 63) != 0; }

  private:
    std::uint64_t state_;
};

struct GeneratorSpec {
    int degree;             // >= 2
    double target_cond;     // >= 1
    double x;               // finite, nonzero
    std::uint64_t seed;
};

// Coefficients of the expanded (1-x)^n, lowest degree first: coefficient i
// is (-1)^i * C(n, i), exact in binary64. Throws when n > 60 or when some
// coefficient of the row is not exactly representable.
Polynomial binomial_expand(int n);

// Generates a polynomial whose evaluation at spec.x has condition number
// within a decade of spec.target_cond while |p(x)| stays in [1/2, 2].
// Half the coefficients are drawn at random so the absolute-value sum hits
// the target; the other half steer the exact value of p(x) to 1, each new
// coefficient cancelling the residual left by the previous rounding.
// Deterministic for a fixed spec. Throws std::domain_error when the target
// is unreachable at this degree.
Polynomial generate(const GeneratorSpec& spec);

}  // namespace horncert
