#pragma once

#include <gmpxx.h>

#include <string>

namespace horncert {

enum class Rounding {
    nearest_even,
    toward_zero,
};

// Arbitrary-precision rational scalar. Every finite binary64 converts
// exactly (its value is an integer times a power of two), so all oracle
// quantities are represented without error; only to_double rounds.
class ExactScalar {
  public:
    ExactScalar() : q_(0) {}
    explicit ExactScalar(const mpq_class& q) : q_(q) {}

    static ExactScalar from_double(double d);  // exact; throws on non-finite
    static ExactScalar from_int(long v) { return ExactScalar(mpq_class(v)); }
    static ExactScalar from_ratio(long num, long den);

    ExactScalar operator+(const ExactScalar& o) const { return ExactScalar(mpq_class(q_ + o.q_)); }
    ExactScalar operator-(const ExactScalar& o) const { return ExactScalar(mpq_class(q_ - o.q_)); }
    ExactScalar operator*(const ExactScalar& o) const { return ExactScalar(mpq_class(q_ * o.q_)); }
    ExactScalar operator/(const ExactScalar& o) const;  // throws on zero divisor
    ExactScalar operator-() const { return ExactScalar(mpq_class(-q_)); }

    ExactScalar& operator+=(const ExactScalar& o) { q_ += o.q_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { q_ -= o.q_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { q_ *= o.q_; return *this; }

    ExactScalar abs() const { return ExactScalar(mpq_class(::abs(q_))); }
    ExactScalar pow(unsigned long e) const;

    bool operator==(const ExactScalar& o) const { return q_ == o.q_; }
    bool operator!=(const ExactScalar& o) const { return q_ != o.q_; }
    bool operator<(const ExactScalar& o) const { return q_ < o.q_; }
    bool operator<=(const ExactScalar& o) const { return q_ <= o.q_; }
    bool operator>(const ExactScalar& o) const { return q_ > o.q_; }
    bool operator>=(const ExactScalar& o) const { return q_ >= o.q_; }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    // Correctly rounded conversion, subnormal-aware; overflow yields the
    // appropriately signed infinity under nearest_even.
    double to_double(Rounding mode = Rounding::nearest_even) const;

    // Canonical fraction, e.g. "7/4", "-3", "0".
    std::string fraction_str() const;

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

}  // namespace horncert
