#include "horncert/selftest.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "horncert/compensated.hpp"
#include "horncert/eft.hpp"
#include "horncert/polynomial.hpp"

namespace horncert::selftest {
namespace {

// Launder a constant through volatile so every sentinel is computed by the
// generated code, not folded at compile time.
double runtime(double x) {
    volatile double v = x;
    return v;
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool check_rounding() {
    double one = runtime(1.0);
    double half_ulp = runtime(0x1p-53);
    double above_half = runtime(0x1.0000001p-53);
    double three_half = runtime(0x1.8p-52);
    // ties resolve to the even mantissa, in both directions
    bool tie_down = same_bits(one + half_ulp, 1.0);
    bool tie_up = same_bits(one + three_half, 1.0 + 0x1p-51);
    // rounding is to nearest, not directed
    bool not_trunc = same_bits(one + above_half, 1.0 + 0x1p-52);
    bool not_up = same_bits(-one - above_half, -1.0 - 0x1p-52);
    return tie_down && tie_up && not_trunc && not_up;
}

bool check_no_contraction() {
    // r*x + a rounds the product before adding; a fused multiply-add would
    // return -2^-54 here instead of 0.
    double c0 = runtime(-1.0);
    double c1 = runtime(1.0 + 0x1p-27);
    double x = runtime(1.0 - 0x1p-27);
    const double coeffs[2] = {c0, c1};
    bool plain = same_bits(horner(std::span<const double>(coeffs, 2), x), 0.0);
    // the compensated path recovers the exact value of that product-sum
    bool comp = same_bits(comp_horner(std::span<const double>(coeffs, 2), x), -0x1p-54);
    return plain && comp;
}

bool check_eft_patterns() {
    EftPair s = two_sum(runtime(1.0), runtime(0x1p-53));
    if (!same_bits(s.hi, 1.0) || !same_bits(s.lo, 0x1p-53)) return false;
    double a = runtime(1.0 + 0x1p-27);
    EftPair p = two_prod(a, a);
    return same_bits(p.hi, 1.0 + 0x1p-26) && same_bits(p.lo, 0x1p-54);
}

}  // namespace

Report run() {
    Report r;
    r.round_to_nearest_even = check_rounding();
    r.no_fp_contraction = check_no_contraction();
    r.eft_bit_patterns = check_eft_patterns();
    return r;
}

std::string Report::describe() const {
    std::ostringstream os;
    os << "round_to_nearest_even=" << (round_to_nearest_even ? "yes" : "NO")
       << " no_fp_contraction=" << (no_fp_contraction ? "yes" : "NO")
       << " eft_bit_patterns=" << (eft_bit_patterns ? "yes" : "NO");
    return os.str();
}

void require() {
    Report r = run();
    if (!r.ok())
        throw std::runtime_error("floating point environment check failed: " +
                                 r.describe());
}

}  // namespace horncert::selftest
