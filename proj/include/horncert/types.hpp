#pragma once

#include <limits>

namespace horncert {

static_assert(std::numeric_limits<double>::is_iec559,
              "binary64 IEEE-754 arithmetic is required");
static_assert(std::numeric_limits<double>::digits == 53);

// Unit roundoff of binary64 under round-to-nearest: half the spacing
// between 1 and its successor.
inline constexpr double kUnitRoundoff = 0x1p-53;

// Outcome of an evaluation whose guarantees depend on the floating point
// preconditions (no overflow, products clear of the subnormal range).
enum class EvalStatus {
    ok,
    underflow_unverified,  // some product entered the underflow range; exactness
                           // of the transformation is no longer guaranteed
    overflow,
};

inline const char* to_string(EvalStatus s) {
    switch (s) {
        case EvalStatus::ok: return "ok";
        case EvalStatus::underflow_unverified: return "underflow_unverified";
        case EvalStatus::overflow: return "overflow";
    }
    return "?";
}

}  // namespace horncert
