#pragma once

#include <string>

// Startup verification of the floating point environment. The kernels in
// eft.hpp assume binary64 round-to-nearest-even and compilation without
// floating point contraction; both are asserted here against known bit
// patterns rather than taken on faith.

namespace horncert::selftest {

struct Report {
    bool round_to_nearest_even = false;
    bool no_fp_contraction = false;
    bool eft_bit_patterns = false;
    bool ok() const { return round_to_nearest_even && no_fp_contraction && eft_bit_patterns; }
    std::string describe() const;
};

Report run();

// Throws std::runtime_error when any check fails.
void require();

}  // namespace horncert::selftest
