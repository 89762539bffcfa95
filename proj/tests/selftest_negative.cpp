// Built with floating point contraction deliberately enabled. The
// environment check must notice: exit 0 only when the detector fires.

#include <cstdio>

#include "horncert/selftest.hpp"

int main() {
    auto report = horncert::selftest::run();
    if (report.no_fp_contraction) {
        std::printf("contraction was not detected in a contracted build\n");
        return 1;
    }
    std::printf("contracted build correctly rejected: %s\n",
                report.describe().c_str());
    return 0;
}
