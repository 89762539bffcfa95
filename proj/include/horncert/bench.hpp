#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace horncert::bench {

enum class Algorithm { horner, comp_horner, comp_horner_certified, dd_horner };

struct DegreeTiming {
    int degree;
    double t_horner_ns;
    double t_comp_ns;
    double t_cert_ns;
    double t_dd_ns;
    double ratio_comp() const { return t_comp_ns / t_horner_ns; }
    double ratio_cert() const { return t_cert_ns / t_horner_ns; }
    double ratio_dd() const { return t_dd_ns / t_horner_ns; }
};

struct RatioReport {
    std::vector<DegreeTiming> rows;
    double mean_ratio_comp = 0, mean_ratio_cert = 0, mean_ratio_dd = 0;
    double median_ratio_comp = 0, median_ratio_cert = 0, median_ratio_dd = 0;
    std::string environment;   // cpu / compiler / timestamp
    std::uint64_t checksum = 0;  // xor of all result bit patterns; defeats
                                 // dead-code elimination and pins determinism
};

// Nanoseconds per evaluation of one algorithm at one degree, cache warmed:
// the first tenth of the repetitions is discarded as warm-up. The
// polynomial and argument stream are derived deterministically from the
// degree. Throws when the measured batch is too short for the timer
// resolution (elapsed < 100 ticks).
double measure_ns_per_eval(Algorithm alg, int degree, long repetitions,
                           std::uint64_t* checksum = nullptr);

// Time ratios over classic Horner for degrees [deg_lo, deg_hi] in the given
// step. Single-threaded by contract; running anything else concurrently
// invalidates the report.
RatioReport run_ratios(int deg_lo, int deg_hi, int deg_step, long repetitions);

// CSV with the fixed header
// degree,t_horner_ns,t_comp_ns,t_cert_ns,t_dd_ns,ratio_comp,ratio_cert,ratio_dd
void write_csv(std::ostream& os, const RatioReport& report);

}  // namespace horncert::bench
