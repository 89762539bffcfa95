#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "horncert/polynomial.hpp"

// The experiment suite behind the CLI: sweeps near the multiple root of
// (1-x)^n, the generated ill-conditioned corpus, the dynamic-versus-a-priori
// bound comparison, the threshold table and the timing table. Each run
// returns plot-ready rows; the CSV writers emit them sorted and with a
// mandatory header.

namespace horncert::experiments {

// Certification taxonomy of one evaluation, cross-checked by the oracle.
inline constexpr const char* kCertifiedFaithful = "certified_faithful";
inline constexpr const char* kFaithfulUndetected = "faithful_undetected";
inline constexpr const char* kUnfaithful = "unfaithful";

struct RootSweepRow {        // near-root sweep of (1-x)^n
    int multiplicity;
    double x;
    double cond;             // oracle-measured, rounded for reporting
    double rel_err_comp;     // exact relative error of the compensated value
    double rel_err_classic;  // same for classic Horner
    bool certified;          // runtime certificate
    bool oracle_faithful;    // ground truth
    std::string cls;
};

std::vector<RootSweepRow> run_root_sweep(int multiplicity, int points);
void write_fig1_csv(std::ostream& os, const std::vector<RootSweepRow>& rows);

struct CorpusRow {           // generated degree-50 corpus
    double measured_cond;
    double relative_error;
    std::string cls;
    double err_bound;        // validated bound reported by the certificate
    double abs_error;        // exact |value - p(x)|
    bool status_ok;          // evaluation carried no overflow/underflow flag
    bool bound_sound;        // abs_error <= err_bound, exact comparison
    bool certified;
    bool oracle_faithful;
    bool rel_bound_ok;       // relative error within u + gamma_{2n}^2 * cond
};

struct CorpusParams {
    int degree = 50;
    int count = 5000;
    double x = 0x1.5555555555555p+0;  // 4/3 rounded
    double cond_lo_exp = 2.0;         // decade range of targeted condition numbers
    double cond_hi_exp = 35.0;
    std::uint64_t seed = 20060915;
    int threads = 2;
};

std::vector<CorpusRow> run_corpus_sweep(const CorpusParams& params);
void write_fig2_csv(std::ostream& os, const std::vector<CorpusRow>& rows);

struct BoundSweepRow {       // dynamic vs a priori bound on (1-x)^5
    double x;
    double cond;
    double true_error;       // exact |value - p(x)|
    double beta_hat;         // dynamic validated bound
    double apriori_bound;    // u|p(x)| + gamma_{2n}^2 * ptilde(x), oracle-evaluated
    bool dynamic_le_apriori; // beta_hat <= apriori bound, exact comparison
    bool both_dominate;      // beta_hat and the a priori bound >= true error, exact
};

std::vector<BoundSweepRow> run_bound_sweep(int points);
void write_fig3_csv(std::ostream& os, const std::vector<BoundSweepRow>& rows);

struct ThresholdRow {
    int degree;
    double threshold;
};

std::vector<ThresholdRow> run_threshold_table();
void write_table1_csv(std::ostream& os, const std::vector<ThresholdRow>& rows);

}  // namespace horncert::experiments
