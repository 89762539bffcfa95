#include "horncert/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "horncert/compensated.hpp"
#include "horncert/generator.hpp"
#include "horncert/oracle.hpp"

namespace horncert::experiments {
namespace {

ExactScalar gamma_exact(long long k) {
    ExactScalar ku = ExactScalar::from_int(k) * ExactScalar::from_ratio(1, 1L << 53);
    return ku / (ExactScalar::from_int(1) - ku);
}

const char* classify(bool certified, bool faithful) {
    if (certified) return kCertifiedFaithful;
    return faithful ? kFaithfulUndetected : kUnfaithful;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Sweep band around the root: edge chosen so the condition number starts
// near 1e4 and grows past 1/u toward the center.
double band_half_width(int multiplicity) {
    return 2.0 / (std::pow(10.0, 4.0 / multiplicity) + 1.0);
}

}  // namespace

std::vector<RootSweepRow> run_root_sweep(int multiplicity, int points) {
    if (points < 2) throw std::invalid_argument("run_root_sweep: need >= 2 points");
    const Polynomial p = binomial_expand(multiplicity);
    const double w = band_half_width(multiplicity);
    const double step = 2.0 * w / static_cast<double>(points - 1);
    std::vector<RootSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        double x = (1.0 - w) + static_cast<double>(k) * step;
        ExactScalar exact = oracle::eval_exact(p, x);
        if (exact.is_zero()) continue;  // the root itself carries no verdict
        CertifiedEval ce = comp_horner_certified(p, x);
        double classic = horner(p, x);
        ExactScalar aexact = exact.abs();
        ExactScalar cond = oracle::eval_abs_exact(p, x) / aexact;
        auto verdict = oracle::is_faithful(ce.value, exact);
        RootSweepRow row;
        row.multiplicity = multiplicity;
        row.x = x;
        row.cond = cond.to_double();
        row.rel_err_comp =
            ((ExactScalar::from_double(ce.value) - exact).abs() / aexact).to_double();
        row.rel_err_classic =
            ((ExactScalar::from_double(classic) - exact).abs() / aexact).to_double();
        row.certified = ce.is_faithful;
        row.oracle_faithful = verdict.faithful;
        row.cls = classify(ce.is_faithful, verdict.faithful);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_fig1_csv(std::ostream& os, const std::vector<RootSweepRow>& rows) {
    os << "multiplicity,x,cond,rel_err_comp,rel_err_classic,certificate_class\n";
    for (const auto& r : rows)
        os << r.multiplicity << ',' << fmt(r.x) << ',' << fmt(r.cond) << ','
           << fmt(r.rel_err_comp) << ',' << fmt(r.rel_err_classic) << ',' << r.cls
           << "\n";
}

std::vector<CorpusRow> run_corpus_sweep(const CorpusParams& params) {
    if (params.count < 1) throw std::invalid_argument("run_corpus_sweep: empty corpus");
    const int threads = std::max(1, params.threads);
    std::vector<CorpusRow> rows(static_cast<std::size_t>(params.count));
    const ExactScalar u = ExactScalar::from_ratio(1, 1L << 53);
    const ExactScalar g2n = gamma_exact(2LL * params.degree);
    const ExactScalar envelope_factor = g2n * g2n;

    auto work = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            SplitMix64 jig(params.seed ^ (0x5bd1e995u + static_cast<std::uint64_t>(i)));
            double t = params.count == 1
                           ? 0.0
                           : static_cast<double>(i) / static_cast<double>(params.count - 1);
            double exponent = params.cond_lo_exp +
                              (params.cond_hi_exp - params.cond_lo_exp) * t +
                              0.3 * (jig.next_unit() - 0.5);
            GeneratorSpec spec{params.degree, std::pow(10.0, exponent), params.x,
                               params.seed + static_cast<std::uint64_t>(i)};
            Polynomial poly = generate(spec);
            CertifiedEval ce = comp_horner_certified(poly, params.x);
            ExactScalar exact = oracle::eval_exact(poly, params.x);
            ExactScalar aexact = exact.abs();
            ExactScalar cond = oracle::eval_abs_exact(poly, params.x) / aexact;
            ExactScalar abs_err = (ExactScalar::from_double(ce.value) - exact).abs();
            ExactScalar rel_err = abs_err / aexact;
            auto verdict = oracle::is_faithful(ce.value, exact);

            CorpusRow row;
            row.measured_cond = cond.to_double();
            row.relative_error = rel_err.to_double();
            row.err_bound = ce.err_bound;
            row.abs_error = abs_err.to_double();
            row.status_ok = ce.status == EvalStatus::ok;
            row.certified = ce.is_faithful;
            row.oracle_faithful = verdict.faithful;
            row.bound_sound = !row.status_ok ||
                              abs_err <= ExactScalar::from_double(ce.err_bound);
            row.rel_bound_ok = rel_err <= u + envelope_factor * cond;
            row.cls = classify(ce.is_faithful, verdict.faithful);
            rows[static_cast<std::size_t>(i)] = std::move(row);
        }
    };

    if (threads == 1) {
        work(0, params.count);
    } else {
        std::vector<std::thread> pool;
        int chunk = (params.count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk;
            int hi = std::min(params.count, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(rows.begin(), rows.end(), [](const CorpusRow& a, const CorpusRow& b) {
        return a.measured_cond < b.measured_cond;
    });
    return rows;
}

void write_fig2_csv(std::ostream& os, const std::vector<CorpusRow>& rows) {
    os << "measured_cond,relative_error,certificate_class\n";
    for (const auto& r : rows)
        os << fmt(r.measured_cond) << ',' << fmt(r.relative_error) << ',' << r.cls << "\n";
}

std::vector<BoundSweepRow> run_bound_sweep(int points) {
    if (points < 2) throw std::invalid_argument("run_bound_sweep: need >= 2 points");
    const int n = 5;
    const Polynomial p = binomial_expand(n);
    const ExactScalar u = ExactScalar::from_ratio(1, 1L << 53);
    const ExactScalar g2n = gamma_exact(2 * n);
    const double w = band_half_width(n);
    const double step = 2.0 * w / static_cast<double>(points - 1);
    std::vector<BoundSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        double x = (1.0 - w) + static_cast<double>(k) * step;
        if (x == 1.0) x = oracle::succ(x);  // avoid the exact root
        ExactScalar exact = oracle::eval_exact(p, x);
        ExactScalar ptilde = oracle::eval_abs_exact(p, x);
        CertifiedEval ce = comp_horner_certified(p, x);
        ExactScalar true_err = (ExactScalar::from_double(ce.value) - exact).abs();
        ExactScalar apriori = u * exact.abs() + g2n * g2n * ptilde;
        ExactScalar beta = ExactScalar::from_double(ce.err_bound);
        BoundSweepRow row;
        row.x = x;
        row.cond = (ptilde / exact.abs()).to_double();
        row.true_error = true_err.to_double();
        row.beta_hat = ce.err_bound;
        row.apriori_bound = apriori.to_double();
        row.dynamic_le_apriori = beta <= apriori;
        row.both_dominate = true_err <= beta && true_err <= apriori;
        rows.push_back(row);
    }
    return rows;
}

void write_fig3_csv(std::ostream& os, const std::vector<BoundSweepRow>& rows) {
    os << "x,cond,true_error,beta_hat,apriori_bound\n";
    for (const auto& r : rows)
        os << fmt(r.x) << ',' << fmt(r.cond) << ',' << fmt(r.true_error) << ','
           << fmt(r.beta_hat) << ',' << fmt(r.apriori_bound) << "\n";
}

std::vector<ThresholdRow> run_threshold_table() {
    std::vector<ThresholdRow> rows;
    for (int n : {10, 100, 200, 300, 400, 500})
        rows.push_back({n, apriori_threshold(n)});
    return rows;
}

void write_table1_csv(std::ostream& os, const std::vector<ThresholdRow>& rows) {
    os << "degree,threshold\n";
    for (const auto& r : rows) os << r.degree << ',' << fmt(r.threshold) << "\n";
}

}  // namespace horncert::experiments
