// Command line surface: evaluate or certify a single polynomial, generate
// ill-conditioned corpora, and reproduce the experiment CSVs.
//
// Exit codes: 0 ok, 1 usage, 2 numeric status (overflow/underflow or an
// unreachable generation target), 3 I/O.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "horncert/bench.hpp"
#include "horncert/compensated.hpp"
#include "horncert/ddarith.hpp"
#include "horncert/experiments.hpp"
#include "horncert/generator.hpp"
#include "horncert/oracle.hpp"
#include "horncert/polyfile.hpp"
#include "horncert/selftest.hpp"

namespace {

using namespace horncert;

std::string show(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a (%.17g)", v, v);
    return buf;
}

int cmd_eval(const std::string& poly_path, const std::string& x_text,
             const std::string& method) {
    Polynomial p = io::read_polynomial_file(poly_path);
    double x = io::parse_double(x_text);
    if (!std::isfinite(x)) {
        std::cerr << "eval: x must be finite\n";
        return 1;
    }
    if (method == "horner" || method == "dd") {
        double v = method == "horner" ? horner(p, x) : dd_horner(p, x);
        std::cout << "value = " << show(v) << "\n";
        return std::isfinite(v) ? 0 : 2;
    }
    if (method == "comp") {
        // same bits as comp_horner; the certified twin carries the status
        CertifiedEval ce = comp_horner_certified(p, x);
        std::cout << "value = " << show(ce.value) << "\n";
        return ce.status == EvalStatus::ok ? 0 : 2;
    }
    if (method == "certified") {
        CertifiedEval ce = comp_horner_certified(p, x);
        std::cout << "value = " << show(ce.value) << "\n"
                  << "err_bound = " << show(ce.err_bound) << "\n"
                  << "alpha_hat = " << show(ce.alpha_hat) << "\n"
                  << "is_faithful = " << (ce.is_faithful ? "true" : "false") << "\n"
                  << "status = " << to_string(ce.status) << "\n";
        return ce.status == EvalStatus::ok ? 0 : 2;
    }
    if (method == "exact") {
        ExactScalar v = oracle::eval_exact(p, x);
        std::cout << "exact = " << v.fraction_str() << " = " << show(v.to_double())
                  << "\n";
        return 0;
    }
    std::cerr << "eval: unknown method '" << method << "'\n";
    return 1;
}

int cmd_generate(int degree, double target_cond, const std::string& x_text,
                 std::uint64_t seed, int count, const std::string& out_path) {
    double x = io::parse_double(x_text);
    std::vector<io::CorpusRecord> records;
    for (int i = 0; i < count; ++i) {
        GeneratorSpec spec{degree, target_cond, x, seed + static_cast<std::uint64_t>(i)};
        Polynomial p = generate(spec);
        io::CorpusRecord rec;
        rec.coeffs.assign(p.coeffs().begin(), p.coeffs().end());
        rec.x = x;
        rec.seed = spec.seed;
        rec.target_cond = target_cond;
        rec.measured_cond = oracle::cond(p, x).to_double();
        records.push_back(std::move(rec));
    }
    if (out_path.empty() || out_path == "-") {
        io::write_corpus(std::cout, records);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        io::write_corpus(out, records);
        if (!out) throw std::runtime_error("write failed: " + out_path);
        std::cout << "wrote " << records.size() << " record(s) to " << out_path << "\n";
    }
    return 0;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

int cmd_experiment(const std::string& name, const std::string& out_dir, int points,
                   int degree, std::uint64_t seed, long reps) {
    namespace ex = horncert::experiments;
    if (name == "fig1") {
        std::vector<ex::RootSweepRow> rows;
        for (int n : {6, 8, 10, 12}) {
            auto part = ex::run_root_sweep(n, points);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        auto out = open_out(out_dir, "fig1.csv");
        ex::write_fig1_csv(out, rows);
        std::cout << "fig1.csv: " << rows.size() << " rows\n";
        return 0;
    }
    if (name == "fig2") {
        ex::CorpusParams params;
        params.count = points;
        params.degree = degree;
        params.seed = seed;
        auto rows = ex::run_corpus_sweep(params);
        auto out = open_out(out_dir, "fig2.csv");
        ex::write_fig2_csv(out, rows);
        std::size_t green = 0, blue = 0, red = 0;
        for (const auto& r : rows) {
            if (r.cls == ex::kCertifiedFaithful) ++green;
            else if (r.cls == ex::kFaithfulUndetected) ++blue;
            else ++red;
        }
        std::cout << "fig2.csv: " << rows.size() << " rows (certified " << green
                  << ", undetected-faithful " << blue << ", unfaithful " << red << ")\n";
        return 0;
    }
    if (name == "fig3") {
        auto rows = ex::run_bound_sweep(points);
        auto out = open_out(out_dir, "fig3.csv");
        ex::write_fig3_csv(out, rows);
        std::cout << "fig3.csv: " << rows.size() << " rows\n";
        return 0;
    }
    if (name == "table1") {
        auto rows = ex::run_threshold_table();
        auto out = open_out(out_dir, "table1.csv");
        ex::write_table1_csv(out, rows);
        for (const auto& r : rows)
            std::printf("n = %3d  threshold = %.3e\n", r.degree, r.threshold);
        return 0;
    }
    if (name == "table2") {
        auto report = bench::run_ratios(5, 200, 5, reps);
        auto out = open_out(out_dir, "table2.csv");
        bench::write_csv(out, report);
        std::printf("environment: %s\n", report.environment.c_str());
        std::printf("mean ratios:   comp/horner = %.2f  certified/horner = %.2f  "
                    "dd/horner = %.2f\n",
                    report.mean_ratio_comp, report.mean_ratio_cert, report.mean_ratio_dd);
        std::printf("median ratios: comp/horner = %.2f  certified/horner = %.2f  "
                    "dd/horner = %.2f\n",
                    report.median_ratio_comp, report.median_ratio_cert,
                    report.median_ratio_dd);
        std::printf("checksum: %" PRIu64 "\n", report.checksum);
        return 0;
    }
    std::cerr << "experiment: unknown name '" << name << "'\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        horncert::selftest::require();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App app{"compensated Horner evaluation with validated error bounds and "
                 "faithful-rounding certificates"};
    app.require_subcommand(1);

    std::string poly_path, x_text = "0", method = "certified";
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial file at a point");
    eval->add_option("poly_file", poly_path, "polynomial file, one coefficient per line")
        ->required();
    eval->add_option("--x", x_text, "evaluation point (decimal or hex float)")->required();
    eval->add_option("--method", method, "horner|comp|certified|dd|exact");

    int gen_degree = 50, gen_count = 1;
    double gen_cond = 1e10;
    std::string gen_x = "0x1.5555555555555p+0", gen_out;
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("generate", "generate ill-conditioned polynomials");
    gen->add_option("--degree", gen_degree, "polynomial degree (>= 2)");
    gen->add_option("--cond", gen_cond, "target condition number");
    gen->add_option("--x", gen_x, "evaluation point");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--count", gen_count, "number of polynomials");
    gen->add_option("--out", gen_out, "output corpus file ('-' for stdout)");

    std::string exp_name, exp_out = ".";
    int exp_points = 0, exp_degree = 50;
    std::uint64_t exp_seed = 20060915;
    long exp_reps = 20000;
    auto* exp = app.add_subcommand("experiment", "reproduce an experiment CSV");
    exp->add_option("name", exp_name, "fig1|fig2|fig3|table1|table2")->required();
    exp->add_option("--out", exp_out, "output directory");
    exp->add_option("--points", exp_points, "sample count (default per experiment)");
    exp->add_option("--degree", exp_degree, "corpus degree (fig2)");
    exp->add_option("--seed", exp_seed, "random seed (fig2)");
    exp->add_option("--reps", exp_reps, "timing repetitions (table2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval->parsed()) return cmd_eval(poly_path, x_text, method);
        if (gen->parsed())
            return cmd_generate(gen_degree, gen_cond, gen_x, gen_seed, gen_count, gen_out);
        if (exp->parsed()) {
            if (exp_points == 0)
                exp_points = exp_name == "fig2" ? 5000 : exp_name == "fig3" ? 400 : 2048;
            return cmd_experiment(exp_name, exp_out, exp_points, exp_degree, exp_seed,
                                  exp_reps);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
