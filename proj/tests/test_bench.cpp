#include <doctest.h>

#include <sstream>

#include "horncert/bench.hpp"

using namespace horncert;

TEST_CASE("bench: self-ratio of the same algorithm is close to one") {
    const long reps = 400000;
    double a = bench::measure_ns_per_eval(bench::Algorithm::horner, 50, reps);
    double b = bench::measure_ns_per_eval(bench::Algorithm::horner, 50, reps);
    CHECK(a > 0.0);
    CHECK(b / a == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("bench: report invariants and deterministic checksums") {
    const long reps = 40000;
    auto r1 = bench::run_ratios(50, 200, 50, reps);
    auto r2 = bench::run_ratios(50, 200, 50, reps);
    REQUIRE(r1.rows.size() == 4);
    CHECK(r1.checksum == r2.checksum);  // numerics identical under timing

    double sum_comp = 0;
    for (const auto& row : r1.rows) {
        CHECK(row.t_horner_ns > 0.0);
        CHECK(row.t_comp_ns > 0.0);
        CHECK(row.t_cert_ns > 0.0);
        CHECK(row.t_dd_ns > 0.0);
        CHECK(row.t_dd_ns > row.t_comp_ns);  // double-double loses at every degree
        sum_comp += row.ratio_comp();
    }
    CHECK(r1.mean_ratio_comp ==
          doctest::Approx(sum_comp / static_cast<double>(r1.rows.size())));
    CHECK(r1.mean_ratio_comp > 2.0);  // commodity-hardware band, widened
    CHECK(r1.mean_ratio_comp < 8.0);
    CHECK_FALSE(r1.environment.empty());
}

TEST_CASE("bench: per-evaluation cost grows with the degree") {
    const long reps = 60000;
    double prev[4] = {0, 0, 0, 0};
    for (int degree : {25, 50, 100, 200}) {
        double t[4] = {
            bench::measure_ns_per_eval(bench::Algorithm::horner, degree, reps),
            bench::measure_ns_per_eval(bench::Algorithm::comp_horner, degree, reps),
            bench::measure_ns_per_eval(bench::Algorithm::comp_horner_certified, degree, reps),
            bench::measure_ns_per_eval(bench::Algorithm::dd_horner, degree, reps),
        };
        for (int k = 0; k < 4; ++k) {
            if (prev[k] > 0.0) CHECK(t[k] > 0.9 * prev[k]);  // 10% noise band
            prev[k] = t[k];
        }
    }
}

TEST_CASE("bench: CSV header is pinned") {
    auto r = bench::run_ratios(5, 5, 5, 20000);
    std::stringstream ss;
    bench::write_csv(ss, r);
    std::string header;
    std::getline(ss, header);
    CHECK(header ==
          "degree,t_horner_ns,t_comp_ns,t_cert_ns,t_dd_ns,ratio_comp,ratio_cert,ratio_dd");
    std::string row;
    std::getline(ss, row);
    CHECK(row.substr(0, 2) == "5,");
}

TEST_CASE("bench: rejects unusable parameters") {
    CHECK_THROWS(bench::measure_ns_per_eval(bench::Algorithm::horner, 0, 1000));
    CHECK_THROWS(bench::run_ratios(10, 5, 5, 1000));
}
