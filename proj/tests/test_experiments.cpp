#include <doctest.h>

#include <sstream>

#include "horncert/experiments.hpp"
#include "horncert/oracle.hpp"

using namespace horncert;
namespace ex = horncert::experiments;

TEST_CASE("threshold table: published orders of magnitude") {
    auto rows = ex::run_threshold_table();
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].degree == 10);
    CHECK(rows[0].threshold == doctest::Approx(1.13e13).epsilon(5e-3));
    CHECK(rows[1].threshold == doctest::Approx(1.13e11).epsilon(5e-3));
    CHECK(rows[5].threshold == doctest::Approx(4.51e9).epsilon(5e-3));
    std::stringstream ss;
    ex::write_table1_csv(ss, rows);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "degree,threshold");
}

TEST_CASE("root sweep: taxonomy present and sound on a small grid") {
    auto rows = ex::run_root_sweep(6, 256);
    REQUIRE(rows.size() >= 255);
    int green = 0, blue = 0, red = 0;
    for (const auto& r : rows) {
        if (r.certified) CHECK(r.oracle_faithful);  // no overclaim anywhere
        if (r.cls == ex::kCertifiedFaithful) ++green;
        else if (r.cls == ex::kFaithfulUndetected) ++blue;
        else ++red;
    }
    CHECK(green > 0);
    CHECK(blue > 0);
    CHECK(red > 0);
    std::stringstream ss;
    ex::write_fig1_csv(ss, rows);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "multiplicity,x,cond,rel_err_comp,rel_err_classic,certificate_class");
}

TEST_CASE("corpus sweep: deterministic, sorted, sound on a small corpus") {
    ex::CorpusParams params;
    params.count = 60;
    params.threads = 2;
    auto rows = ex::run_corpus_sweep(params);
    auto rows2 = ex::run_corpus_sweep(params);
    REQUIRE(rows.size() == 60);
    int low_cond = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].measured_cond == rows2[i].measured_cond);  // thread-count invariant
        CHECK(rows[i].status_ok);
        CHECK(rows[i].bound_sound);
        CHECK(rows[i].rel_bound_ok);
        if (i) CHECK(rows[i - 1].measured_cond <= rows[i].measured_cond);
        if (rows[i].certified) CHECK(rows[i].oracle_faithful);
        if (rows[i].measured_cond <= 1e10) {
            // comfortably below the degree-50 threshold: the runtime test
            // must succeed, and the oracle must agree
            ++low_cond;
            CHECK(rows[i].certified);
            CHECK(rows[i].oracle_faithful);
        }
    }
    CHECK(low_cond > 0);
    params.threads = 1;
    auto rows1 = ex::run_corpus_sweep(params);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i].measured_cond == rows1[i].measured_cond);
}

TEST_CASE("bound sweep: dynamic bound below the a priori bound, both safe") {
    auto rows = ex::run_bound_sweep(100);
    REQUIRE(rows.size() == 100);
    int sharper = 0;
    for (const auto& r : rows) {
        CHECK(r.both_dominate);
        sharper += r.dynamic_le_apriori;
    }
    CHECK(sharper >= 95);  // the dynamic bound is the tighter one nearly everywhere
}
