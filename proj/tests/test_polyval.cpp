#include <doctest.h>

#include <cmath>

#include "horncert/compensated.hpp"
#include "horncert/generator.hpp"
#include "horncert/oracle.hpp"
#include "horncert/polynomial.hpp"
#include "test_util.hpp"

using namespace horncert;
using testutil::exact;
using testutil::gamma_exact;
using testutil::same_bits;

TEST_CASE("Polynomial: construction rejects bad input") {
    CHECK_THROWS(Polynomial(std::vector<double>{}));
    CHECK_THROWS(Polynomial{1.0, std::nan("")});
    CHECK_THROWS(Polynomial{1.0, std::numeric_limits<double>::infinity()});
    Polynomial p{0.0, 0.0, 0.0};  // zero leading coefficient is fine
    CHECK(p.degree() == 2);
    CHECK(p.abs()[1] == 0.0);
}

TEST_CASE("horner: degree zero and exact cancellation") {
    CHECK(horner(Polynomial{5.0}, 123.456) == 5.0);
    CHECK(horner(binomial_expand(5), 1.0) == 0.0);  // integer arithmetic throughout
}

TEST_CASE("horner: classic error bound against the oracle") {
    SplitMix64 rng(21);
    for (int i = 0; i < 400; ++i) {
        Polynomial p = testutil::random_polynomial(rng, 20);
        double x = testutil::random_double(rng, -2, 1);
        double r = horner(p, x);
        ExactScalar err = (exact(r) - oracle::eval_exact(p, x)).abs();
        ExactScalar bound = gamma_exact(2 * 20) * oracle::eval_abs_exact(p, x);
        CHECK(err <= bound);
    }
}

TEST_CASE("eft_horner: degree zero performs no operation") {
    auto out = eft_horner(Polynomial{42.0}, 7.0);
    CHECK(out.value == 42.0);
    CHECK(out.pi.empty());
    CHECK(out.sigma.empty());
    CHECK(out.status == EvalStatus::ok);
}

TEST_CASE("eft_horner: value matches horner bit for bit") {
    SplitMix64 rng(22);
    for (int i = 0; i < 2000; ++i) {
        int degree = 1 + static_cast<int>(rng.next() % 60);
        Polynomial p = testutil::random_polynomial(rng, degree);
        double x = testutil::random_double(rng, -2, 2);
        CHECK(same_bits(eft_horner(p, x).value, horner(p, x)));
    }
}

namespace {

ExactScalar error_poly_exact(const std::vector<double>& pi,
                             const std::vector<double>& sigma, double x) {
    ExactScalar acc, xp = ExactScalar::from_int(1);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        acc += (exact(pi[i]) + exact(sigma[i])) * xp;
        xp *= exact(x);
    }
    return acc;
}

ExactScalar error_poly_abs_exact(const std::vector<double>& pi,
                                 const std::vector<double>& sigma, double x) {
    ExactScalar acc, xp = ExactScalar::from_int(1);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        acc += (exact(pi[i]).abs() + exact(sigma[i]).abs()) * xp;
        xp *= exact(std::fabs(x));
    }
    return acc;
}

}  // namespace

TEST_CASE("eft_horner: exact decomposition of the evaluation error") {
    // near the quintuple root, where the Horner error dominates the value
    Polynomial p5 = binomial_expand(5);
    double x = 1.0 + 0x1p-20;
    auto out = eft_horner(p5, x);
    REQUIRE(out.status == EvalStatus::ok);
    CHECK(exact(out.value) + error_poly_exact(out.pi, out.sigma, x) ==
          oracle::eval_exact(p5, x));

    SplitMix64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = testutil::random_polynomial(rng, 50);
        double xr = testutil::random_double(rng, -20, 0);  // |x| < 2
        auto o = eft_horner(p, xr);
        REQUIRE(o.status == EvalStatus::ok);
        CHECK(exact(o.value) + error_poly_exact(o.pi, o.sigma, xr) ==
              oracle::eval_exact(p, xr));
        // and the error terms are collectively small
        CHECK(error_poly_abs_exact(o.pi, o.sigma, xr) <=
              gamma_exact(2 * 50) * oracle::eval_abs_exact(p, xr));
    }
}

TEST_CASE("zero leading coefficients evaluate like the lower-degree polynomial") {
    Polynomial padded{3.0, -2.0, 0.5, 0.0, 0.0};
    Polynomial trimmed{3.0, -2.0, 0.5};
    SplitMix64 rng(28);
    for (int i = 0; i < 200; ++i) {
        double x = testutil::random_double(rng, -4, 4);
        CHECK(horner(padded, x) == horner(trimmed, x));
        CHECK(comp_horner(padded, x) == comp_horner(trimmed, x));
        auto out = eft_horner(padded, x);
        CHECK(out.status == EvalStatus::ok);  // zero products are not underflow
        CHECK(oracle::eval_exact(padded, x) == oracle::eval_exact(trimmed, x));
    }
}

TEST_CASE("eft_horner: underflowing products downgrade the status") {
    Polynomial p{0x1p-520, 0x1p-520};
    auto out = eft_horner(p, 0x1p-520);
    CHECK(out.status == EvalStatus::underflow_unverified);
    Polynomial q{0x1p600, 0x1p600};
    CHECK(eft_horner(q, 0x1p600).status == EvalStatus::overflow);
}

TEST_CASE("horner_sum: adding zero changes nothing") {
    SplitMix64 rng(24);
    for (int i = 0; i < 500; ++i) {
        int degree = static_cast<int>(rng.next() % 30);
        Polynomial p = testutil::random_polynomial(rng, degree);
        std::vector<double> zeros(p.degree() + 1, 0.0);
        double x = testutil::random_double(rng, -2, 2);
        CHECK(same_bits(horner_sum(p, Polynomial(zeros), x), horner(p, x)));
    }
    CHECK_THROWS(horner_sum(Polynomial{1.0, 2.0}, Polynomial{1.0}, 0.5));
}

TEST_CASE("horner_sum: forward error bound on the error polynomials") {
    SplitMix64 rng(25);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = testutil::random_polynomial(rng, 10);
        double x = testutil::random_double(rng, -3, 1);
        auto o = eft_horner(p, x);
        REQUIRE(o.status == EvalStatus::ok);
        Polynomial ppi(o.pi), psig(o.sigma);
        double s = horner_sum(ppi, psig, x);
        // |(p_pi + p_sigma)(x) - s| <= gamma_{2n+1} * (ptilde_pi + ptilde_sigma)(x)
        ExactScalar lhs = (error_poly_exact(o.pi, o.sigma, x) - exact(s)).abs();
        ExactScalar rhs = gamma_exact(2 * static_cast<long long>(ppi.degree()) + 1) *
                          error_poly_abs_exact(o.pi, o.sigma, x);
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("horner_sum: computable lower bound for non-negative inputs") {
    SplitMix64 rng(26);
    for (int i = 0; i < 300; ++i) {
        int degree = 1 + static_cast<int>(rng.next() % 24);
        Polynomial p = testutil::random_polynomial(rng, degree).abs();
        Polynomial q = testutil::random_polynomial(rng, degree).abs();
        double x = std::fabs(testutil::random_double(rng, -4, 1));
        double s = horner_sum(p, q, x);
        // (p+q)(x) <= (1+u)^{2n+1} * s
        ExactScalar sum_exact = oracle::eval_exact(p, x) + oracle::eval_exact(q, x);
        ExactScalar growth = (ExactScalar::from_int(1) +
                              ExactScalar::from_ratio(1, 1L << 53))
                                 .pow(2 * static_cast<unsigned long>(degree) + 1);
        CHECK(sum_exact <= growth * exact(s));
    }
}

TEST_CASE("abs_horner_sum: non-negative and dominates the signed evaluation") {
    std::vector<double> z2(2, 0.0);
    CHECK(abs_horner_sum(Polynomial(z2), Polynomial(z2), 3.0) == 0.0);
    CHECK(abs_horner_sum(Polynomial{1.0, -1.0}, Polynomial{0.0, 0.0}, -2.0) == 3.0);

    SplitMix64 rng(27);
    for (int i = 0; i < 1000; ++i) {
        int degree = 1 + static_cast<int>(rng.next() % 20);
        Polynomial p = testutil::random_polynomial(rng, degree);
        Polynomial q = testutil::random_polynomial(rng, degree);
        double x = testutil::random_double(rng, -2, 2);
        double a = abs_horner_sum(p, q, x);
        CHECK(a >= 0.0);
        CHECK(a >= std::fabs(horner_sum(p, q, x)));
    }
}
