#include <doctest.h>

#include <cmath>

#include "horncert/compensated.hpp"
#include "horncert/ddarith.hpp"
#include "horncert/generator.hpp"
#include "horncert/oracle.hpp"
#include "test_util.hpp"

using namespace horncert;
using testutil::exact;
using testutil::same_bits;

namespace {
const ExactScalar kU = ExactScalar::from_ratio(1, 1L << 53);

ExactScalar dd_exact(DoubleDouble a) { return exact(a.hi) + exact(a.lo); }
}  // namespace

TEST_CASE("dd_add: identities and exactly representable sums") {
    DoubleDouble one{1.0, 0.0};
    auto r = dd_add(one, 0.0);
    CHECK(same_bits(r.hi, 1.0));
    CHECK(r.lo == 0.0);

    r = dd_add(one, 0x1p-60);  // fits in the pair without rounding
    CHECK(r.hi == 1.0);
    CHECK(r.lo == 0x1p-60);
    CHECK(dd_exact(r) == exact(1.0) + exact(0x1p-60));
}

TEST_CASE("dd_mul_f64: identities and exactly representable products") {
    DoubleDouble a{1.0 + 0x1p-30, 0x1p-70};
    auto r = dd_mul_f64(a, 1.0);
    CHECK(r.hi == a.hi);
    CHECK(r.lo == a.lo);

    auto q = dd_mul_f64(DoubleDouble{1.0, 0.0}, 1.0 + 0x1p-27);
    CHECK(dd_exact(q) == exact(1.0 + 0x1p-27));  // 54 significant bits fit the pair
}

TEST_CASE("dd operations: renormalized and within 4u^2 of the exact result") {
    SplitMix64 rng(41);
    ExactScalar four_u2 = ExactScalar::from_int(4) * kU * kU;
    for (int i = 0; i < 5000; ++i) {
        DoubleDouble a{testutil::random_double(rng, -30, 30), 0.0};
        a.lo = testutil::random_double(rng, -90, -60) * (a.hi < 0 ? -1 : 1);
        if (std::fabs(a.lo) > kUnitRoundoff * std::fabs(a.hi)) a.lo = 0.0;
        double b = testutil::random_double(rng, -30, 30);

        auto s = dd_add(a, b);
        CHECK(std::fabs(s.lo) <= kUnitRoundoff * std::fabs(s.hi));
        ExactScalar sum = dd_exact(a) + exact(b);
        if (!sum.is_zero())
            CHECK((dd_exact(s) - sum).abs() <= four_u2 * sum.abs());

        auto m = dd_mul_f64(a, b);
        CHECK(std::fabs(m.lo) <= kUnitRoundoff * std::fabs(m.hi));
        ExactScalar prod = dd_exact(a) * exact(b);
        if (!prod.is_zero())
            CHECK((dd_exact(m) - prod).abs() <= four_u2 * prod.abs());
    }
}

TEST_CASE("dd_horner: exact on constants, doubled precision near a root") {
    CHECK(dd_horner(Polynomial{3.5}, 1e10) == 3.5);

    Polynomial p = binomial_expand(5);
    for (double x : {1.0 + 0x1p-12, 1.0 - 0x1p-13, 1.0 + 0x1p-9}) {
        double r = dd_horner(p, x);
        ExactScalar pe = oracle::eval_exact(p, x);
        ExactScalar rel = (exact(r) - pe).abs() / pe.abs();
        // doubled-precision shape: u + O(u^2) * cond, generous constant
        ExactScalar cnd = oracle::cond(p, x);
        ExactScalar bound = kU + ExactScalar::from_int(16 * 5 * 5) * kU * kU * cnd;
        CHECK(rel <= bound);
    }
}

TEST_CASE("dd_horner: agrees with comp_horner to 2 ulp on a moderate corpus") {
    SplitMix64 rng(42);
    for (int i = 0; i < 60; ++i) {
        double decades = 2.0 + 11.0 * rng.next_unit();  // cond well below 1/u
        GeneratorSpec spec{50, std::pow(10.0, decades), 0x1.5555555555555p+0,
                           4200 + static_cast<std::uint64_t>(i)};
        Polynomial p = generate(spec);
        double dd = dd_horner(p, spec.x);
        double ch = comp_horner(p, spec.x);
        CHECK(std::fabs(dd - ch) <= 2.0 * oracle::ulp(ch));
    }
}
