#include <cmath>

#include <doctest.h>

#include "reference.hpp"
#include "ricefn/errors.hpp"
#include "ricefn/special.hpp"

namespace ref = ricefn::reference;

namespace {

double rel(double got, long double want) { return static_cast<double>(std::fabs((got - want) / want)); }

}  // namespace

TEST_CASE("bessel_i_scaled at the origin") {
    CHECK(ricefn::bessel_i_scaled(0, 0.0) == 1.0);
    for (int n = 1; n < 6; ++n) CHECK(ricefn::bessel_i_scaled(n, 0.0) == 0.0);
    CHECK_THROWS_AS(ricefn::bessel_i_scaled(0, -1.0), ricefn::DomainError);
}

TEST_CASE("bessel_i_scaled(0, 10) against the ascending series") {
    CHECK(rel(ricefn::bessel_i_scaled(0, 10.0), ref::bessel_i_scaled(0, 10.0L)) <= 1e-13);
}

TEST_CASE("bessel_i_scaled across both regimes") {
    for (int n = 0; n <= 8; ++n) {
        for (double x = 1e-3; x <= 900.0; x *= 1.05) {
            const double v = ricefn::bessel_i_scaled(n, x);
            CHECK(rel(v, ref::bessel_i_scaled(n, x)) <= 1e-13);
            CHECK(v > 0.0);
            if (n == 0) CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("bessel_i_scaled_real for fractional orders") {
    for (double nu : {0.2, 0.5, 0.7, 1.9, 3.5, 7.25}) {
        for (double x = 1e-2; x <= 200.0; x *= 1.1) {
            CHECK(rel(ricefn::bessel_i_scaled_real(nu, x), ref::bessel_i_scaled(nu, x)) <= 1e-13);
        }
    }
}

TEST_CASE("bessel_i_scaled is continuous where the algorithm switches") {
    for (int n = 0; n <= 3; ++n) {
        const double below = ricefn::bessel_i_scaled(n, std::nextafter(25.0, 0.0));
        const double at = ricefn::bessel_i_scaled(n, 25.0);
        const double above = ricefn::bessel_i_scaled(n, std::nextafter(25.0, 30.0));
        CHECK(std::fabs(above - below) <= 1e-12 * at);
        CHECK(std::fabs(above - at) <= 1e-12 * at);
    }
}

TEST_CASE("bessel_i_gross trivial values") {
    for (int terms : {1, 2, 20, 700}) {
        CHECK(ricefn::bessel_i_gross(0, 0.0, terms) == 1.0);
        CHECK(ricefn::bessel_i_gross(3, 0.0, terms) == 0.0);
    }
    CHECK_THROWS_AS(ricefn::bessel_i_gross(0, -1.0, 20), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::bessel_i_gross(0, 1.0, 0), ricefn::DomainError);
}

TEST_CASE("bessel_i_gross converges to I_n at rate 1/L^2") {
    // The reweighting factors Gamma(L+l) L^(1-2l) / Gamma(L-l+1) equal
    // prod_{j<l} (1 - j^2/L^2), so doubling L divides the error by about 4.
    for (int n : {0, 1, 3}) {
        for (double x : {1.0, 5.0, 10.0}) {
            const long double want = ref::bessel_i_scaled(n, x) * std::exp(static_cast<long double>(x));
            const double e20 = rel(ricefn::bessel_i_gross(n, x, 20), want);
            const double e40 = rel(ricefn::bessel_i_gross(n, x, 40), want);
            const double e80 = rel(ricefn::bessel_i_gross(n, x, 80), want);
            CHECK(e40 < e20);
            CHECK(e20 / e40 == doctest::Approx(4.0).epsilon(0.35));
            CHECK(e40 / e80 == doctest::Approx(4.0).epsilon(0.2));
            // Every reweighting factor is at most 1, so the sum undershoots.
            CHECK(ricefn::bessel_i_gross(n, x, 20) < want);
        }
    }
}

TEST_CASE("bessel_i_gross overflow is reported") {
    CHECK_THROWS_AS(ricefn::bessel_i_gross(0, 2000.0, 700), ricefn::OverflowError);
}

TEST_CASE("bessel_i_half order 1/2 is sqrt(2/(pi x)) sinh x") {
    for (double x : {1e-3, 0.1, 0.5, 1.0, 4.0, 20.0, 100.0, 700.0}) {
        const long double want = std::sqrt(2.0L / (ref::kPi * x)) * std::sinh(static_cast<long double>(x));
        CHECK(rel(ricefn::bessel_i_half(0.5, x).value, want) <= 1e-14);
    }
}

TEST_CASE("bessel_i_half(3/2, 2)") {
    const long double x = 2.0L;
    const long double want = std::sqrt(2.0L / (ref::kPi * x)) * (std::cosh(x) - std::sinh(x) / x);
    const auto r = ricefn::bessel_i_half(1.5, 2.0);
    CHECK(rel(r.value, want) <= 1e-14);
    CHECK(r.work > 0);
}

TEST_CASE("bessel_i_half near the origin") {
    const long double x = 1e-8L;
    const long double want = std::sqrt(2.0L / (ref::kPi * x)) * x * (1.0L + x * x / 6.0L);
    CHECK(rel(ricefn::bessel_i_half(0.5, 1e-8).value, want) <= 1e-10);
}

TEST_CASE("bessel_i_half rejects bad arguments") {
    CHECK_THROWS_AS(ricefn::bessel_i_half(1.0, 2.0), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::bessel_i_half(-0.5, 2.0), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::bessel_i_half(0.5, 0.0), ricefn::DomainError);
}

TEST_CASE("bessel_i_half matches the upward recurrence") {
    // Orders up to 5/2: beyond that the recurrence reference itself loses
    // digits near x = 0.1 through the same cancellation as the closed form.
    for (double nu : {0.5, 1.5, 2.5}) {
        for (double x = 0.1; x <= 50.0; x *= 1.02) {
            CHECK(rel(ricefn::bessel_i_half(nu, x).value, ref::bessel_i_half_recurrence(nu, x)) <= 1e-11);
        }
    }
}

TEST_CASE("bessel_i_half error estimate covers the cancellation") {
    for (double nu : {3.5, 4.5, 6.5, 9.5}) {
        for (double x = 0.1; x <= 50.0; x *= 1.1) {
            const auto r = ricefn::bessel_i_half(nu, x);
            const long double want = ref::bessel_i_scaled(nu, x) * std::exp(static_cast<long double>(x));
            CHECK(std::fabs(r.value - want) <= r.error_estimate);
        }
    }
}
