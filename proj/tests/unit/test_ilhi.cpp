#include <cmath>
#include <vector>

#include <doctest.h>

#include "reference.hpp"
#include "ricefn/errors.hpp"
#include "ricefn/ilhi.hpp"
#include "ricefn/oracles.hpp"
#include "ricefn/special.hpp"

using ricefn::IlhiParams;
using ricefn::TruncationVariant;

namespace {

const std::vector<double> kGridM{0.0, 0.5, 1.2, 3.0};
const std::vector<double> kGridHalfN{0.5, 1.5, 2.5, 3.5};
const std::vector<double> kGridA{1.1, 1.8, 2.2, 5.0};
const std::vector<double> kGridZ{0.5, 4.0, 10.0};

bool closed_form_defined(double m, double n) { return m - (n - 0.5) + 0.5 > 0.0; }

double oracle(const IlhiParams& p) { return ricefn::ilhi_quad(p.m, p.n, p.a, p.z).value; }

}  // namespace

TEST_CASE("closed form trivial values and domain") {
    CHECK(ricefn::ilhi_closed_half({1.0, 0.5, 2.0, 0.0}).value == 0.0);
    CHECK_THROWS_AS(ricefn::ilhi_closed_half({1.0, 1.0, 2.0, 1.0}), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::ilhi_closed_half({1.0, 0.5, 1.0, 1.0}), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::ilhi_closed_half({0.0, 2.5, 2.0, 1.0}), ricefn::DomainError);
    try {
        ricefn::ilhi_closed_half({0.5, 2.5, 2.0, 1.0});
        FAIL("expected DomainError");
    } catch (const ricefn::DomainError& e) {
        CHECK(std::string(e.what()).find("k = 1") != std::string::npos);
    }
}

TEST_CASE("closed form at n = 1/2 reduces to two incomplete gammas") {
    const long double g1 = std::exp(ricefn::reference::ln_lower_gamma(1.5L, 3.0L));
    const long double g3 = std::exp(ricefn::reference::ln_lower_gamma(1.5L, 9.0L));
    const long double want = (g1 - g3 / std::pow(3.0L, 1.5L)) / std::sqrt(2.0L * ricefn::reference::kPi);
    const auto r = ricefn::ilhi_closed_half({1.0, 0.5, 2.0, 3.0});
    CHECK(std::fabs(r.value - want) <= 1e-14 * want);
    CHECK(std::fabs(r.value - oracle({1.0, 0.5, 2.0, 3.0})) <= 1e-11 * want);
}

TEST_CASE("closed form at a figure parameter point") {
    const IlhiParams p{1.2, 1.5, 1.8, 4.0};
    CHECK(std::fabs(ricefn::ilhi_closed_half(p).value - oracle(p)) <= 1e-11 * oracle(p));
}

TEST_CASE("exact series agrees with the closed form for half-odd n") {
    for (double m : kGridM) {
        for (double n : kGridHalfN) {
            if (!closed_form_defined(m, n)) continue;
            for (double a : kGridA) {
                for (double z : kGridZ) {
                    const IlhiParams p{m, n, a, z};
                    const double closed = ricefn::ilhi_closed_half(p).value;
                    CHECK(std::fabs(ricefn::ilhi_series(p).value - closed) <= 1e-9 * closed);
                }
            }
        }
    }
}

TEST_CASE("exact series examples") {
    CHECK(ricefn::ilhi_series({0.4, 0.7, 2.0, 0.0}).value == 0.0);
    CHECK(std::fabs(ricefn::ilhi_series({0.0, 0.0, 2.0, 60.0}, 1e-13).value - 1.0 / std::sqrt(3.0)) <= 1e-9);
    const IlhiParams p{1.2, 0.7, 1.8, 4.0};
    CHECK(std::fabs(ricefn::ilhi_series(p, 1e-13).value - oracle(p)) <= 1e-10 * oracle(p));
    CHECK_THROWS_AS(ricefn::ilhi_series({0.0, 0.5, 1.0, 1.0}), ricefn::DomainError);
    CHECK_THROWS_AS(ricefn::ilhi_series({0.0, 0.5, 0.5, 1.0}), ricefn::DomainError);
}

TEST_CASE("exact series matches the oracle for general orders") {
    for (double m : {-0.3, 0.0, 1.2, 3.0}) {
        for (double n : {0.0, 0.7, 1.0, 1.9, 4.0}) {
            if (!(m + n > -1.0)) continue;
            for (double a : kGridA) {
                for (double z : kGridZ) {
                    const IlhiParams p{m, n, a, z};
                    const double want = oracle(p);
                    CHECK(std::fabs(ricefn::ilhi_series(p).value - want) <= 1e-10 * want);
                }
            }
        }
    }
}

TEST_CASE("partial sums increase with L") {
    for (const IlhiParams& p : {IlhiParams{1.2, 0.7, 1.8, 4.0}, IlhiParams{2.2, 1.0, 1.1, 10.0}}) {
        double previous = 0.0;
        for (int terms = 0; terms <= 60; ++terms) {
            const double v = ricefn::ilhi_series_partial(p, terms).value;
            CHECK(v >= previous);
            previous = v;
        }
    }
}

TEST_CASE("ilhi_poly trivial values") {
    CHECK(ricefn::ilhi_poly({1.0, 0.5, 2.0, 0.0}, 700).value == 0.0);
    CHECK(ricefn::ilhi_poly({1.0, 0.5, 2.0, 3.0}, 10).work == 11);
    CHECK_THROWS_AS(ricefn::ilhi_poly({1.0, 0.5, 0.9, 3.0}, 10), ricefn::DomainError);
}

TEST_CASE("ilhi_poly at L = 700 approaches the Lipschitz limit") {
    CHECK(std::fabs(ricefn::ilhi_poly({0.0, 0.0, 2.0, 60.0}, 700).value - 1.0 / std::sqrt(3.0)) <= 1e-6);
}

TEST_CASE("ilhi_poly converges to the exact series at rate 1/L^2") {
    for (const IlhiParams& p : {IlhiParams{2.2, 1.0, 2.2, 5.0}, IlhiParams{1.2, 0.7, 1.8, 4.0}}) {
        const double exact = ricefn::ilhi_series(p).value;
        const double e100 = exact - ricefn::ilhi_poly(p, 100).value;
        const double e200 = exact - ricefn::ilhi_poly(p, 200).value;
        const double e400 = exact - ricefn::ilhi_poly(p, 400).value;
        CHECK(e100 > 0.0);
        CHECK(e100 / e200 == doctest::Approx(4.0).epsilon(0.05));
        CHECK(e200 / e400 == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("oracle decreases in n") {
    for (double m : kGridM) {
        for (double a : kGridA) {
            for (double z : kGridZ) {
                double previous = oracle({m, 0.5, a, z});
                for (double n : {0.7, 1.0, 1.5, 2.5}) {
                    const double v = oracle({m, n, a, z});
                    CHECK(v < previous);
                    previous = v;
                }
            }
        }
    }
}

TEST_CASE("substituted order") {
    CHECK(ricefn::ilhi_substituted_order(0.5) == 0.5);
    CHECK(ricefn::ilhi_substituted_order(0.7) == 0.5);
    CHECK(ricefn::ilhi_substituted_order(1.49) == 0.5);
    CHECK(ricefn::ilhi_substituted_order(1.5) == 1.5);
    CHECK(ricefn::ilhi_substituted_order(1.9) == 1.5);
    CHECK(ricefn::ilhi_substituted_order(3.5) == 3.5);
}

TEST_CASE("upper bound examples") {
    const IlhiParams half{1.2, 1.5, 1.8, 4.0};
    CHECK(ricefn::ilhi_upper_bound(half) == ricefn::ilhi_closed_half(half).value);
    const IlhiParams p{1.2, 0.7, 1.8, 4.0};
    CHECK(ricefn::ilhi_upper_bound(p) == ricefn::ilhi_closed_half({1.2, 0.5, 1.8, 4.0}).value);
    CHECK(ricefn::ilhi_upper_bound(p) >= oracle(p));
    const IlhiParams q{2.2, 1.9, 2.2, 5.0};
    CHECK(ricefn::ilhi_upper_bound(q) == ricefn::ilhi_closed_half({2.2, 1.5, 2.2, 5.0}).value);
    CHECK(ricefn::ilhi_upper_bound(q) >= oracle(q));
    CHECK_THROWS_AS(ricefn::ilhi_upper_bound({1.0, 0.3, 2.0, 1.0}), ricefn::DomainError);
}

TEST_CASE("upper bound dominates the oracle on the grid") {
    for (double m : kGridM) {
        for (double n : {0.5, 0.7, 1.0, 1.5, 1.9, 2.5, 3.5}) {
            if (!closed_form_defined(m, ricefn::ilhi_substituted_order(n))) continue;
            for (double a : kGridA) {
                for (double z : kGridZ) {
                    const IlhiParams p{m, n, a, z};
                    const auto quad = ricefn::ilhi_quad(m, n, a, z);
                    const auto closed = ricefn::ilhi_closed_half({m, ricefn::ilhi_substituted_order(n), a, z});
                    // Equality holds at half-odd n, so allow both error estimates.
                    CHECK(ricefn::ilhi_upper_bound(p) >= quad.value - quad.error_estimate - closed.error_estimate);
                }
            }
        }
    }
}

TEST_CASE("truncation bound examples") {
    const IlhiParams half{1.2, 1.5, 1.8, 4.0};
    for (int terms : {1, 10, 50}) {
        CHECK(ricefn::ilhi_truncation_bound(half, terms, TruncationVariant::plain) >= -1e-15);
    }
    const IlhiParams p{2.2, 1.0, 2.2, 5.0};
    CHECK(ricefn::ilhi_truncation_bound(p, 700, TruncationVariant::gross) >=
          oracle(p) - ricefn::ilhi_poly(p, 700).value);
    const IlhiParams q{1.2, 0.7, 1.8, 4.0};
    CHECK(ricefn::ilhi_truncation_bound(q, 50, TruncationVariant::plain) >=
          oracle(q) - ricefn::ilhi_series_partial(q, 50).value);
}

TEST_CASE("limit-safe channel as a approaches 1") {
    for (double m : {0.0, 1.2, 3.0}) {
        for (double n : {0.5, 1.5}) {
            if (!closed_form_defined(m, n)) continue;
            const double z = 4.0;
            // Cubic extrapolation from direct evaluations at a - 1 = 0.25e-3 ... 1e-3.
            const double nodes[4] = {0.25e-3, 0.5e-3, 0.75e-3, 1e-3};
            double values[4];
            for (int i = 0; i < 4; ++i) values[i] = ricefn::ilhi_closed_half({m, n, 1.0 + nodes[i], z}).value;
            const auto extrapolate = [&](double eps) {
                double sum = 0.0;
                for (int i = 0; i < 4; ++i) {
                    double basis = 1.0;
                    for (int j = 0; j < 4; ++j) {
                        if (j != i) basis *= (eps - nodes[j]) / (nodes[i] - nodes[j]);
                    }
                    sum += basis * values[i];
                }
                return sum;
            };
            for (double eps : {1e-4, 1e-7}) {
                const IlhiParams p{m, n, 1.0 + eps, z};
                const double v = ricefn::ilhi_closed_half(p).value;
                CHECK(std::fabs(v - extrapolate(eps)) <= 1e-8 * v);
                CHECK(std::fabs(v - oracle(p)) <= 1e-8 * v);
            }
            // Continuity across the switch at (a - 1) z = 1e-6: extrapolate
            // linearly from two points on each side to the switch itself.
            const auto side = [&](double c1, double c2) {
                const double a1 = 1.0 + c1 / z, a2 = 1.0 + c2 / z, at = 1.0 + 1e-6 / z;
                const double v1 = ricefn::ilhi_closed_half({m, n, a1, z}).value;
                const double v2 = ricefn::ilhi_closed_half({m, n, a2, z}).value;
                return v1 + (v2 - v1) * (at - a1) / (a2 - a1);
            };
            const double below = side(0.99e-6, 0.995e-6);
            const double above = side(1.01e-6, 1.005e-6);
            CHECK(std::fabs(below - above) <= 1e-12 * above);
        }
    }
}
