#pragma once

// Test-side reference implementations. Each one uses a different algorithm
// from the library routine it checks, in long double, so that agreement is
// evidence rather than a tautology. None of these are tuned for speed.

#include <cmath>
#include <numbers>
#include <vector>

namespace ricefn::reference {

using real = long double;

inline constexpr real kPi = std::numbers::pi_v<long double>;

/// zeta(s) for s >= 2: direct sum to N plus an Euler-Maclaurin tail.
inline real zeta(int s) {
    constexpr int N = 1000;
    real sum = 0.0L;
    for (int j = N - 1; j >= 1; --j) sum += std::pow(static_cast<real>(j), -s);
    const real n = N;
    sum += std::pow(n, 1 - s) / (s - 1) + 0.5L * std::pow(n, -s) + s * std::pow(n, -s - 1) / 12.0L -
           s * (s + 1.0L) * (s + 2.0L) * std::pow(n, -s - 3) / 720.0L;
    return sum;
}

/// B_{2n} = (-1)^(n+1) 2 (2n)! zeta(2n) / (2 pi)^(2n), n = 1..count.
inline std::vector<real> bernoulli_even(int count) {
    std::vector<real> b(count + 1, 0.0L);
    real factorial = 1.0L;  // (2n)!
    for (int n = 1; n <= count; ++n) {
        factorial *= static_cast<real>(2 * n - 1) * static_cast<real>(2 * n);
        const real magnitude = 2.0L * factorial * zeta(2 * n) / std::pow(2.0L * kPi, 2 * n);
        b[n] = (n % 2 == 1) ? magnitude : -magnitude;
    }
    return b;
}

/// ln Gamma(x) by shifting x above 40 and summing 30 Stirling corrections.
inline real ln_gamma(real x) {
    static const std::vector<real> b = bernoulli_even(30);
    real shift = 0.0L;
    while (x < 40.0L) {
        shift += std::log(x);
        x += 1.0L;
    }
    real series = 0.0L;
    for (int n = 30; n >= 1; --n) series += b[n] / (2.0L * n * (2.0L * n - 1.0L) * std::pow(x, 2 * n - 1));
    return (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2.0L * kPi) + series - shift;
}

/// ln gamma(a, x) from the continued fraction
///   gamma(a, x) = x^a e^-x / (a - a x / (a+1 + x / (a+2 - (a+1) x / (a+3 + 2x / ...)))),
/// evaluated bottom-up at a fixed depth. Reliable for x up to about a + 1.
inline real ln_lower_gamma_cf(real a, real x, int depth = 6000) {
    real tail = 0.0L;
    for (int j = depth; j >= 1; --j) {
        const real numerator = (j % 2 == 1) ? -(a + (j - 1) / 2) * x : (j / 2) * x;
        tail = numerator / (a + j + tail);
    }
    return a * std::log(x) - x - std::log(a + tail);
}

/// ln Gamma(a, x) from the Legendre continued fraction
///   Gamma(a, x) = x^a e^-x / (x + (1-a) / (1 + 1 / (x + (2-a) / (1 + 2 / (x + ...))))),
/// evaluated bottom-up.
inline real ln_upper_gamma_cf(real a, real x, int depth = 6000) {
    real tail = 0.0L;
    for (int j = 2 * depth; j >= 1; --j) {
        const real numerator = (j % 2 == 1) ? (j + 1) / 2 - a : static_cast<real>(j / 2);
        const real denominator = (j % 2 == 1) ? 1.0L : x;
        tail = numerator / (denominator + tail);
    }
    return a * std::log(x) - x - std::log(x + tail);
}

/// ln gamma(a, x): the lower fraction below a + 1, Gamma(a) - Gamma(a, x) above.
inline real ln_lower_gamma(real a, real x) {
    if (x <= a + 1.0L) return ln_lower_gamma_cf(a, x);
    const real ratio = std::exp(ln_upper_gamma_cf(a, x) - ln_gamma(a));
    return ln_gamma(a) + std::log1p(-ratio);
}

/// erf by the alternating Maclaurin series for |x| <= 3 and the Laplace
/// continued fraction for erfc beyond.
inline real erf(real x) {
    const real ax = std::fabs(x);
    real value;
    if (ax <= 3.0L) {
        real term = ax;  // (-1)^k x^(2k+1) / k!
        real sum = 0.0L;
        for (int k = 0; k < 400; ++k) {
            const real contribution = term / (2 * k + 1);
            sum += contribution;
            if (std::fabs(contribution) < 1e-24L * std::fabs(sum)) break;
            term *= -ax * ax / (k + 1);
        }
        value = 2.0L / std::sqrt(kPi) * sum;
    } else {
        // erfc(x) = e^-x^2 / sqrt(pi) * 1 / (x + (1/2) / (x + 1 / (x + (3/2) / (x + ...))))
        real tail = 0.0L;
        for (int j = 400; j >= 1; --j) tail = (j / 2.0L) / (ax + tail);
        value = 1.0L - std::exp(-ax * ax) / std::sqrt(kPi) / (ax + tail);
    }
    return x < 0 ? -value : value;
}

/// e^-x I_nu(x) from the ascending series; every term is positive so long
/// double keeps full accuracy for x up to a few thousand.
inline real bessel_i_scaled(real nu, real x) {
    if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
    const real half = x / 2.0L;
    real ln_term = nu * std::log(half) - std::lgamma(nu + 1.0L) - x;
    real sum = 0.0L;
    real term = std::exp(ln_term);
    for (int k = 0; k < 100000; ++k) {
        sum += term;
        if (k > half && term < 1e-22L * sum) break;
        term *= half * half / ((k + 1.0L) * (nu + k + 1.0L));
    }
    return sum;
}

/// e^x I_nu(x) at half-odd nu via upward recurrence
/// I_{v+1} = I_{v-1} - (2v / x) I_v seeded with the order -1/2 and 1/2 forms.
inline real bessel_i_half_recurrence(real nu, real x) {
    const real c = std::sqrt(2.0L / (kPi * x));
    real previous = c * std::cosh(x);  // I_{-1/2}
    real current = c * std::sinh(x);   // I_{1/2}
    for (real v = 0.5L; v < nu - 0.25L; v += 1.0L) {
        const real next = previous - (2.0L * v / x) * current;
        previous = current;
        current = next;
    }
    return current;
}

/// First-order Marcum Q through the Poisson mixture
///   Q(a, b) = sum_j Pois(j; a^2/2) * P[Pois(b^2/2) <= j].
inline real marcum_q1_poisson(real a, real b) {
    const real lambda = a * a / 2.0L;
    const real mu = b * b / 2.0L;
    real outer = std::exp(-lambda);  // Pois(j; lambda)
    real inner_term = std::exp(-mu);  // Pois(j; mu)
    real inner_cdf = inner_term;
    real q = 0.0L;
    for (int j = 0; j < 20000; ++j) {
        q += outer * inner_cdf;
        outer *= lambda / (j + 1);
        inner_term *= mu / (j + 1);
        inner_cdf += inner_term;
        if (j > lambda && outer < 1e-30L) break;
    }
    return q;
}

/// Legendre P_n and its derivative at t.
inline void legendre(int n, real t, real& p, real& dp) {
    real p0 = 1.0L, p1 = t;
    for (int k = 2; k <= n; ++k) {
        const real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = n == 0 ? 1.0L : p1;
    dp = n * (t * p1 - p0) / (t * t - 1.0L);
}

/// Non-negative Gauss-Legendre nodes (descending) and weights by Newton
/// iteration from the Chebyshev guesses.
inline void gauss_legendre(int n, std::vector<real>& nodes, std::vector<real>& weights) {
    nodes.clear();
    weights.clear();
    for (int i = 1; i <= (n + 1) / 2; ++i) {
        real t = std::cos(kPi * (i - 0.25L) / (n + 0.5L));
        real p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(n, t, p, dp);
            const real step = p / dp;
            t -= step;
            if (std::fabs(step) < 1e-21L) break;
        }
        legendre(n, t, p, dp);
        nodes.push_back(t);
        weights.push_back(2.0L / ((1.0L - t * t) * dp * dp));
    }
}

}  // namespace ricefn::reference
