#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "ricefn/errors.hpp"
#include "ricefn/special.hpp"

namespace ricefn {
namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639L;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// B_2, B_4, ..., B_20.
constexpr std::array<long double, 10> kBernoulli = {
    1.0L / 6.0L,      -1.0L / 30.0L,      1.0L / 42.0L,    -1.0L / 30.0L,
    5.0L / 66.0L,     -691.0L / 2730.0L,  7.0L / 6.0L,     -3617.0L / 510.0L,
    43867.0L / 798.0L, -174611.0L / 330.0L,
};

constexpr int kMaxZeta = 64;

// zeta(s) - 1 for s = 2..kMaxZeta by Euler-Maclaurin with cutoff N = 16.
std::array<long double, kMaxZeta + 1> make_zeta_minus_one() {
    std::array<long double, kMaxZeta + 1> table{};
    constexpr int cutoff = 16;
    const long double big_n = cutoff;
    for (int s = 2; s <= kMaxZeta; ++s) {
        long double sum = 0.0L;
        for (int n = cutoff - 1; n >= 2; --n) {
            sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
        }
        sum += std::pow(big_n, 1.0L - s) / (s - 1);
        sum += 0.5L * std::pow(big_n, -static_cast<long double>(s));
        // B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
        long double rising = s;
        long double factorial = 2.0L;
        long double power = std::pow(big_n, -static_cast<long double>(s) - 1.0L);
        for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
            sum += kBernoulli[j - 1] / factorial * rising * power;
            rising *= (s + 2 * j - 1) * static_cast<long double>(s + 2 * j);
            factorial *= (2.0L * j + 1.0L) * (2.0L * j + 2.0L);
            power /= big_n * big_n;
        }
        table[s] = sum;
    }
    return table;
}

const std::array<long double, kMaxZeta + 1>& zeta_minus_one() {
    static const auto table = make_zeta_minus_one();
    return table;
}

// ln Gamma(1 + e) = -gamma e + sum_{k>=2} (-1)^k zeta(k) e^k / k, |e| <= 1/4.
long double ln_gamma_near_one(long double e) {
    const auto& zm1 = zeta_minus_one();
    long double sum = 0.0L;
    long double power = e * e;
    for (int k = 2; k <= kMaxZeta; ++k) {
        const long double term = (1.0L + zm1[k]) * power / k;
        sum += (k % 2 == 0) ? term : -term;
        if (std::abs(term) < kEps * std::abs(sum) * 0.25L) break;
        power *= e;
    }
    return -kEulerGamma * e + sum;
}

// ln Gamma(2 + e) = (1 - gamma) e + sum_{k>=2} (-1)^k (zeta(k) - 1) e^k / k.
long double ln_gamma_near_two(long double e) {
    const auto& zm1 = zeta_minus_one();
    long double sum = 0.0L;
    long double power = e * e;
    for (int k = 2; k <= kMaxZeta; ++k) {
        const long double term = zm1[k] * power / k;
        sum += (k % 2 == 0) ? term : -term;
        if (std::abs(term) < kEps * std::abs(sum) * 0.25L) break;
        power *= e;
    }
    return (1.0L - kEulerGamma) * e + sum;
}

long double stirling(long double x) {
    long double correction = 0.0L;
    const long double inv_x2 = 1.0L / (x * x);
    long double power = 1.0L / x;
    for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
        correction += kBernoulli[j - 1] / ((2.0L * j) * (2.0L * j - 1.0L)) * power;
        power *= inv_x2;
    }
    return (x - 0.5L) * std::log(x) - x + kHalfLog2Pi + correction;
}

long double ln_gamma_impl(long double x) {
    if (!(x > 0.0L)) {
        throw DomainError("ln_gamma requires x > 0, got " + std::to_string(static_cast<double>(x)));
    }
    if (x <= 50.0L && x == std::floor(x)) {
        long double factorial = 1.0L;
        for (long double i = 2.0L; i < x; i += 1.0L) factorial *= i;
        return std::log(factorial);
    }
    if (std::abs(x - 1.0L) <= 0.25L) return ln_gamma_near_one(x - 1.0L);
    if (std::abs(x - 2.0L) <= 0.25L) return ln_gamma_near_two(x - 2.0L);
    if (x >= 20.0L) return stirling(x);

    long double product = 1.0L;
    long double shifted = x;
    while (shifted < 20.0L) {
        product *= shifted;
        shifted += 1.0L;
    }
    return stirling(shifted) - std::log(product);
}

void check_gamma_args(double a, double x) {
    if (!(a > 0.0)) throw DomainError("incomplete gamma requires a > 0");
    if (!(x >= 0.0)) throw DomainError("incomplete gamma requires x >= 0");
}

}  // namespace

namespace ext {

long double ln_gamma(long double x) { return ln_gamma_impl(x); }

long double lower_gamma_log(long double a, long double x, std::int64_t* work) {
    constexpr int kMaxIterations = 1'000'000;
    if (x == 0.0L) return -std::numeric_limits<long double>::infinity();
    if (a == 1.0L) {
        if (work) *work += 1;
        return std::log(-std::expm1(-x));
    }

    if (x < a + 1.0L) {
        long double term = 1.0L / a;
        long double sum = term;
        int n = 1;
        for (; n < kMaxIterations; ++n) {
            term *= x / (a + n);
            sum += term;
            if (term < sum * kEps) break;
        }
        if (work) *work += n;
        if (n == kMaxIterations) {
            throw ConvergenceError("incomplete gamma series did not converge", {});
        }
        return a * std::log(x) - x + std::log(sum);
    }

    // Modified Lentz evaluation of Gamma(a, x) e^x x^-a.
    constexpr long double kTiny = std::numeric_limits<long double>::min() / kEps;
    long double b = x + 1.0L - a;
    long double c = 1.0L / kTiny;
    long double d = 1.0L / b;
    long double h = d;
    int i = 1;
    for (; i < kMaxIterations; ++i) {
        const long double an = -i * (i - a);
        b += 2.0L;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0L / d;
        const long double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0L) <= kEps) break;
    }
    if (work) *work += i;
    if (i == kMaxIterations) {
        throw ConvergenceError("incomplete gamma continued fraction did not converge", {});
    }
    const long double ln_complete = ln_gamma_impl(a);
    const long double upper_regularized = std::exp(a * std::log(x) - x - ln_complete + std::log(h));
    return ln_complete + std::log1p(-upper_regularized);
}

}  // namespace ext

double ln_gamma(double x) { return static_cast<double>(ln_gamma_impl(x)); }

EvalResult lower_incomplete_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return {0.0, 0.0, 0};
    std::int64_t work = 0;
    const long double ln_value = ext::lower_gamma_log(a, x, &work);
    const double value = static_cast<double>(std::exp(ln_value));
    // Long double evaluation leaves only the final rounding and the error in
    // exp(ln) amplified by |ln|.
    const double relative =
        std::numeric_limits<double>::epsilon() +
        static_cast<double>(kEps * (4.0L * work + 4.0L * std::abs(ln_value)));
    return {value, std::abs(value) * relative, work};
}

LogValue lower_incomplete_gamma_log(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return LogValue::zero();
    return LogValue::from_log(static_cast<double>(ext::lower_gamma_log(a, x)));
}

}  // namespace ricefn
