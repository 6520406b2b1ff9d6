#include "spherefrac/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spherefrac::specfun {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double LANCZOS_C[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos series A(x) for x >= 0.5.
double lanczos_sum(double x) {
    double a = LANCZOS_C[0];
    for (int i = 1; i < 9; ++i) a += LANCZOS_C[i] / (x - 1.0 + i);
    return a;
}

double gamma_positive(double x) {
    // x >= 0.5
    const double t = x + 6.5;
    return std::sqrt(2.0 * PI) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

double lgamma_positive(double x) {
    const double t = x + 6.5;
    return 0.5 * std::log(2.0 * PI) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

} // namespace

double sinpi(double x) {
    // reduce modulo 2 exactly, then fold into [-1/2, 1/2]
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(PI * r);
}

double cospi(double x) {
    return sinpi(0.5 - std::fabs(x));
}

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at nonpositive integer x = " + std::to_string(x));
    if (x >= 0.5) return gamma_positive(x);
    // reflection formula
    return PI / (sinpi(x) * gamma_positive(1.0 - x));
}

double lgamma_abs(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("lgamma_abs: pole at nonpositive integer");
    if (x >= 0.5) return lgamma_positive(x);
    return std::log(PI / std::fabs(sinpi(x))) - lgamma_positive(1.0 - x);
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) {
        if (x > 170.0) return std::exp(-lgamma_positive(x));
        return 1.0 / gamma_positive(x);
    }
    return sinpi(x) * gamma_positive(1.0 - x) / PI;
}

double gamma_upper(double a, double x) {
    if (x < 0.0) throw std::domain_error("gamma_upper: x < 0");
    if (x == 0.0) return gamma(a);
    const double logpre = a * std::log(x) - x;
    if (a <= 0.0 && x < 1.0) {
        // recurrence Gamma(a,x) = (Gamma(a+1,x) - x^a e^{-x}) / a down from a > 0
        if (a == 0.0) {
            // E_1(x) for small x
            constexpr double EULER = 0.57721566490153286060651209008240243;
            double sum = -EULER - std::log(x), term = 1.0;
            for (int k = 1; k < 60; ++k) {
                term *= -x / k;
                sum -= term / k;
                if (std::fabs(term) < 1e-18) break;
            }
            return sum;
        }
        return (gamma_upper(a + 1.0, x) - std::exp(logpre)) / a;
    }
    if (x < a + 1.0) {
        if (a <= 0.0) throw std::domain_error("gamma_upper: unsupported (a,x) range");
        // lower incomplete series, subtract from Gamma(a)
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
        }
        const double lower = (logpre < -700.0) ? 0.0 : std::exp(logpre) * sum;
        return gamma(a) - lower;
    }
    if (logpre < -745.0) return 0.0;
    // Lentz continued fraction
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 400; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(logpre) * h;
}

std::vector<double> gegenbauer_all(int K, double nu, double tau) {
    if (K < 0) throw std::invalid_argument("gegenbauer_all: K < 0");
    if (!(nu > 0.0)) throw std::invalid_argument("gegenbauer_all: nu must be positive");
    if (std::fabs(tau) > 1.0 + 1e-12) throw std::invalid_argument("gegenbauer_all: |tau| > 1");
    tau = std::min(1.0, std::max(-1.0, tau));
    std::vector<double> c(static_cast<size_t>(K) + 1);
    c[0] = 1.0;
    if (K >= 1) c[1] = 2.0 * nu * tau;
    for (int k = 2; k <= K; ++k)
        c[k] = (2.0 * (k - 1 + nu) * tau * c[k - 1] - (k - 2 + 2.0 * nu) * c[k - 2]) / k;
    return c;
}

double gegenbauer_at_one(int k, double nu) {
    // C_k^nu(1) = prod_{i=1..k} (i - 1 + 2 nu)/i
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v *= (i - 1 + 2.0 * nu) / i;
    return v;
}

namespace {

// power series of e^{-z} I_rho(z) (or of e^{-z} B_rho(z) when from_m1 is set)
double bessel_series_scaled(double rho, double z, bool from_m1) {
    const double x2 = 0.25 * z * z;
    if (!from_m1 && rgamma(rho + 1.0) == 0.0)
        from_m1 = true; // leading coefficient vanishes (1/Gamma pole)
    double term, sum;
    int m0;
    if (from_m1) {
        term = std::exp(-z + (rho + 2.0) * std::log(0.5 * z)) * rgamma(rho + 2.0);
        m0 = 1;
    } else {
        term = std::exp(-z + rho * std::log(0.5 * z)) * rgamma(rho + 1.0);
        m0 = 0;
    }
    sum = term;
    for (int m = m0; m < 2000; ++m) {
        term *= x2 / ((m + 1.0) * (m + 1.0 + rho));
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) && m > m0 + 3) break;
    }
    return sum;
}

// asymptotic expansion of e^{-z} I_rho(z) for large z
double bessel_asymptotic_scaled(double rho, double z) {
    const double mu = 4.0 * rho * rho;
    double a = 1.0, s = 1.0, prev = 1.0;
    for (int j = 1; j <= 40; ++j) {
        a *= (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
        const double term = (j % 2 ? -a : a) / std::pow(z, j);
        if (std::fabs(term) > std::fabs(prev)) break; // divergence onset
        s += term;
        prev = term;
        if (std::fabs(term) < 1e-17 * std::fabs(s)) break;
    }
    return s / std::sqrt(2.0 * PI * z);
}

void check_bessel_order(double rho) {
    if (rho < 0.0 && rho == std::floor(rho) && rho <= -1.0)
        throw std::domain_error("bessel_i: order must not be a negative integer");
}

} // namespace

double bessel_i_scaled(double rho, double z) {
    check_bessel_order(rho);
    if (z < 0.0) throw std::domain_error("bessel_i: z < 0");
    if (z == 0.0) {
        if (rho == 0.0) return 1.0;
        if (rho > 0.0) return 0.0;
        throw std::domain_error("bessel_i: divergent at z = 0 for negative order");
    }
    if (z <= 25.0) return bessel_series_scaled(rho, z, false);
    return bessel_asymptotic_scaled(rho, z);
}

double bessel_i(double rho, double z) {
    if (z > 705.0)
        throw std::overflow_error("bessel_i: e^z overflows for z > 705");
    return std::exp(z) * bessel_i_scaled(rho, z);
}

double bessel_b_scaled(double rho, double z) {
    if (rho < -2.0) throw std::domain_error("bessel_b: order below -2 unsupported");
    if (z < 0.0) throw std::domain_error("bessel_b: z < 0");
    if (z == 0.0) return 0.0;
    return bessel_series_scaled(rho, z, true);
}

double bessel_b(double rho, double z) {
    if (z > 705.0)
        throw std::overflow_error("bessel_b: e^z overflows for z > 705");
    return std::exp(z) * bessel_b_scaled(rho, z);
}

double bessel_k2(double s, double z) {
    if (s < 1e-3 || s > 1.0 - 1e-3)
        throw std::domain_error("bessel_k2: order must lie in [1e-3, 1-1e-3]");
    if (!(z > 0.0)) throw std::domain_error("bessel_k2: z must be positive");
    if (z <= 8.5) {
        return 0.5 * PI * (bessel_i(-s, z) - bessel_i(s, z)) / sinpi(s);
    }
    // asymptotic: K_s(z) ~ sqrt(pi/2z) e^{-z} sum_j a_j(s) / z^j
    const double mu = 4.0 * s * s;
    double a = 1.0, sum = 1.0, prev = 1.0;
    for (int j = 1; j <= 40; ++j) {
        a *= (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
        const double term = a / std::pow(z, j);
        if (std::fabs(term) > std::fabs(prev)) break;
        sum += term;
        prev = term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    if (z > 700.0) return 0.0; // e^{-z} underflow
    return std::sqrt(0.5 * PI / z) * std::exp(-z) * sum;
}

double hurwitz_zeta(double sigma, double x) {
    if (sigma == 1.0) throw std::domain_error("hurwitz_zeta: pole at sigma = 1");
    if (!(x > 0.0) || x > 2.0)
        throw std::invalid_argument("hurwitz_zeta: x must lie in (0, 2]");
    constexpr int N = 20;
    // B_{2r} for r = 1..8
    constexpr double B2R[8] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
                               5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};
    double sum = 0.0;
    for (int j = 0; j < N; ++j) sum += std::pow(x + j, -sigma);
    const double q = x + N;
    sum += std::pow(q, 1.0 - sigma) / (sigma - 1.0);
    sum += 0.5 * std::pow(q, -sigma);
    double poch = sigma;          // rising factorial sigma (sigma+1) ... (sigma+2r-2)
    double fact = 2.0;            // (2r)!
    double qp = std::pow(q, -sigma - 1.0);
    for (int r = 1; r <= 8; ++r) {
        sum += B2R[r - 1] / fact * poch * qp;
        poch *= (sigma + 2.0 * r - 1.0) * (sigma + 2.0 * r);
        fact *= (2.0 * r + 1.0) * (2.0 * r + 2.0);
        qp /= q * q;
    }
    return sum;
}

double surface_area(int n) {
    if (n < 2) throw std::invalid_argument("surface_area: n >= 2 required");
    return 2.0 * std::pow(PI, 0.5 * n) * rgamma(0.5 * n);
}

} // namespace spherefrac::specfun
