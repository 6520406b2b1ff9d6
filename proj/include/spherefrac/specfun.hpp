#pragma once

#include <vector>

namespace spherefrac::specfun {

/// Gamma function for real x, x not a nonpositive integer.
/// Lanczos approximation (g = 7, 9 terms) with reflection for x < 1/2.
double gamma(double x);

/// log|Gamma(x)|, valid for x not a nonpositive integer.
double lgamma_abs(double x);

/// 1/Gamma(x); entire, returns 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// Upper incomplete gamma Gamma(a, x) = \int_x^inf t^{a-1} e^{-t} dt, x >= 0.
/// For a <= 0 only the continued-fraction regime x >= 1 is supported.
double gamma_upper(double a, double x);

/// sin(pi x) and cos(pi x) with exact argument reduction.
double sinpi(double x);
double cospi(double x);

/// Gegenbauer polynomials C_0^nu(tau) ... C_K^nu(tau) by the three-term
/// recurrence  k C_k = 2(k-1+nu) tau C_{k-1} - (k-2+2nu) C_{k-2}.
std::vector<double> gegenbauer_all(int K, double nu, double tau);

/// C_k^nu(1) = binom(k + 2nu - 1, k), by upward ratio recurrence.
double gegenbauer_at_one(int k, double nu);

/// Modified Bessel function of the first kind I_rho(z), z >= 0,
/// rho not a negative integer. Power series below the crossover, large-z
/// asymptotic expansion above. Signals overflow for z beyond exponent range.
double bessel_i(double rho, double z);

/// e^{-z} I_rho(z), stable for all z >= 0.
double bessel_i_scaled(double rho, double z);

/// B_rho(z) = I_rho(z) - (z/2)^rho / Gamma(rho+1), summed from the m = 1
/// term of the power series (never formed by subtraction).
double bessel_b(double rho, double z);

/// e^{-z} B_rho(z).
double bessel_b_scaled(double rho, double z);

/// Modified Bessel function of the second kind K_s(z) for s in (0,1)
/// bounded away from the endpoints by 1e-3, z > 0. Reflection formula
/// K_s = (pi/2)(I_{-s} - I_s)/sin(pi s) for moderate z, asymptotic
/// sqrt(pi/2z) e^{-z} expansion for large z.
double bessel_k2(double s, double z);

/// Hurwitz zeta zeta(sigma, x) = sum_{k>=0} (k+x)^{-sigma} for sigma != 1,
/// 0 < x <= 2. Euler-Maclaurin with N = 20 terms and 8 Bernoulli corrections.
double hurwitz_zeta(double sigma, double x);

/// Surface area of S^{n-1}: omega_{n-1} = 2 pi^{n/2} / Gamma(n/2), n >= 2.
double surface_area(int n);

} // namespace spherefrac::specfun
