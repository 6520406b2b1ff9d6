#pragma once

#include "spherefrac/zonal.hpp"

namespace spherefrac::semigroups {

/// Poisson semigroup parameter r = e^{-t} in [0, 1).
struct PoissonParam {
    double r;
    SphereDim dim;
};

/// Heat semigroup parameter t > 0.
struct HeatParam {
    double t;
    SphereDim dim;
};

/// Poisson kernel P_r(tau) = (1 - r^2) / (omega_{n-1} (1 - 2 r tau + r^2)^{n/2}).
double poisson_kernel(const PoissonParam& p, double tau);

/// P_{e^{-t}}(tau) - 1/omega_{n-1}, computed without cancellation for large t.
double poisson_kernel_minus_mean(const SphereDim& dim, double t, double tau);

/// Same, parameterized by 1 - tau so the near-diagonal regime keeps full
/// precision; also the stable evaluation of P itself used by the kernel
/// subordination integrals.
double poisson_kernel_minus_mean_omt(const SphereDim& dim, double t, double one_minus_tau);
double poisson_kernel_omt(const SphereDim& dim, double t, double one_minus_tau);

/// e^{-tL}: a_k -> e^{-tk} a_k.
ZonalCoeffs poisson_apply(const ZonalCoeffs& c, double t);

/// Heat kernel W_t(tau) = (1/omega_{n-1}) sum_k e^{-t lambda_k} ((k+nu)/nu) C_k(tau),
/// truncated so the dropped tail is below tol. Requires t >= 1e-3.
double heat_kernel(const HeatParam& h, double tau, double tol = 1e-12);

/// Series evaluation with caller-controlled truncation cap (used internally by
/// the kernel subordination integrals down to much smaller t). When from_k is 1
/// the constant mode is omitted, giving W_t - 1/omega_{n-1} without cancellation.
double heat_kernel_series(const SphereDim& dim, double t, double tau, double tol, int cap,
                          int from_k = 0);

/// e^{t Delta}: a_k -> e^{-t lambda_k} a_k.
ZonalCoeffs heat_apply(const ZonalCoeffs& c, double t);

/// sup_{0 < t < 1} |e^{-tL}u(pole) - u(pole)| / t by dense sampling.
double poisson_lipschitz_constant(const ZonalCoeffs& c);

KernelProfile poisson_profile(const SphereDim& dim, double r);
KernelProfile heat_profile(const SphereDim& dim, double t);

} // namespace spherefrac::semigroups
