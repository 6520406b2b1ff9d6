#include "spherefrac/semigroups.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace spherefrac::semigroups {

double poisson_kernel(const PoissonParam& p, double tau) {
    if (!(p.r >= 0.0 && p.r < 1.0)) throw std::invalid_argument("poisson_kernel: r in [0,1)");
    if (std::fabs(tau) > 1.0) throw std::invalid_argument("poisson_kernel: |tau| <= 1");
    const double r = p.r;
    const double denom = (1.0 - r) * (1.0 - r) + 2.0 * r * (1.0 - tau);
    return (1.0 - r * r) / (p.dim.omega * std::pow(denom, 0.5 * p.dim.n));
}

double poisson_kernel_omt(const SphereDim& dim, double t, double one_minus_tau) {
    // P written on (1-r)^2 + 2 r (1-tau); em = 1 - r from expm1 keeps the
    // denominator exact for small t and small 1-tau.
    const double em = -std::expm1(-t); // 1 - e^{-t}
    const double r = 1.0 - em;
    const double denom = em * em + 2.0 * r * one_minus_tau;
    return em * (2.0 - em) / (dim.omega * std::pow(denom, 0.5 * dim.n));
}

double poisson_kernel_minus_mean_omt(const SphereDim& dim, double t, double one_minus_tau) {
    if (t < 1.0) {
        // P dominates (or is dominated by) the mean here; direct difference
        return poisson_kernel_omt(dim, t, one_minus_tau) - 1.0 / dim.omega;
    }
    // large t: r -> 0 and P -> 1/omega; expm1/log1p form avoids cancellation
    const double r = std::exp(-t);
    const double u = r * (r - 2.0) + 2.0 * r * one_minus_tau; // (1-2r tau+r^2) - 1
    const double lognum = std::log1p(-r * r);
    const double logden = std::log1p(u);
    return std::expm1(lognum - 0.5 * dim.n * logden) / dim.omega;
}

double poisson_kernel_minus_mean(const SphereDim& dim, double t, double tau) {
    return poisson_kernel_minus_mean_omt(dim, t, 1.0 - tau);
}

ZonalCoeffs poisson_apply(const ZonalCoeffs& c, double t) {
    if (t < 0.0) throw std::invalid_argument("poisson_apply: t >= 0 required");
    ZonalCoeffs out = c;
    for (size_t k = 0; k < out.a.size(); ++k) out.a[k] *= std::exp(-t * static_cast<double>(k));
    return out;
}

ZonalCoeffs heat_apply(const ZonalCoeffs& c, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_apply: t >= 0 required");
    ZonalCoeffs out = c;
    for (size_t k = 0; k < out.a.size(); ++k)
        out.a[k] *= std::exp(-t * zonal::eigenvalue(c.dim, static_cast<int>(k)));
    return out;
}

double heat_kernel_series(const SphereDim& dim, double t, double tau, double tol, int cap,
                          int from_k) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_kernel_series: t > 0 required");
    const double nu = dim.nu;
    // multiplicative update for e^{-t lambda_k} = u^{k^2 + (n-2)k}, u = e^{-t}
    const double u2 = std::exp(-2.0 * t);
    double wstep = std::exp(-t * (dim.n - 1.0)); // u^{2k+n-2} at k = 1
    double ek = std::exp(-t * (dim.n - 1.0));    // e^{-t lambda_1}
    double Cm2 = 1.0, Cm1 = 2.0 * nu * tau;
    double ck1 = 2.0 * nu; // C_k(1), updated multiplicatively
    double sum = (from_k == 0) ? 1.0 : 0.0; // k = 0 term: C_0 (k+nu)/nu factor = 1
    double maxmag = (from_k == 0) ? 1.0 : 0.0;
    bool done = false;
    int small_runs = 0;
    if (from_k <= 1) {
        const double term = ek * ((1.0 + nu) / nu) * Cm1;
        sum += term;
        maxmag = std::max(maxmag, std::fabs(term));
    }
    for (int k = 2; k <= cap && !done; ++k) {
        const double Ck = (2.0 * (k - 1 + nu) * tau * Cm1 - (k - 2 + 2.0 * nu) * Cm2) / k;
        Cm2 = Cm1;
        Cm1 = Ck;
        ck1 *= (k - 1 + 2.0 * nu) / k;
        wstep *= u2;
        ek *= wstep; // e^{-t lambda_k}
        if (k >= from_k) {
            const double term = ek * ((k + nu) / nu) * Ck;
            sum += term;
            maxmag = std::max(maxmag, std::fabs(term));
            // certified cut: |C_k(tau)| <= C_k(1) and lambda_k increasing make the
            // envelope e^{-t lambda_k} (k+nu)/nu C_k(1) eventually geometric
            const double envelope = ek * ((k + nu) / nu) * ck1;
            if (envelope < 0.02 * tol * std::max(1.0, std::fabs(sum))) {
                if (++small_runs >= 3) done = true;
            } else {
                small_runs = 0;
            }
        }
        if (ek == 0.0) done = true;
    }
    if (!done)
        throw ToleranceNotMet("heat_kernel_series: truncation cap reached (t too small)",
                              sum / dim.omega, tol);
    if (from_k == 0) {
        // far from the diagonal at small t the alternating sum cancels below the
        // double-precision noise floor; fall back to the Gaussian leading term,
        // which keeps the (mathematically strict) positivity
        const double floor_noise = 64.0 * 1e-16 * maxmag;
        if (sum < floor_noise) {
            const double m = dim.n - 1.0;
            const double theta = std::acos(std::min(1.0, std::max(-1.0, tau)));
            const double th_eff = std::min(theta, 3.0); // keep phi0 finite toward the antipode
            const double phi0 =
                (theta < 1e-8) ? 1.0
                               : std::pow(th_eff / std::sin(th_eff), 0.5 * (dim.n - 2.0));
            const double e = theta * theta / (4.0 * t) - nu * nu * t;
            if (e > 745.0) return 0.0;
            return std::pow(4.0 * 3.14159265358979323846 * t, -0.5 * m) * phi0 * std::exp(-e);
        }
    }
    return sum / dim.omega;
}

double heat_kernel(const HeatParam& h, double tau, double tol) {
    if (h.t < 1e-3)
        throw std::invalid_argument("heat_kernel: t below t_min = 1e-3");
    return heat_kernel_series(h.dim, h.t, tau, tol, 6000);
}

double poisson_lipschitz_constant(const ZonalCoeffs& c) {
    const double u0 = zonal::synthesize(c, 1.0);
    double best = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = std::pow(10.0, -8.0 + 8.0 * i / 400.0); // t in [1e-8, 1)
        if (t >= 1.0) break;
        const double ut = zonal::synthesize(poisson_apply(c, t), 1.0);
        best = std::max(best, std::fabs(ut - u0) / t);
    }
    return best;
}

KernelProfile poisson_profile(const SphereDim& dim, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("poisson_profile: r in [0,1)");
    return {dim, [dim, r](double tau) { return poisson_kernel({r, dim}, tau); }, 0.0,
            KernelLabel::Poisson};
}

KernelProfile heat_profile(const SphereDim& dim, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_profile: t > 0 required");
    return {dim, [dim, t](double tau) { return heat_kernel({t, dim}, tau); }, 0.0,
            KernelLabel::Heat};
}

} // namespace spherefrac::semigroups
