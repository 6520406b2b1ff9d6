#pragma once

#include "spherefrac/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spherefrac {

/// Dimension parameter of the sphere S^{n-1}, n >= 3, with the derived
/// Gegenbauer parameter nu = (n-2)/2 and surface areas omega_{n-1}, omega_{n-2}.
struct SphereDim {
    int n;
    double nu;
    double omega;     // |S^{n-1}|
    double omega_sub; // |S^{n-2}|

    explicit SphereDim(int n_);
};

/// Band-limited zonal function u(y) = sum_k a_k Z_k(e . y) about a fixed pole e.
struct ZonalCoeffs {
    SphereDim dim;
    std::vector<double> a;

    ZonalCoeffs(SphereDim d, std::vector<double> coeffs) : dim(d), a(std::move(coeffs)) {}
    int degree() const { return static_cast<int>(a.size()) - 1; }
    bool mean_zero(double tol = 1e-13) const;
};

enum class KernelLabel { Kpos, Kneg, L2s, Ss, Heat, Poisson, Custom };

/// A rotation-invariant kernel as a function of tau = x.y. `singularity` is
/// the power p with profile ~ d(x,y)^{-p} near tau = 1 (0 for smooth kernels).
struct KernelProfile {
    SphereDim dim;
    std::function<double(double)> eval; // tau in [-1, 1)
    double singularity = 0.0;
    KernelLabel label = KernelLabel::Custom;
};

namespace zonal {

/// lambda_k = k (k + n - 2)
double eigenvalue(const SphereDim& dim, int k);

/// dim SH^k = (2k + n - 2) (k + n - 3)! / (k! (n-2)!)
std::int64_t dim_sh(const SphereDim& dim, int k);

/// Zonal harmonic Z_k(tau) = (1/omega_{n-1}) ((k+nu)/nu) C_k^nu(tau).
double zonal_harmonic(const SphereDim& dim, int k, double tau);

/// Z_0(tau) ... Z_K(tau) in one recurrence pass.
std::vector<double> zonal_all(const SphereDim& dim, int K, double tau);

/// u evaluated at tau: sum_k a_k Z_k(tau).
double synthesize(const ZonalCoeffs& c, double tau);

/// u(pole) - u(tau) without cancellation, via the difference recurrence for
/// C_k(1) - C_k(tau). `one_minus_tau` must be the exact distance 1 - tau.
double synthesize_pole_minus(const ZonalCoeffs& c, double one_minus_tau);

/// Coefficient extraction by Gegenbauer orthogonality. g is sampled on a
/// Gauss-Legendre grid in theta = arccos(tau); `nodes` = 0 picks the size
/// automatically, otherwise it must be at least K + 9.
ZonalCoeffs project(const std::function<double(double)>& g, const SphereDim& dim, int K,
                    int nodes = 0);

/// Funk-Hecke multiplier of a kernel profile on degree-k harmonics:
/// m_k = (omega_{n-2} / C_k(1)) \int_{-1}^{1} F(tau) C_k(tau) (1-tau^2)^{(n-3)/2} dtau.
double funk_hecke_multiplier(const KernelProfile& F, int k,
                             const quad::QuadratureSpec& spec = {});

/// \int_{-1}^{1} F(tau) (1-tau^2)^{(n-3)/2} dtau for smooth F, evaluated as
/// \int_0^pi F(cos th) sin^{n-2}(th) dth with adaptive Gauss-Legendre in theta.
double integrate_weighted(const std::function<double(double)>& F, const SphereDim& dim,
                          double rel_tol = 1e-12);

/// Same integral for F singular at tau = 1: F is given as a function of
/// theta = arccos(tau); tanh-sinh near theta = 0 plus Gauss-Legendre outside.
double integrate_weighted_theta(const std::function<double(double)>& F_theta,
                                const SphereDim& dim, double abs_tol = 1e-11,
                                double rel_tol = 1e-11);

/// Gegenbauer squared norm h_k = pi 2^{1-2nu} Gamma(k+2nu) / ((k+nu) Gamma(nu)^2 k!).
double gegenbauer_norm(const SphereDim& dim, int k);

/// JSON round-trip for the coefficient schema
/// {"n": int, "basis": "zonal-harmonic", "coeffs": [...]}.
std::string to_json(const ZonalCoeffs& c);
ZonalCoeffs from_json(const std::string& text);

} // namespace zonal
} // namespace spherefrac
