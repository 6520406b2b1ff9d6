#pragma once

#include "spherefrac/zonal.hpp"

namespace spherefrac::fracops {

/// Exponent s with the validity regime of the operator using it.
struct FracOrder {
    enum class Mode { positive, negative, dtn };
    double s;
    Mode mode = Mode::positive;

    void validate(const SphereDim& dim) const;
};

/// Pole values of the three pieces of the splitting
/// (-Delta)^s u = (L + nu)^{2s} u + S^s u.
struct DecompositionReport {
    double lhs = 0.0;            // (-Delta)^s u at the pole, spectral
    double dtn_part = 0.0;       // (L+nu)^{2s} u at the pole, kernel route
    double smoothing_part = 0.0; // S^s u at the pole, kernel route
    double residual = 0.0;       // |lhs - dtn_part - smoothing_part|
};

/// Least-squares log-log slope with a 2-sigma half width.
struct SlopeFit {
    double slope = 0.0;
    double half_width = 0.0;
};

/// Spectral multipliers: a_k -> lambda_k^{+-s} a_k (positive mode zeroes a_0,
/// negative mode requires a mean-zero input), dtn mode applies (k+nu)^{2s}.
ZonalCoeffs spectral_frac(const ZonalCoeffs& c, const FracOrder& f);

/// a_k -> (k + nu)^{2s} a_k for 2s in (0, 2).
ZonalCoeffs dtn_spectral(const ZonalCoeffs& c, double two_s);

/// Right-hand side of the numerical identity
///   (k(k+2nu))^s = (k+nu)^{2s}
///     + (2nu)^{s+1/2}/(pi^{-1/2} Gamma(-s)) \int_0^inf e^{-t(k+nu)}
///       B_{-s-1/2}(nu t) dt / t^{1/2+s},
/// evaluated by quadrature plus an asymptotic far-field expansion.
double minak_identity_rhs(int k, double nu, double s, const quad::QuadratureSpec& spec = {});

/// Kernel of (-Delta)^{-s} via the subordinated Poisson-kernel integral.
double kernel_Kneg_zeta(const SphereDim& dim, double s, double tau,
                        const quad::QuadratureSpec& spec = {});

/// Same kernel via the heat semigroup, with the constant heat mode removed
/// (the two routes agree pointwise). Requires s < (n-1)/2.
double kernel_Kneg_heat(const SphereDim& dim, double s, double tau,
                        const quad::QuadratureSpec& spec = {});

/// Kernel of (-Delta)^s: K_s(tau) = (1/|Gamma(-s)|) \int_0^inf W_t(tau) dt/t^{1+s}.
double kernel_Ks(const SphereDim& dim, double s, double tau,
                 const quad::QuadratureSpec& spec = {});

/// Kernel of the fractional Dirichlet-to-Neumann map, 2s in (0,1).
double kernel_L2s(const SphereDim& dim, double two_s, double tau,
                  const quad::QuadratureSpec& spec = {});

/// Kernel of the smoothing operator S^s.
double kernel_Ss(const SphereDim& dim, double s, double tau,
                 const quad::QuadratureSpec& spec = {});

KernelProfile kneg_zeta_profile(const SphereDim& dim, double s);
KernelProfile kneg_heat_profile(const SphereDim& dim, double s);
KernelProfile ks_profile(const SphereDim& dim, double s);
KernelProfile l2s_profile(const SphereDim& dim, double two_s);
KernelProfile ss_profile(const SphereDim& dim, double s);

/// omega_{n-2} \int (g(1) - g(tau)) K_s(tau) (1-tau^2)^{(n-3)/2} dtau at the
/// zonal pole (where the gradient correction vanishes); matches the spectral
/// route sum a_k lambda_k^s Z_k(1).
double apply_frac_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec = {});

/// omega_{n-2} \int K_{-s}(tau) g(tau) (...) dtau for mean-zero g, s < (n-1)/2.
double apply_neg_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec = {});

/// omega_{n-2} \int (g(1)-g(tau)) L_{2s}(tau) (...) dtau + nu^{2s} g(1).
double apply_L2s_at_pole(const ZonalCoeffs& c, double two_s,
                         const quad::QuadratureSpec& spec = {});

/// omega_{n-2} \int S_s(tau) g(tau) (...) dtau.
double apply_Ss_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec = {});

/// Three-route splitting at the pole, 2s < 1.
DecompositionReport decompose(const ZonalCoeffs& c, double s,
                              const quad::QuadratureSpec& spec = {});

/// Log-log slope of |kernel(cos d)| over d in [d_lo, d_hi]; rejects profiles
/// that change sign on the range.
SlopeFit exponent_fit(const std::function<double(double)>& kernel_of_tau, double d_lo,
                      double d_hi, int points);

} // namespace spherefrac::fracops
