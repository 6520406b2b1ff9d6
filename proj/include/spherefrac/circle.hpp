#pragma once

#include "spherefrac/quadrature.hpp"

namespace spherefrac::circle {

/// Kernel query on T = [0,1]: exponent sigma > 0 and off-lattice point x.
struct CircleKernelQuery {
    double sigma;
    double x;
};

/// K_{-sigma}(x) = [zeta(1-sigma,x) + zeta(1-sigma,1-x)] / (2 Gamma(sigma) cos(pi sigma/2)).
/// Pole error where cos(pi sigma/2) vanishes (sigma = 1, 3).
double kernel_neg(const CircleKernelQuery& q);

/// K_sigma(x) = [zeta(1+sigma,x) + zeta(1+sigma,1-x)] / (2 Gamma(-sigma) cos(pi sigma/2)),
/// sigma in (0,2) \ {1}.
double kernel_pos(const CircleKernelQuery& q);

/// Heat kernel on the circle, W_t(x) = 1 + 2 sum_k e^{-4 pi^2 k^2 t} cos(2 pi k x);
/// spectral series for 4 pi^2 t >= 1, Gaussian image series below.
double theta_heat_kernel(double x, double t);

/// Fine's theta function f(x,t) = 1 + 2 sum_k e^{-pi k^2 t} cos(2 pi k x) = W_{t/(4 pi)}(x).
double fine_f(double x, double t);

/// F(x,w) = int_0^1 f(x,t) t^{w/2-1} dt  (entire in w; evaluated for w < 0).
double fine_F(double x, double omega, const quad::QuadratureSpec& spec = {});

/// G(x,w) = int_1^inf (f(x,t) - 1) t^{w/2-1} dt.
double fine_G(double x, double omega, const quad::QuadratureSpec& spec = {});

/// H = F + G - 2/w; for w < 0 equals
/// Gamma((1-w)/2) pi^{-(1-w)/2} [zeta(1-w,x) + zeta(1-w,1-x)].
double fine_H(double x, double omega, const quad::QuadratureSpec& spec = {});

/// The right-hand side of that relation, from the Hurwitz zeta.
double fine_H_zeta(double x, double omega);

/// Subordination oracle for K_sigma: (1/Gamma(-sigma/2)) int_0^inf W_t(x) dt/t^{1+sigma/2}.
double kernel_pos_heat_oracle(double sigma, double x, const quad::QuadratureSpec& spec = {});

/// Subtracted spectral action: int_0^1 (e_k(0) - e_k(y)) K_sigma(y) dy with
/// e_k = cos(2 pi k x); equals (2 pi k)^sigma.
double apply_pos_to_cosine(double sigma, int k, const quad::QuadratureSpec& spec = {});

} // namespace spherefrac::circle
