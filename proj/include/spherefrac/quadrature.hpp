#pragma once

#include <functional>
#include <vector>

namespace spherefrac::quad {

/// Tolerance/refinement contract shared by all time and angular integrals.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_levels = 12;     // refinement cap, <= 14
    double split_point = 1.0;
};

/// Endpoint/decay metadata for a semi-infinite time integrand:
/// f(t) ~ t^alpha as t -> 0+ (alpha > -1), f(t) = O(e^{-beta t}) at infinity.
struct IntegrandMeta {
    double singular_exponent_at_zero = 0.0; // alpha
    double decay_rate = 1.0;                // beta
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1], symmetric about 0
    std::vector<double> weights; // positive, sum to 2
};

/// Gauss-Legendre nodes and weights on [-1,1], N <= 512. Cached.
const GaussLegendreRule& gauss_legendre(int N);

/// Integrate f over [a, b] with an N-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int N);

/// tanh-sinh (double exponential) quadrature on [a, b]. Handles integrable
/// endpoint singularities; nodes near the endpoints are generated from their
/// distance to the endpoint so f sees full-precision abscissae when a = 0.
IntegralResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                         double abs_tol = 1e-12, double rel_tol = 1e-12, int max_levels = 12);

/// Fixed-level tanh-sinh sum (no refinement loop); level ~6 gives ~500 nodes.
double tanh_sinh_fixed(const std::function<double(double)>& f, double a, double b, int level);

/// \int_0^inf f(t) dt for f with endpoint singularity t^alpha at zero and
/// exponential decay e^{-beta t}: tanh-sinh on [0, split], geometric panels on
/// [split, T] with T from the decay rate, tail bounded by |f(T)|/beta.
/// Throws ToleranceNotMet when refinement is exhausted.
IntegralResult integrate_time(const std::function<double(double)>& f, IntegrandMeta meta,
                              QuadratureSpec spec = {});

/// \int_T^inf f(t) dt for f decaying like e^{-beta t}: geometric panels in
/// units of 1/beta plus a tail bound folded into the error estimate.
IntegralResult exp_tail(const std::function<double(double)>& f, double T, double beta);

} // namespace spherefrac::quad
