#include "spherefrac/circle.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace spherefrac::circle {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;

void check_x(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("circle kernel: x in (0,1) required");
}
} // namespace

double theta_heat_kernel(double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("theta_heat_kernel: t > 0 required");
    x -= std::floor(x); // period 1
    if (4.0 * PI * PI * t >= 1.0) {
        double sum = 1.0;
        const double q2 = std::exp(-8.0 * PI * PI * t);
        double step = std::exp(-12.0 * PI * PI * t); // ratio e^{-4pi^2(2k+1)t} at k=1
        double ek = std::exp(-4.0 * PI * PI * t);
        for (int k = 1; k < 4000; ++k) {
            sum += 2.0 * ek * std::cos(2.0 * PI * k * x);
            if (ek < 1e-18) break;
            ek *= step;
            step *= q2;
        }
        return sum;
    }
    // Gaussian image series (Poisson summation)
    const double pref = 1.0 / std::sqrt(4.0 * PI * t);
    double sum = 0.0;
    const int M = 2 + static_cast<int>(std::ceil(std::sqrt(160.0 * t)));
    for (int m = -M; m <= M; ++m) {
        const double d = x + m;
        const double e = d * d / (4.0 * t);
        if (e < 745.0) sum += std::exp(-e);
    }
    return pref * sum;
}

double fine_f(double x, double t) { return theta_heat_kernel(x, t / (4.0 * PI)); }

double fine_F(double x, double omega, const quad::QuadratureSpec& spec) {
    check_x(x);
    if (!(omega < 0.0)) throw std::invalid_argument("fine_F: omega < 0 required");
    auto q = [&](double t) {
        if (t < 1e-290) return 0.0;
        return fine_f(x, t) * std::pow(t, 0.5 * omega - 1.0);
    };
    auto res = quad::tanh_sinh(q, 0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_levels);
    return res.value;
}

double fine_G(double x, double omega, const quad::QuadratureSpec& spec) {
    check_x(x);
    if (!(omega < 0.0)) throw std::invalid_argument("fine_G: omega < 0 required");
    auto q = [&](double t) { return (fine_f(x, t) - 1.0) * std::pow(t, 0.5 * omega - 1.0); };
    // f - 1 decays like 2 e^{-pi t}
    double v = quad::gl_integrate(q, 1.0, 3.0, 48) + quad::gl_integrate(q, 3.0, 8.0, 48) +
               quad::gl_integrate(q, 8.0, 16.0, 32);
    (void)spec;
    return v;
}

double fine_H(double x, double omega, const quad::QuadratureSpec& spec) {
    return fine_F(x, omega, spec) + fine_G(x, omega, spec) - 2.0 / omega;
}

double fine_H_zeta(double x, double omega) {
    check_x(x);
    const double a = 0.5 * (1.0 - omega);
    return specfun::gamma(a) * std::pow(PI, -a) *
           (specfun::hurwitz_zeta(1.0 - omega, x) + specfun::hurwitz_zeta(1.0 - omega, 1.0 - x));
}

double kernel_neg(const CircleKernelQuery& q) {
    check_x(q.x);
    if (!(q.sigma > 0.0)) throw std::invalid_argument("kernel_neg: sigma > 0 required");
    const double c = specfun::cospi(0.5 * q.sigma);
    if (std::fabs(c) < 1e-9)
        throw std::domain_error("kernel_neg: pole where cos(pi sigma/2) = 0 (sigma = 1, 3)");
    return (specfun::hurwitz_zeta(1.0 - q.sigma, q.x) +
            specfun::hurwitz_zeta(1.0 - q.sigma, 1.0 - q.x)) /
           (2.0 * specfun::gamma(q.sigma) * c);
}

double kernel_pos(const CircleKernelQuery& q) {
    check_x(q.x);
    if (!(q.sigma > 0.0 && q.sigma < 2.0))
        throw std::invalid_argument("kernel_pos: sigma in (0,2) required");
    if (std::fabs(q.sigma - 1.0) < 1e-9)
        throw std::domain_error("kernel_pos: pole at sigma = 1");
    const double c = specfun::cospi(0.5 * q.sigma);
    return (specfun::hurwitz_zeta(1.0 + q.sigma, q.x) +
            specfun::hurwitz_zeta(1.0 + q.sigma, 1.0 - q.x)) /
           (2.0 * specfun::gamma(-q.sigma) * c);
}

double kernel_pos_heat_oracle(double sigma, double x, const quad::QuadratureSpec& spec) {
    check_x(x);
    if (!(sigma > 0.0 && sigma < 2.0))
        throw std::invalid_argument("kernel_pos_heat_oracle: sigma in (0,2)");
    auto q = [&](double t) {
        if (t < 1e-290) return 0.0;
        return theta_heat_kernel(x, t) * std::pow(t, -1.0 - 0.5 * sigma);
    };
    auto near = quad::tanh_sinh(q, 0.0, 1.0, spec.abs_tol, spec.rel_tol, spec.max_levels);
    const double T = 64.0;
    double v = near.value;
    double lo = 1.0;
    while (lo < T) {
        const double hi = std::min(T, 2.0 * lo);
        v += quad::gl_integrate(q, lo, hi, 32);
        lo = hi;
    }
    v += std::pow(T, -0.5 * sigma) / (0.5 * sigma); // W -> 1 tail
    return v / specfun::gamma(-0.5 * sigma);
}

double apply_pos_to_cosine(double sigma, int k, const quad::QuadratureSpec& spec) {
    if (k < 1) throw std::invalid_argument("apply_pos_to_cosine: k >= 1");
    auto integrand = [&](double y) {
        if (y < 1e-290) return 0.0;
        // cos(2 pi k y) - 1 = -2 sin^2(pi k y), stable near y = 0
        const double sub = -2.0 * std::pow(std::sin(PI * k * y), 2);
        return sub * kernel_pos({sigma, y});
    };
    // symmetric about 1/2; singular endpoints at 0 and 1
    auto left = quad::tanh_sinh(integrand, 0.0, 0.5, spec.abs_tol, spec.rel_tol, spec.max_levels);
    auto rightf = [&](double y) { return integrand(1.0 - y); };
    auto right = quad::tanh_sinh(rightf, 0.0, 0.5, spec.abs_tol, spec.rel_tol, spec.max_levels);
    return left.value + right.value;
}

} // namespace spherefrac::circle
