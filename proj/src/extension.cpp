#include "spherefrac/extension.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace spherefrac::extension {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;

// \int_0^inf e^{-y^2/(4t)} e^{-t lambda} t^{expo} dt, expo = -1-s for the
// extension and s-1 for the negative-power remark; shared by both routes.
double heat_multiplier_integral(double lambda, double y, double expo,
                                const quad::QuadratureSpec& spec) {
    // expo = -1 - s for the extension, expo = s - 1 for the negative-power remark
    auto q = [&](double t) {
        if (t < 1e-290) return 0.0;
        const double e = y * y / (4.0 * t) + lambda * t;
        if (e > 700.0) return 0.0;
        return std::exp(-e) * std::pow(t, expo);
    };
    const double t_peak = (lambda > 0.0) ? 0.5 * y / std::sqrt(lambda) : std::max(1.0, y * y);
    double v = 0.0;
    auto near = quad::tanh_sinh(q, 0.0, 4.0 * t_peak, 0.1 * spec.abs_tol, 0.1 * spec.rel_tol,
                                spec.max_levels);
    v += near.value;
    double lo = 4.0 * t_peak;
    const double T = (lambda > 0.0) ? lo + 50.0 / lambda : 0.0;
    if (lambda > 0.0) {
        int guard = 0;
        while (lo < T && guard++ < 70) {
            const double hi = std::min(T, 2.0 * lo);
            v += quad::gl_integrate(q, lo, hi, 32);
            lo = hi;
        }
    } else {
        // lambda = 0: \int_T^inf e^{-y^2/4t} t^{-1-s} dt = a^{-s} (Gamma(s) - Gamma(s, a/T))
        const double a = 0.25 * y * y;
        v += std::pow(a, -expo - 1.0) *
             (specfun::gamma(-expo - 1.0) - specfun::gamma_upper(-expo - 1.0, a / lo));
    }
    return v;
}
} // namespace

double multiplier(double s, double lambda, double y) {
    if (!(y > 0.0)) throw std::invalid_argument("extension multiplier: y > 0 required");
    if (lambda == 0.0) return 1.0; // U carries the constant unchanged
    const double z = y * std::sqrt(lambda);
    if (z > 700.0) return 0.0;
    if (z < 1e-10) {
        // z^s K_s(z) -> 2^{s-1} Gamma(s) (1 - Gamma(1-s)/Gamma(1+s) (z/2)^{2s} + O(z^2))
        return 1.0 - specfun::gamma(1.0 - s) / specfun::gamma(1.0 + s) *
                         std::pow(0.5 * z, 2.0 * s);
    }
    return std::pow(2.0, 1.0 - s) / specfun::gamma(s) * std::pow(z, s) *
           specfun::bessel_k2(s, z);
}

ZonalCoeffs extend(const ZonalCoeffs& c, double s, double y) {
    ZonalCoeffs out = c;
    for (int k = 0; k <= c.degree(); ++k)
        out.a[k] *= multiplier(s, zonal::eigenvalue(c.dim, k), y);
    return out;
}

ZonalCoeffs extend_via_heat(const ZonalCoeffs& c, double s, double y,
                            const quad::QuadratureSpec& spec) {
    if (!(y > 0.0)) throw std::invalid_argument("extend_via_heat: y > 0 required");
    ZonalCoeffs out = c;
    const double pref = std::pow(y, 2.0 * s) / (std::pow(4.0, s) * specfun::gamma(s));
    for (int k = 0; k <= c.degree(); ++k) {
        const double lam = zonal::eigenvalue(c.dim, k);
        out.a[k] *= pref * heat_multiplier_integral(lam, y, -1.0 - s, spec);
    }
    return out;
}

ExtensionField make_field(const ZonalCoeffs& c, double s, std::vector<double> heights) {
    ExtensionField f{c, s, std::move(heights), {}};
    f.multipliers.reserve(f.heights.size());
    for (double y : f.heights) {
        std::vector<double> m(static_cast<size_t>(c.degree()) + 1);
        for (int k = 0; k <= c.degree(); ++k)
            m[k] = multiplier(s, zonal::eigenvalue(c.dim, k), y);
        f.multipliers.push_back(std::move(m));
    }
    return f;
}

TraceReport neumann_trace(const ZonalCoeffs& c, double s, const std::vector<double>& y_ladder) {
    if (y_ladder.size() < 3)
        throw std::invalid_argument("neumann_trace: ladder needs at least 3 rungs");
    for (size_t i = 1; i < y_ladder.size(); ++i)
        if (!(y_ladder[i] < y_ladder[i - 1]) || !(y_ladder[i] > 0.0))
            throw std::invalid_argument("neumann_trace: ladder must be positive decreasing");

    auto U_pole = [&](double y) { return zonal::synthesize(extend(c, s, y), 1.0); };
    std::vector<double> g(y_ladder.size());
    for (size_t i = 0; i < y_ladder.size(); ++i) {
        const double y = y_ladder[i];
        const double h = 5e-3 * y;
        const double du = (U_pole(y + h) - U_pole(y - h)) / (2.0 * h);
        g[i] = -std::pow(y, 1.0 - 2.0 * s) * du;
    }
    // Richardson in y^{2-2s}, then in y^2 (ladder ratio 1/2 assumed approximately)
    const double ratio = y_ladder[0] / y_ladder[1];
    auto stage = [&](const std::vector<double>& v, double p) {
        const double rp = std::pow(ratio, p);
        std::vector<double> out(v.size() - 1);
        for (size_t i = 0; i + 1 < v.size(); ++i)
            out[i] = v[i + 1] + (v[i + 1] - v[i]) / (rp - 1.0);
        return out;
    };
    std::vector<double> s1 = stage(g, 2.0 - 2.0 * s);
    std::vector<double> s2 = stage(s1, 2.0);

    TraceReport rep;
    rep.neumann_estimate = s2.back();
    for (size_t i = 1; i + 1 < s2.size(); ++i)
        if (std::fabs(s2[i + 1] - s2[i]) > std::fabs(s2[i] - s2[i - 1]) * 4.0)
            rep.monotone = false;
    const auto z1 = zonal::zonal_all(c.dim, c.degree(), 1.0);
    double frac = 0.0;
    for (int k = 0; k <= c.degree(); ++k)
        frac += c.a[k] * std::pow(zonal::eigenvalue(c.dim, k), s) * z1[k];
    rep.target = specfun::gamma(1.0 - s) / (std::pow(4.0, s - 0.5) * specfun::gamma(s)) * frac;
    rep.rel_error = std::fabs(rep.neumann_estimate - rep.target) /
                    std::max(1.0, std::fabs(rep.target));
    return rep;
}

PdeReport pde_residual(const ZonalCoeffs& c, double s, const std::vector<double>& tau_grid,
                       const std::vector<double>& y_grid) {
    PdeReport rep;
    const double dy = 5e-3;
    for (double y : y_grid) {
        if (y < 0.05) {
            rep.grid_warning = true;
            continue;
        }
        // five-point 4th-order stencils in y
        ZonalCoeffs u_m2 = extend(c, s, y - 2 * dy), u_m1 = extend(c, s, y - dy),
                    u_0 = extend(c, s, y), u_p1 = extend(c, s, y + dy),
                    u_p2 = extend(c, s, y + 2 * dy);
        for (double tau : tau_grid) {
            const double f_m2 = zonal::synthesize(u_m2, tau);
            const double f_m1 = zonal::synthesize(u_m1, tau);
            const double f_0 = zonal::synthesize(u_0, tau);
            const double f_p1 = zonal::synthesize(u_p1, tau);
            const double f_p2 = zonal::synthesize(u_p2, tau);
            const double dU = (f_m2 - 8.0 * f_m1 + 8.0 * f_p1 - f_p2) / (12.0 * dy);
            const double d2U =
                (-f_m2 + 16.0 * f_m1 - 30.0 * f_0 + 16.0 * f_p1 - f_p2) / (12.0 * dy * dy);
            ZonalCoeffs lap = u_0;
            for (int k = 0; k <= c.degree(); ++k)
                lap.a[k] *= -zonal::eigenvalue(c.dim, k);
            const double lapU = zonal::synthesize(lap, tau);
            const double res = lapU + (1.0 - 2.0 * s) / y * dU + d2U;
            rep.max_residual = std::max(rep.max_residual, std::fabs(res));
        }
    }
    return rep;
}

ZonalCoeffs neumann_problem_negative(const ZonalCoeffs& f, double s, double y,
                                     const quad::QuadratureSpec& spec) {
    if (!f.mean_zero())
        throw std::invalid_argument("neumann_problem_negative: mean-zero data required");
    if (!(y > 0.0)) throw std::invalid_argument("neumann_problem_negative: y > 0 required");
    ZonalCoeffs out = f;
    out.a[0] = 0.0;
    const double pref = 1.0 / specfun::gamma(s);
    for (int k = 1; k <= f.degree(); ++k) {
        const double lam = zonal::eigenvalue(f.dim, k);
        out.a[k] *= pref * heat_multiplier_integral(lam, y, s - 1.0, spec);
    }
    return out;
}

} // namespace spherefrac::extension
