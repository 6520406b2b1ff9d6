#include "spherefrac/fracops.hpp"
#include "spherefrac/semigroups.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace spherefrac::fracops {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double TAU_GUARD = 1e-8;   // kernels reject 1 - tau < this
constexpr double T_SERIES = 2e-6;    // heat-series floor for subordination integrals
constexpr int HEAT_CAP = 9000;

double theta_from_tau(double tau) { return std::acos(std::min(1.0, std::max(-1.0, tau))); }

void check_tau(double tau) {
    if (std::fabs(tau) > 1.0) throw std::invalid_argument("kernel: |tau| <= 1 required");
    if (1.0 - tau < TAU_GUARD)
        throw std::domain_error("kernel: tau too close to 1 (1 - tau < 1e-8)");
}

// geometric panels [lo, hi] with a coarse/fine error estimate
double panels_geometric(const std::function<double(double)>& f, double lo, double hi,
                        double* err_acc, int n_lo = 16, int n_hi = 32) {
    double v = 0.0, a = lo;
    int guard = 0;
    while (a < hi && guard++ < 90) {
        const double b = std::min(hi, 2.0 * a);
        const double c1 = quad::gl_integrate(f, a, b, n_lo);
        const double c2 = quad::gl_integrate(f, a, b, n_hi);
        v += c2;
        if (err_acc) *err_acc += std::fabs(c2 - c1);
        a = b;
    }
    return v;
}

// ---- Minakshisundaram time-integral far field ------------------------------

// coefficients A_j of I_rho(z) ~ e^z (2 pi z)^{-1/2} sum_j (-1)^j A_j z^{-j}
void bessel_asym_coeffs(double rho, int J, std::vector<double>& A) {
    const double mu = 4.0 * rho * rho;
    A.assign(J + 1, 1.0);
    for (int j = 1; j <= J; ++j)
        A[j] = A[j - 1] * (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
}

// \int_T^inf e^{-t(k+nu)} B_{-s-1/2}(nu t) t^{-1/2-s} dt for nu T >= 35:
// the scaled-Bessel asymptotic series integrates in closed form; the
// subtracted Taylor-leading term reduces to an incomplete gamma.
double minak_tail(int k, double nu, double s, double T) {
    const double rho = -s - 0.5;
    std::vector<double> A;
    bessel_asym_coeffs(rho, 14, A);
    double piece1 = 0.0, prev = 1e300;
    for (int j = 0; j <= 14; ++j) {
        double Ej;
        if (k == 0) Ej = std::pow(T, -s - j) / (s + j);
        else Ej = std::pow(static_cast<double>(k), s + j) *
                  specfun::gamma_upper(-s - j, k * T);
        const double term = ((j % 2) ? -A[j] : A[j]) * std::pow(nu, -j) * Ej;
        if (std::fabs(term) > prev) break;
        piece1 += term;
        prev = std::fabs(term);
    }
    piece1 /= std::sqrt(2.0 * PI * nu);
    const double lead = specfun::rgamma(rho + 1.0) * std::pow(0.5 * nu, rho);
    double piece2 = 0.0;
    if (lead != 0.0)
        piece2 = lead * std::pow(k + nu, 2.0 * s) *
                 specfun::gamma_upper(-2.0 * s, (k + nu) * T);
    return piece1 - piece2;
}

// ---- heat-route kernels -----------------------------------------------------

// \int_0^{t_up} W_t(theta) t^{-1-c} dt in the Gaussian regime t_up <= T_SERIES:
// W ~ (4 pi t)^{-m/2} (theta/sin theta)^{(n-2)/2} e^{-theta^2/(4t)} e^{nu^2 t}.
double gauss_small_t(const SphereDim& dim, double theta, double c, double t_up) {
    const double m = dim.n - 1.0;
    const double b = 0.5 * m + c;
    const double x_up = theta * theta / (4.0 * t_up);
    if (x_up > 5000.0) return 0.0;
    const double phi0 = (theta < 1e-8)
                            ? 1.0
                            : std::pow(theta / std::sin(theta), 0.5 * (dim.n - 2.0));
    const double inv = 4.0 / (theta * theta);
    const double J0 = std::pow(inv, b) * specfun::gamma_upper(b, x_up);
    const double J1 = std::pow(inv, b - 1.0) * specfun::gamma_upper(b - 1.0, x_up);
    return phi0 * std::pow(4.0 * PI, -0.5 * m) * (J0 + dim.nu * dim.nu * J1);
}

// |Gamma(-s)| K_s(theta) (heat subordination, valid at any theta > 0)
double ks_eval_raw(const SphereDim& dim, double s, double theta, double tol) {
    const double t_start = std::max(T_SERIES, theta * theta / 1600.0);
    const double T = 40.0;
    double v = gauss_small_t(dim, theta, s, t_start);
    const double tau = std::cos(theta);
    auto f = [&](double t) {
        return semigroups::heat_kernel_series(dim, t, tau, tol, HEAT_CAP) *
               std::pow(t, -1.0 - s);
    };
    v += panels_geometric(f, t_start, T, nullptr, 12, 24);
    v += (1.0 / dim.omega) * std::pow(T, -s) / s; // constant mode beyond T
    return v;
}

double ks_eval(const SphereDim& dim, double s, double theta, double tol) {
    return ks_eval_raw(dim, s, theta, tol) / std::fabs(specfun::gamma(-s));
}

// Gamma(s) K_{-s}(theta) with the constant heat mode removed
double kneg_heat_eval_raw(const SphereDim& dim, double s, double theta, double tol) {
    const double t_start = std::max(T_SERIES, theta * theta / 1600.0);
    const double T = 40.0;
    double v = gauss_small_t(dim, theta, -s, t_start);
    v -= (1.0 / dim.omega) * std::pow(t_start, s) / s; // exact constant-mode piece on [0, t_start]
    const double tau = std::cos(theta);
    auto f = [&](double t) {
        return semigroups::heat_kernel_series(dim, t, tau, tol, HEAT_CAP, 1) *
               std::pow(t, s - 1.0);
    };
    v += panels_geometric(f, t_start, T, nullptr, 12, 24);
    return v;
}

double kneg_heat_eval(const SphereDim& dim, double s, double theta, double tol) {
    return kneg_heat_eval_raw(dim, s, theta, tol) / specfun::gamma(s);
}

// ---- Poisson-route kernels --------------------------------------------------

// K_{-s} by the subordinated Poisson integral (Minakshisundaram route)
double kneg_zeta_eval(const SphereDim& dim, double s, double theta, double abs_tol,
                      double rel_tol, int max_levels) {
    const double nu = dim.nu;
    const double rho = s - 0.5;
    const double omt = 2.0 * std::pow(std::sin(0.5 * theta), 2);
    auto q = [&](double t) {
        if (t < 1e-150) return 0.0;
        return semigroups::poisson_kernel_minus_mean_omt(dim, t, omt) *
               specfun::bessel_i_scaled(rho, nu * t) * std::pow(t, s - 0.5);
    };
    double err = 0.0, v = 0.0;
    const double c1 = std::min(1.0, std::max(4.0 * theta, 1e-4));
    auto near = quad::tanh_sinh(q, 0.0, c1, 0.2 * abs_tol, 0.2 * rel_tol, max_levels);
    v += near.value;
    err += near.error_estimate;
    if (c1 < 1.0) v += panels_geometric(q, c1, 1.0, &err, 24, 48);
    const double T = 50.0;
    v += panels_geometric(q, 1.0, T, &err, 24, 48);
    const double pref = std::pow(2.0 / nu, rho) * specfun::gamma(s + 0.5) /
                        specfun::gamma(2.0 * s);
    return pref * v;
}

// L_{2s}: subordinated Poisson kernel with weight e^{-t nu} / t^{1+2s}
double l2s_eval(const SphereDim& dim, double two_s, double theta, double abs_tol,
                double rel_tol, int max_levels) {
    const double nu = dim.nu;
    const double omt = 2.0 * std::pow(std::sin(0.5 * theta), 2);
    auto q = [&](double t) {
        if (t < 1e-150) return 0.0;
        return std::exp(-nu * t) * semigroups::poisson_kernel_omt(dim, t, omt) *
               std::pow(t, -1.0 - two_s);
    };
    double err = 0.0, v = 0.0;
    const double c1 = std::min(1.0, std::max(4.0 * theta, 1e-4));
    auto near = quad::tanh_sinh(q, 0.0, c1, 0.2 * abs_tol, 0.2 * rel_tol, max_levels);
    v += near.value;
    err += near.error_estimate;
    if (c1 < 1.0) v += panels_geometric(q, c1, 1.0, &err, 24, 48);
    const double T = std::max(4.0, 42.0 / nu);
    v += panels_geometric(q, 1.0, T, &err, 24, 48);
    return v / std::fabs(specfun::gamma(-two_s));
}

// S_s: subordinated Poisson kernel against the tail Bessel function B_{-s-1/2}
double ss_eval(const SphereDim& dim, double s, double theta, double abs_tol, double rel_tol,
               int max_levels) {
    const double nu = dim.nu;
    const double rho = -s - 0.5;
    const double omt = 2.0 * std::pow(std::sin(0.5 * theta), 2);
    auto q = [&](double t) {
        if (t < 1e-150) return 0.0;
        return semigroups::poisson_kernel_omt(dim, t, omt) *
               specfun::bessel_b_scaled(rho, nu * t) * std::pow(t, -0.5 - s);
    };
    double err = 0.0, v = 0.0;
    const double c1 = std::min(1.0, std::max(4.0 * theta, 1e-4));
    auto near = quad::tanh_sinh(q, 0.0, c1, 0.2 * abs_tol, 0.2 * rel_tol, max_levels);
    v += near.value;
    err += near.error_estimate;
    if (c1 < 1.0) v += panels_geometric(q, c1, 1.0, &err, 24, 48);
    const double T0 = std::max(6.0, 35.0 / nu);
    v += panels_geometric(q, 1.0, T0, &err, 24, 48);
    // far field: P = 1/omega + (P - 1/omega); the mean part integrates by the
    // asymptotic series, the remainder decays like e^{-t}
    v += minak_tail(0, nu, s, T0) / dim.omega;
    auto qm = [&](double t) {
        return semigroups::poisson_kernel_minus_mean_omt(dim, t, omt) *
               specfun::bessel_b_scaled(rho, nu * t) * std::pow(t, -0.5 - s);
    };
    auto tail = quad::exp_tail(qm, T0, 1.0);
    v += tail.value;
    const double pref = std::pow(dim.n - 2.0, s + 0.5) * std::sqrt(PI) / specfun::gamma(-s);
    return pref * v;
}

// ---- pole convolution rule and kernel cache ---------------------------------

struct PoleRule {
    std::vector<double> theta, w;
    double theta_cut = 0.0; // analytic continuation below the smallest node
};

const PoleRule& pole_rule() {
    static PoleRule rule = [] {
        PoleRule r;
        const double split = 0.4;
        const double half = 0.5 * split;
        const double h = 1.0 / 64.0; // tanh-sinh level 6
        double min_theta = split;
        for (int j = 0;; ++j) {
            const double u = j * h;
            if (u > 4.1) break;
            const double su = std::sinh(u);
            const double qe = std::exp(-PI * su);
            const double offset = 2.0 * qe / (1.0 + qe);
            const double wj = PI * std::cosh(u) * 2.0 * qe / ((1.0 + qe) * (1.0 + qe));
            if (offset < 4e-40) break;
            if (j == 0) {
                r.theta.push_back(half);
                r.w.push_back(wj * h * half);
            } else {
                const double lo = half * offset;      // node near 0
                const double hi = split - half * offset;
                r.theta.push_back(lo);
                r.w.push_back(wj * h * half);
                r.theta.push_back(hi);
                r.w.push_back(wj * h * half);
                min_theta = std::min(min_theta, lo);
            }
        }
        r.theta_cut = min_theta;
        const auto& gl = quad::gauss_legendre(192);
        const double mid = 0.5 * (split + PI), hw = 0.5 * (PI - split);
        for (int i = 0; i < 192; ++i) {
            r.theta.push_back(mid + hw * gl.nodes[i]);
            r.w.push_back(hw * gl.weights[i]);
        }
        return r;
    }();
    return rule;
}

enum class CacheLabel : int { Kpos = 0, KnegZeta = 1, L2s = 2, Ss = 3 };

const std::vector<double>& cached_kernel(CacheLabel label, const SphereDim& dim, double s,
                                         const std::function<double(double)>& eval_theta) {
    static std::map<std::tuple<int, int, long long>, std::unique_ptr<std::vector<double>>> cache;
    static std::mutex mtx;
    const long long skey = llround(s * 4e12);
    const auto key = std::make_tuple(static_cast<int>(label), dim.n, skey);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    const auto& rule = pole_rule();
    auto vals = std::make_unique<std::vector<double>>(rule.theta.size());
    for (size_t i = 0; i < rule.theta.size(); ++i) (*vals)[i] = eval_theta(rule.theta[i]);
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, ok] = cache.emplace(key, std::move(vals));
    return *it->second;
}

double quadratic_pole_coeff(const ZonalCoeffs& c) {
    // g(1) - g(cos theta) = c2 theta^2 + O(theta^4), c2 = sum a_k lambda_k Z_k(1) / (2(n-1))
    const auto z1 = zonal::zonal_all(c.dim, c.degree(), 1.0);
    double c2 = 0.0;
    for (int k = 0; k <= c.degree(); ++k)
        c2 += c.a[k] * zonal::eigenvalue(c.dim, k) * z1[k];
    return c2 / (2.0 * (c.dim.n - 1.0));
}

} // namespace

void FracOrder::validate(const SphereDim& dim) const {
    switch (mode) {
        case Mode::positive:
            if (!(s > 0.0 && s < 1.0))
                throw std::invalid_argument("FracOrder: positive mode needs s in (0,1)");
            break;
        case Mode::negative:
            if (!(s > 0.0)) throw std::invalid_argument("FracOrder: negative mode needs s > 0");
            break;
        case Mode::dtn:
            if (!(2.0 * s > 0.0 && 2.0 * s < 1.0))
                throw std::invalid_argument("FracOrder: dtn mode needs 2s in (0,1)");
            break;
    }
    (void)dim;
}

ZonalCoeffs spectral_frac(const ZonalCoeffs& c, const FracOrder& f) {
    f.validate(c.dim);
    ZonalCoeffs out = c;
    switch (f.mode) {
        case FracOrder::Mode::positive:
            out.a[0] = 0.0;
            for (int k = 1; k <= c.degree(); ++k)
                out.a[k] *= std::pow(zonal::eigenvalue(c.dim, k), f.s);
            break;
        case FracOrder::Mode::negative:
            if (!c.mean_zero())
                throw std::invalid_argument(
                    "spectral_frac: negative power requires a mean-zero input (a_0 = 0)");
            out.a[0] = 0.0;
            for (int k = 1; k <= c.degree(); ++k)
                out.a[k] *= std::pow(zonal::eigenvalue(c.dim, k), -f.s);
            break;
        case FracOrder::Mode::dtn:
            return dtn_spectral(c, 2.0 * f.s);
    }
    return out;
}

ZonalCoeffs dtn_spectral(const ZonalCoeffs& c, double two_s) {
    if (!(two_s > 0.0 && two_s < 2.0))
        throw std::invalid_argument("dtn_spectral: 2s in (0,2) required");
    ZonalCoeffs out = c;
    for (int k = 0; k <= c.degree(); ++k)
        out.a[k] *= std::pow(k + c.dim.nu, two_s);
    return out;
}

double minak_identity_rhs(int k, double nu, double s, const quad::QuadratureSpec& spec) {
    if (k < 0 || nu < 0.0 || !(k + nu > 0.0))
        throw std::invalid_argument("minak_identity_rhs: need k >= 0, nu >= 0, k + nu > 0");
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("minak_identity_rhs: s in (0,1) required");
    if (nu == 0.0) return std::pow(k, 2.0 * s);
    const double rho = -s - 0.5;
    auto q = [&](double t) {
        if (t < 1e-150) return 0.0;
        return std::exp(-static_cast<double>(k) * t) * specfun::bessel_b_scaled(rho, nu * t) *
               std::pow(t, -0.5 - s);
    };
    const double T = std::max(2.0, 35.0 / nu);
    double err = 0.0;
    auto near = quad::tanh_sinh(q, 0.0, 1.0, 0.2 * spec.abs_tol, 0.2 * spec.rel_tol,
                                spec.max_levels);
    double J = near.value;
    err += near.error_estimate;
    J += panels_geometric(q, 1.0, T, &err, 24, 48);
    J += minak_tail(k, nu, s, T);
    const double pref = std::pow(2.0 * nu, s + 0.5) * std::sqrt(PI) / specfun::gamma(-s);
    return std::pow(k + nu, 2.0 * s) + pref * J;
}

double kernel_Kneg_zeta(const SphereDim& dim, double s, double tau,
                        const quad::QuadratureSpec& spec) {
    if (!(s > 0.0)) throw std::invalid_argument("kernel_Kneg_zeta: s > 0 required");
    check_tau(tau);
    return kneg_zeta_eval(dim, s, theta_from_tau(tau), spec.abs_tol, spec.rel_tol,
                          spec.max_levels);
}

double kernel_Kneg_heat(const SphereDim& dim, double s, double tau,
                        const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 0.5 * (dim.n - 1.0)))
        throw std::invalid_argument("kernel_Kneg_heat: s in (0, (n-1)/2) required");
    check_tau(tau);
    return kneg_heat_eval(dim, s, theta_from_tau(tau), 0.1 * spec.rel_tol);
}

double kernel_Ks(const SphereDim& dim, double s, double tau, const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("kernel_Ks: s in (0,1) required");
    check_tau(tau);
    return ks_eval(dim, s, theta_from_tau(tau), 0.1 * spec.rel_tol);
}

double kernel_L2s(const SphereDim& dim, double two_s, double tau,
                  const quad::QuadratureSpec& spec) {
    if (!(two_s > 0.0 && two_s < 1.0))
        throw std::invalid_argument("kernel_L2s: 2s in (0,1) required");
    check_tau(tau);
    return l2s_eval(dim, two_s, theta_from_tau(tau), spec.abs_tol, spec.rel_tol,
                    spec.max_levels);
}

double kernel_Ss(const SphereDim& dim, double s, double tau, const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("kernel_Ss: s in (0,1) required");
    check_tau(tau);
    return ss_eval(dim, s, theta_from_tau(tau), spec.abs_tol, spec.rel_tol, spec.max_levels);
}

KernelProfile kneg_zeta_profile(const SphereDim& dim, double s) {
    return {dim, [dim, s](double tau) { return kernel_Kneg_zeta(dim, s, tau); },
            std::max(0.0, dim.n - 1.0 - 2.0 * s), KernelLabel::Kneg};
}

KernelProfile kneg_heat_profile(const SphereDim& dim, double s) {
    return {dim, [dim, s](double tau) { return kernel_Kneg_heat(dim, s, tau); },
            std::max(0.0, dim.n - 1.0 - 2.0 * s), KernelLabel::Kneg};
}

KernelProfile ks_profile(const SphereDim& dim, double s) {
    return {dim, [dim, s](double tau) { return kernel_Ks(dim, s, tau); },
            dim.n - 1.0 + 2.0 * s, KernelLabel::Kpos};
}

KernelProfile l2s_profile(const SphereDim& dim, double two_s) {
    return {dim, [dim, two_s](double tau) { return kernel_L2s(dim, two_s, tau); },
            dim.n - 1.0 + two_s, KernelLabel::L2s};
}

KernelProfile ss_profile(const SphereDim& dim, double s) {
    return {dim, [dim, s](double tau) { return kernel_Ss(dim, s, tau); },
            std::max(0.0, dim.n - 3.0 + 2.0 * s), KernelLabel::Ss};
}

double apply_frac_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("apply_frac_at_pole: s in (0,1) required");
    const SphereDim dim = c.dim;
    const double tol = 0.02 * spec.rel_tol;
    const auto& rule = pole_rule();
    const auto& K = cached_kernel(CacheLabel::Kpos, dim, s,
                                  [&](double th) { return ks_eval(dim, s, th, tol); });
    const int m = dim.n - 1;
    double sum = 0.0;
    for (size_t i = 0; i < rule.theta.size(); ++i) {
        const double th = rule.theta[i];
        const double D = zonal::synthesize_pole_minus(c, 2.0 * std::pow(std::sin(0.5 * th), 2));
        sum += rule.w[i] * D * K[i] * std::pow(std::sin(th), m - 1);
    }
    // analytic continuation below the smallest node: integrand ~ A c2 theta^{1-2s}
    const double A = specfun::gamma(0.5 * m + s) * std::pow(4.0, s) /
                     (std::pow(PI, 0.5 * m) * std::fabs(specfun::gamma(-s)));
    sum += A * quadratic_pole_coeff(c) * std::pow(rule.theta_cut, 2.0 - 2.0 * s) /
           (2.0 - 2.0 * s);
    return dim.omega_sub * sum;
}

double apply_neg_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec) {
    const SphereDim dim = c.dim;
    if (!c.mean_zero())
        throw std::invalid_argument("apply_neg_at_pole: mean-zero input required (a_0 = 0)");
    if (!(s > 0.0 && s < 0.5 * (dim.n - 1.0)))
        throw std::domain_error("apply_neg_at_pole: kernel route requires s < (n-1)/2");
    const auto& rule = pole_rule();
    const auto& K = cached_kernel(CacheLabel::KnegZeta, dim, s, [&](double th) {
        return kneg_zeta_eval(dim, s, th, 0.1 * spec.abs_tol, 0.1 * spec.rel_tol,
                              spec.max_levels);
    });
    const int m = dim.n - 1;
    double sum = 0.0;
    for (size_t i = 0; i < rule.theta.size(); ++i) {
        const double th = rule.theta[i];
        sum += rule.w[i] * zonal::synthesize(c, std::cos(th)) * K[i] *
               std::pow(std::sin(th), m - 1);
    }
    const double Aneg = specfun::gamma(0.5 * m - s) /
                        (specfun::gamma(s) * std::pow(4.0, s) * std::pow(PI, 0.5 * m));
    sum += Aneg * zonal::synthesize(c, 1.0) * std::pow(rule.theta_cut, 2.0 * s) / (2.0 * s);
    return dim.omega_sub * sum;
}

double apply_L2s_at_pole(const ZonalCoeffs& c, double two_s, const quad::QuadratureSpec& spec) {
    if (!(two_s > 0.0 && two_s < 1.0))
        throw std::invalid_argument("apply_L2s_at_pole: 2s in (0,1) required");
    const SphereDim dim = c.dim;
    const auto& rule = pole_rule();
    const auto& K = cached_kernel(CacheLabel::L2s, dim, two_s, [&](double th) {
        return l2s_eval(dim, two_s, th, 0.1 * spec.abs_tol, 0.1 * spec.rel_tol,
                        spec.max_levels);
    });
    const int m = dim.n - 1;
    double sum = 0.0;
    for (size_t i = 0; i < rule.theta.size(); ++i) {
        const double th = rule.theta[i];
        const double D = zonal::synthesize_pole_minus(c, 2.0 * std::pow(std::sin(0.5 * th), 2));
        sum += rule.w[i] * D * K[i] * std::pow(std::sin(th), m - 1);
    }
    return dim.omega_sub * sum +
           std::pow(dim.nu, two_s) * zonal::synthesize(c, 1.0);
}

double apply_Ss_at_pole(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("apply_Ss_at_pole: s in (0,1)");
    const SphereDim dim = c.dim;
    const auto& rule = pole_rule();
    const auto& K = cached_kernel(CacheLabel::Ss, dim, s, [&](double th) {
        return ss_eval(dim, s, th, 0.1 * spec.abs_tol, 0.1 * spec.rel_tol, spec.max_levels);
    });
    const int m = dim.n - 1;
    double sum = 0.0;
    for (size_t i = 0; i < rule.theta.size(); ++i) {
        const double th = rule.theta[i];
        sum += rule.w[i] * zonal::synthesize(c, std::cos(th)) * K[i] *
               std::pow(std::sin(th), m - 1);
    }
    return dim.omega_sub * sum;
}

DecompositionReport decompose(const ZonalCoeffs& c, double s, const quad::QuadratureSpec& spec) {
    if (!(s > 0.0 && 2.0 * s < 1.0))
        throw std::invalid_argument("decompose: 2s < 1 required for the direct kernel route");
    DecompositionReport rep;
    const auto z1 = zonal::zonal_all(c.dim, c.degree(), 1.0);
    for (int k = 0; k <= c.degree(); ++k)
        rep.lhs += c.a[k] * std::pow(zonal::eigenvalue(c.dim, k), s) * z1[k];
    rep.dtn_part = apply_L2s_at_pole(c, 2.0 * s, spec);
    rep.smoothing_part = apply_Ss_at_pole(c, s, spec);
    rep.residual = std::fabs(rep.lhs - rep.dtn_part - rep.smoothing_part);
    return rep;
}

SlopeFit exponent_fit(const std::function<double(double)>& kernel_of_tau, double d_lo,
                      double d_hi, int points) {
    if (!(d_lo > 0.0 && d_lo < d_hi && d_hi <= PI))
        throw std::invalid_argument("exponent_fit: need 0 < d_lo < d_hi <= pi");
    if (points < 3) throw std::invalid_argument("exponent_fit: points >= 3");
    std::vector<double> xs(points), ys(points);
    int sign = 0;
    for (int i = 0; i < points; ++i) {
        const double d = d_lo * std::pow(d_hi / d_lo, static_cast<double>(i) / (points - 1));
        const double v = kernel_of_tau(std::cos(d));
        const int sv = (v > 0.0) ? 1 : (v < 0.0 ? -1 : 0);
        if (sv == 0 || (sign != 0 && sv != sign))
            throw std::domain_error("exponent_fit: kernel changes sign on the fit range");
        sign = sv;
        xs[i] = std::log(d);
        ys[i] = std::log(std::fabs(v));
    }
    double xm = 0.0, ym = 0.0;
    for (int i = 0; i < points; ++i) {
        xm += xs[i];
        ym += ys[i];
    }
    xm /= points;
    ym /= points;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < points; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    double ss_res = 0.0;
    for (int i = 0; i < points; ++i) {
        const double r = ys[i] - ym - fit.slope * (xs[i] - xm);
        ss_res += r * r;
    }
    fit.half_width = 2.0 * std::sqrt(ss_res / std::max(1, points - 2) / sxx);
    return fit;
}

} // namespace spherefrac::fracops
