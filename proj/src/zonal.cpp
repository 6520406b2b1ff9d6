#include "spherefrac/zonal.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace spherefrac {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
}

SphereDim::SphereDim(int n_) : n(n_) {
    if (n < 3)
        throw std::invalid_argument("SphereDim: n >= 3 required (the circle has its own module)");
    nu = 0.5 * (n - 2);
    omega = specfun::surface_area(n);
    omega_sub = specfun::surface_area(n - 1);
}

bool ZonalCoeffs::mean_zero(double tol) const {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::fabs(v));
    return std::fabs(a.empty() ? 0.0 : a[0]) <= tol * std::max(1.0, scale);
}

namespace zonal {

double eigenvalue(const SphereDim& dim, int k) {
    if (k < 0) throw std::invalid_argument("eigenvalue: k >= 0 required");
    return static_cast<double>(k) * (k + dim.n - 2.0);
}

std::int64_t dim_sh(const SphereDim& dim, int k) {
    if (k < 0) throw std::invalid_argument("dim_sh: k >= 0 required");
    if (k == 0) return 1;
    // (2k+n-2)/(k+n-2) * binom(k+n-2, k), kept in double and rounded
    double v = 1.0;
    for (int i = 1; i <= dim.n - 2; ++i) v *= (k + i) / static_cast<double>(i);
    v *= (2.0 * k + dim.n - 2.0) / (k + dim.n - 2.0);
    return static_cast<std::int64_t>(std::llround(v));
}

double zonal_harmonic(const SphereDim& dim, int k, double tau) {
    const auto c = specfun::gegenbauer_all(k, dim.nu, tau);
    return ((k + dim.nu) / dim.nu) * c[k] / dim.omega;
}

std::vector<double> zonal_all(const SphereDim& dim, int K, double tau) {
    const auto c = specfun::gegenbauer_all(K, dim.nu, tau);
    std::vector<double> z(c.size());
    for (int k = 0; k <= K; ++k) z[k] = ((k + dim.nu) / dim.nu) * c[k] / dim.omega;
    return z;
}

double synthesize(const ZonalCoeffs& c, double tau) {
    if (c.a.empty()) return 0.0;
    const auto z = zonal_all(c.dim, c.degree(), tau);
    double s = 0.0;
    for (size_t k = 0; k < c.a.size(); ++k) s += c.a[k] * z[k];
    return s;
}

double synthesize_pole_minus(const ZonalCoeffs& c, double one_minus_tau) {
    // E_k = C_k(1) - C_k(tau) satisfies
    //   k E_k = 2(k-1+nu) (E_{k-1} + (1-tau) C_{k-1}(tau)) - (k-2+2nu) E_{k-2},
    // which keeps every term proportional to (1-tau); no cancellation as tau -> 1.
    const double nu = c.dim.nu;
    const double omt = one_minus_tau;
    const double tau = 1.0 - omt;
    const int K = c.degree();
    double s = 0.0;
    double Cm2 = 1.0, Cm1 = 2.0 * nu * tau; // C_{k-2}, C_{k-1}
    double Em2 = 0.0, Em1 = 2.0 * nu * omt; // E_{k-2}, E_{k-1}
    if (K >= 1) s += c.a[1] * ((1.0 + nu) / nu) * Em1 / c.dim.omega;
    for (int k = 2; k <= K; ++k) {
        const double Ek = (2.0 * (k - 1 + nu) * (Em1 + omt * Cm1) - (k - 2 + 2.0 * nu) * Em2) / k;
        const double Ck = (2.0 * (k - 1 + nu) * tau * Cm1 - (k - 2 + 2.0 * nu) * Cm2) / k;
        s += c.a[k] * ((k + nu) / nu) * Ek / c.dim.omega;
        Em2 = Em1; Em1 = Ek;
        Cm2 = Cm1; Cm1 = Ck;
    }
    return s;
}

double gegenbauer_norm(const SphereDim& dim, int k) {
    const double nu = dim.nu;
    // pi 2^{1-2nu} Gamma(k+2nu) / ((k+nu) Gamma(nu)^2 k!)
    double ratio = 1.0; // Gamma(k+2nu)/(Gamma(2nu) k!)  ( = C_k(1) )
    for (int i = 1; i <= k; ++i) ratio *= (i - 1 + 2.0 * nu) / i;
    const double g2nu = specfun::gamma(2.0 * nu);
    const double gnu = specfun::gamma(nu);
    return PI * std::pow(2.0, 1.0 - 2.0 * nu) * ratio * g2nu / ((k + nu) * gnu * gnu);
}

double integrate_weighted(const std::function<double(double)>& F, const SphereDim& dim,
                          double rel_tol) {
    const int m = dim.n - 2;
    auto g = [&](double th) { return F(std::cos(th)) * std::pow(std::sin(th), m); };
    double prev = quad::gl_integrate(g, 0.0, PI, 64);
    for (int N : {128, 256, 512}) {
        const double cur = quad::gl_integrate(g, 0.0, PI, N);
        if (std::fabs(cur - prev) <= rel_tol * std::max(1.0, std::fabs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

double integrate_weighted_theta(const std::function<double(double)>& F_theta,
                                const SphereDim& dim, double abs_tol, double rel_tol) {
    const int m = dim.n - 2;
    auto g = [&](double th) { return F_theta(th) * std::pow(std::sin(th), m); };
    const double cut = 0.5;
    auto near = quad::tanh_sinh(g, 0.0, cut, abs_tol, rel_tol, 12);
    double far_prev = quad::gl_integrate(g, cut, PI, 96);
    double far = quad::gl_integrate(g, cut, PI, 192);
    if (std::fabs(far - far_prev) > std::max(abs_tol, rel_tol * std::fabs(far)))
        far = quad::gl_integrate(g, cut, PI, 384);
    return near.value + far;
}

ZonalCoeffs project(const std::function<double(double)>& g, const SphereDim& dim, int K,
                    int nodes) {
    if (K < 0) throw std::invalid_argument("project: K >= 0 required");
    if (nodes == 0) nodes = std::min(512, std::max(64, 2 * K + dim.n + 24));
    if (nodes < K + 9)
        throw std::invalid_argument("project: insufficient nodes (need at least K + 9)");
    const auto& rule = quad::gauss_legendre(nodes);
    const int m = dim.n - 2;

    std::vector<double> acc(static_cast<size_t>(K) + 1, 0.0);
    for (int i = 0; i < nodes; ++i) {
        const double th = 0.5 * PI * (1.0 + rule.nodes[i]);
        const double w = 0.5 * PI * rule.weights[i] * std::pow(std::sin(th), m);
        const double tau = std::cos(th);
        const double gv = g(tau) * w;
        const auto c = specfun::gegenbauer_all(K, dim.nu, tau);
        for (int k = 0; k <= K; ++k) acc[k] += gv * c[k];
    }
    std::vector<double> a(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const double hk = gegenbauer_norm(dim, k);
        a[k] = dim.omega * dim.nu / (k + dim.nu) / hk * acc[k];
    }
    return {dim, std::move(a)};
}

double funk_hecke_multiplier(const KernelProfile& F, int k, const quad::QuadratureSpec& spec) {
    const SphereDim& dim = F.dim;
    if (F.singularity >= dim.n - 1)
        throw std::domain_error("funk_hecke_multiplier: profile not integrable (p >= n-1)");
    const double ck1 = specfun::gegenbauer_at_one(k, dim.nu);
    auto integrand_theta = [&](double th) {
        const double tau = std::cos(th);
        const auto c = specfun::gegenbauer_all(k, dim.nu, tau);
        return F.eval(tau) * c[k];
    };
    double integral;
    if (F.singularity > 0.0) {
        integral = integrate_weighted_theta(integrand_theta, dim, spec.abs_tol, spec.rel_tol);
    } else {
        // smooth profile: adaptive Gauss-Legendre in theta
        const int m = dim.n - 2;
        auto g = [&](double th) { return integrand_theta(th) * std::pow(std::sin(th), m); };
        double prev = quad::gl_integrate(g, 0.0, PI, 64 + 2 * k);
        integral = prev;
        for (int N = 128 + 2 * k; N <= 512; N *= 2) {
            integral = quad::gl_integrate(g, 0.0, PI, std::min(N, 512));
            if (std::fabs(integral - prev) <=
                std::max(spec.abs_tol, spec.rel_tol * std::fabs(integral)))
                break;
            prev = integral;
        }
    }
    return dim.omega_sub / ck1 * integral;
}

std::string to_json(const ZonalCoeffs& c) {
    nlohmann::json j;
    j["n"] = c.dim.n;
    j["basis"] = "zonal-harmonic";
    j["coeffs"] = c.a;
    return j.dump(2);
}

ZonalCoeffs from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("basis") || !j.contains("coeffs"))
        throw std::invalid_argument("coefficient JSON: need fields n, basis, coeffs");
    if (j["basis"].get<std::string>() != "zonal-harmonic")
        throw std::invalid_argument("coefficient JSON: basis must be 'zonal-harmonic'");
    SphereDim dim(j["n"].get<int>());
    return {dim, j["coeffs"].get<std::vector<double>>()};
}

} // namespace zonal
} // namespace spherefrac
