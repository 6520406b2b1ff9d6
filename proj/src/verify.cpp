#include "spherefrac/verify.hpp"

#include "spherefrac/circle.hpp"
#include "spherefrac/extension.hpp"
#include "spherefrac/fracops.hpp"
#include "spherefrac/semigroups.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/zonal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace spherefrac::verify {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;

ZonalCoeffs one_hot(const SphereDim& dim, int k) {
    std::vector<double> a(static_cast<size_t>(k) + 1, 0.0);
    a[k] = 1.0;
    return {dim, std::move(a)};
}

ZonalCoeffs random_bandlimited(const SphereDim& dim, int K, std::mt19937& rng,
                               bool mean_zero = false) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) a[k] = u(rng) / ((1.0 + k) * (1.0 + k));
    if (mean_zero) a[0] = 0.0;
    return {dim, std::move(a)};
}

double rel_dev(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

struct Recorder {
    double worst = 0.0;
    std::string note;
    void update(double dev, const std::string& where) {
        if (dev > worst) {
            worst = dev;
            note = where;
        }
    }
};

// ---- C1: eigenfunction reproduction for the positive kernel route ----------

CriterionResult c1_eigenfrac(double tol_scale) {
    CriterionResult r{"C1", "eigenfrac", false, 0.0, 1e-5 * tol_scale, 0.0, ""};
    Recorder rec;
    for (int n : {3, 4, 5}) {
        SphereDim dim(n);
        for (double s : {0.25, 0.5, 0.75}) {
            for (int k = 1; k <= 12; ++k) {
                const auto c = one_hot(dim, k);
                const double got = fracops::apply_frac_at_pole(c, s);
                const double want = std::pow(zonal::eigenvalue(dim, k), s) *
                                    zonal::zonal_harmonic(dim, k, 1.0);
                std::ostringstream os;
                os << "n=" << n << " s=" << s << " k=" << k;
                rec.update(std::fabs(got - want) / std::fabs(want), os.str());
            }
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C2: negative powers ----------------------------------------------------

CriterionResult c2_negpowers(double tol_scale) {
    CriterionResult r{"C2", "negpowers", false, 0.0, 1e-5 * tol_scale, 0.0, ""};
    Recorder rec;
    for (int n : {3, 4, 5}) {
        SphereDim dim(n);
        for (double s : {0.3, 0.6}) {
            if (!(s < 0.5 * (n - 1))) continue;
            for (int k = 1; k <= 12; ++k) {
                const auto c = one_hot(dim, k);
                const double got = fracops::apply_neg_at_pole(c, s);
                const double want = std::pow(zonal::eigenvalue(dim, k), -s) *
                                    zonal::zonal_harmonic(dim, k, 1.0);
                std::ostringstream os;
                os << "apply n=" << n << " s=" << s << " k=" << k;
                rec.update(std::fabs(got - want) / std::fabs(want), os.str());
            }
        }
    }
    // pointwise route agreement, scaled to the 1e-7 sub-tolerance
    SphereDim dim3(3);
    for (double tau : {-0.5, 0.0, 0.9}) {
        const double a = fracops::kernel_Kneg_zeta(dim3, 0.7, tau);
        const double b = fracops::kernel_Kneg_heat(dim3, 0.7, tau);
        std::ostringstream os;
        os << "zeta-vs-heat tau=" << tau;
        rec.update(std::fabs(a - b) * 1e-5 / (1e-7), os.str());
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C3: the numerical identity grid ---------------------------------------

CriterionResult c3_minak(double tol_scale) {
    CriterionResult r{"C3", "minak", false, 0.0, 1e-8 * tol_scale, 0.0, ""};
    Recorder rec;
    for (int k = 0; k <= 20; ++k) {
        for (double nu : {0.5, 1.0, 1.5, 3.0}) {
            for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const double lhs = std::pow(k * (k + 2.0 * nu), s);
                const double rhs = fracops::minak_identity_rhs(k, nu, s);
                std::ostringstream os;
                os << "k=" << k << " nu=" << nu << " s=" << s;
                rec.update(rel_dev(rhs, lhs), os.str());
            }
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C4: decomposition closure ----------------------------------------------

CriterionResult c4_decomposition(double tol_scale, std::uint32_t seed) {
    CriterionResult r{"C4", "decomposition", false, 0.0, 1e-5 * tol_scale, 0.0, ""};
    Recorder rec;
    std::mt19937 rng(seed);
    for (int n : {3, 5}) {
        SphereDim dim(n);
        for (double s : {0.2, 0.4}) {
            const auto c = random_bandlimited(dim, 8, rng);
            const auto rep = fracops::decompose(c, s);
            std::ostringstream os;
            os << "random n=" << n << " s=" << s;
            rec.update(rep.residual / std::max(1.0, std::fabs(rep.lhs)), os.str());
        }
    }
    // constant input: forced cancellation at the tighter 1e-6
    for (int n : {3, 5}) {
        SphereDim dim(n);
        ZonalCoeffs c{dim, {0.7}};
        for (double s : {0.2, 0.4}) {
            const auto rep = fracops::decompose(c, s);
            std::ostringstream os;
            os << "constant n=" << n << " s=" << s;
            rec.update(rep.residual * 1e-5 / 1e-6, os.str());
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C5: kernel estimates ----------------------------------------------------

CriterionResult c5_estimates(double tol_scale) {
    CriterionResult r{"C5", "estimates", false, 0.0, 0.05 * tol_scale, 0.0, ""};
    Recorder rec;
    SphereDim dim3(3);
    SphereDim dim4(4);

    for (double s : {0.25, 0.75}) {
        auto fit = fracops::exponent_fit(
            [&](double tau) { return fracops::kernel_Ks(dim3, s, tau); }, 1e-2, 1e-1, 9);
        std::ostringstream os;
        os << "Ks slope s=" << s;
        rec.update(std::fabs(fit.slope - (-(2.0 + 2.0 * s))) / 1.0, os.str());
    }
    {
        auto fit = fracops::exponent_fit(
            [&](double tau) { return fracops::kernel_L2s(dim3, 0.5, tau); }, 1e-2, 1e-1, 9);
        rec.update(std::fabs(fit.slope - (-2.5)), "L2s slope 2s=0.5");
    }
    {
        auto fit = fracops::exponent_fit(
            [&](double tau) { return fracops::kernel_Kneg_heat(dim3, 0.6, tau); },
            std::pow(10.0, -2.5), 1e-1, 9);
        rec.update(std::fabs(fit.slope - (-(2.0 - 1.2))), "Kneg slope s=0.6");
    }
    // |S_s| d^{(n-1)-(2-2s)} bounded on d in [1e-2, 1], n = 4, s = 0.5
    {
        std::vector<double> b;
        for (int i = 0; i <= 12; ++i) {
            const double d = 1e-2 * std::pow(100.0, i / 12.0);
            b.push_back(std::fabs(fracops::kernel_Ss(dim4, 0.5, std::cos(d))) *
                        std::pow(d, 2.0));
        }
        std::vector<double> sorted = b;
        std::sort(sorted.begin(), sorted.end());
        const double med = sorted[sorted.size() / 2];
        const double ratio = sorted.back() / med;
        rec.update(ratio * 0.05 / 20.0, "Ss boundedness ratio");
    }
    // s > (n-1)/2: boundedness of K_{-s}; s = (n-1)/2: logarithmic growth
    {
        const double k0 = fracops::kernel_Kneg_zeta(dim3, 1.2, 0.0);
        const double k1 = fracops::kernel_Kneg_zeta(dim3, 1.2, 0.999);
        rec.update(std::fabs(k1 - k0) / (10.0 * (1.0 + std::fabs(k0))) * 0.05,
                   "flatness s=1.2");
        double rmin = 1e300, rmax = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const double d = 1e-2 * std::pow(100.0, i / 10.0);
            const double tau = std::cos(d);
            const double ratio = fracops::kernel_Kneg_zeta(dim3, 1.0, tau) /
                                 std::log(1.0 + std::pow(1.0 - tau, -1.5));
            if (!(ratio > 0.0)) rmin = -1.0;
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
        const double ok = (rmin > 0.0 && rmax / rmin <= 20.0) ? 0.0 : 1.0;
        rec.update(ok, "log case s=(n-1)/2");
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C6: circle closed forms --------------------------------------------------

CriterionResult c6_circle(double tol_scale) {
    CriterionResult r{"C6", "circle", false, 0.0, 1e-7 * tol_scale, 0.0, ""};
    Recorder rec;
    // Fourier oracle at sigma = 3/2, x = 1/2: alternating absolutely convergent sum
    {
        const double sg = 1.5;
        double oracle = 0.0;
        const int KMAX = 2000000;
        for (int k = KMAX; k >= 1; --k)
            oracle += 2.0 * ((k % 2) ? -1.0 : 1.0) / std::pow(2.0 * PI * k, sg);
        const double closed = circle::kernel_neg({sg, 0.5});
        rec.update(std::fabs(closed - oracle) * 1e-7 / 1e-8, "Kneg fourier sigma=1.5");
    }
    for (double sg : {0.5, 1.5}) {
        const double closed = circle::kernel_pos({sg, 0.25});
        const double sub = circle::kernel_pos_heat_oracle(sg, 0.25);
        std::ostringstream os;
        os << "Kpos subordination sigma=" << sg;
        rec.update(std::fabs(closed - sub) / std::max(1.0, std::fabs(closed)), os.str());
    }
    // endpoint exponents (tolerance 0.02, scaled into the 1e-7 frame)
    {
        auto slope_of = [&](std::function<double(double)> f) {
            std::vector<double> xs, ys;
            for (int i = 0; i <= 8; ++i) {
                const double x = 1e-4 * std::pow(100.0, i / 8.0);
                xs.push_back(std::log(x));
                ys.push_back(std::log(std::fabs(f(x))));
            }
            double xm = 0, ym = 0;
            for (size_t i = 0; i < xs.size(); ++i) { xm += xs[i]; ym += ys[i]; }
            xm /= xs.size(); ym /= ys.size();
            double sxx = 0, sxy = 0;
            for (size_t i = 0; i < xs.size(); ++i) {
                sxx += (xs[i] - xm) * (xs[i] - xm);
                sxy += (xs[i] - xm) * (ys[i] - ym);
            }
            return sxy / sxx;
        };
        const double sneg =
            slope_of([&](double x) { return circle::kernel_neg({1.5, x}); });
        rec.update(std::fabs(sneg - 0.5) * 1e-7 / 0.02, "Kneg endpoint exponent");
        const double spos =
            slope_of([&](double x) { return circle::kernel_pos({0.5, x}); });
        rec.update(std::fabs(spos - (-1.5)) * 1e-7 / 0.02, "Kpos endpoint exponent");
    }
    for (double w : {-1.0, -0.5}) {
        for (double x : {0.25, 0.5}) {
            const double lhs = circle::fine_H(x, w);
            const double rhs = circle::fine_H_zeta(x, w);
            std::ostringstream os;
            os << "fine w=" << w << " x=" << x;
            rec.update(std::fabs(lhs - rhs) * 1e-7 / 1e-8, os.str());
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C7: heat/Poisson structure ------------------------------------------------

CriterionResult c7_heatpoisson(double tol_scale) {
    CriterionResult r{"C7", "heatpoisson", false, 0.0, 1e-8 * tol_scale, 0.0, ""};
    Recorder rec;
    // normalizations at 1e-10
    for (int n : {3, 5}) {
        SphereDim dim(n);
        for (double rr : {0.3, 0.9}) {
            const double mass = zonal::integrate_weighted(
                [&](double tau) { return semigroups::poisson_kernel({rr, dim}, tau); }, dim);
            std::ostringstream os;
            os << "poisson mass n=" << n << " r=" << rr;
            rec.update(std::fabs(dim.omega_sub * mass - 1.0) * 1e-8 / 1e-10, os.str());
        }
    }
    {
        SphereDim dim(3);
        for (double t : {0.05, 0.5}) {
            const double mass = zonal::integrate_weighted(
                [&](double tau) { return semigroups::heat_kernel({t, dim}, tau); }, dim);
            std::ostringstream os;
            os << "heat mass t=" << t;
            rec.update(std::fabs(dim.omega_sub * mass - 1.0) * 1e-8 / 1e-10, os.str());
        }
    }
    // positivity and the Gaussian sandwich with a fitted constant (n = 3);
    // grid restricted to points whose bounds are representable in double
    {
        SphereDim dim(3);
        double cup = 0.0, clow = 1e300;
        for (int i = 0; i <= 12; ++i) {
            const double t = std::pow(10.0, -3.0 + 3.0 * i / 12.0);
            for (double tau : {-0.9, -0.5, 0.0, 0.5, 0.9, 0.99}) {
                const double d = std::acos(tau);
                if (d * d / (4.0 * t) > 600.0) continue;
                const double w = semigroups::heat_kernel({t, dim}, tau);
                if (!(w > 0.0)) rec.update(1.0, "heat positivity");
                cup = std::max(cup, w * t * std::exp(d * d / (8.0 * t)));
                clow = std::min(clow, w * t * std::exp(d * d / (4.0 * t)));
            }
        }
        const double C = std::max(cup, 1.0 / clow);
        // verify the sandwich with the fitted constant on a shifted grid
        double viol = 0.0;
        for (int i = 0; i <= 9; ++i) {
            const double t = std::pow(10.0, -2.9 + 2.8 * i / 9.0);
            for (double tau : {-0.7, -0.2, 0.3, 0.7, 0.95}) {
                const double d = std::acos(tau);
                if (d * d / (4.0 * t) > 600.0) continue;
                const double w = semigroups::heat_kernel({t, dim}, tau);
                const double up = C / t * std::exp(-d * d / (8.0 * t));
                const double lo = 1.0 / (C * t) * std::exp(-d * d / (4.0 * t));
                if (w > up || w < lo) viol = 1.0;
            }
        }
        rec.update(viol, "gaussian sandwich");
        if (!(C < 100.0)) rec.update(1.0, "gaussian constant size");
    }
    // multiplier extraction
    {
        SphereDim dim(3);
        auto hp = semigroups::heat_profile(dim, 0.2);
        for (int k = 0; k <= 10; ++k) {
            const double got = zonal::funk_hecke_multiplier(hp, k);
            const double want = std::exp(-0.2 * zonal::eigenvalue(dim, k));
            std::ostringstream os;
            os << "heat multiplier k=" << k;
            rec.update(std::fabs(got - want), os.str());
        }
        auto pp = semigroups::poisson_profile(dim, 0.5);
        for (int k = 0; k <= 15; ++k) {
            const double got = zonal::funk_hecke_multiplier(pp, k);
            const double want = std::pow(0.5, k);
            std::ostringstream os;
            os << "poisson multiplier k=" << k;
            rec.update(std::fabs(got - want), os.str());
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C8: extension problem -----------------------------------------------------

CriterionResult c8_extension(double tol_scale, std::uint32_t seed) {
    CriterionResult r{"C8", "extension", false, 0.0, 1e-8 * tol_scale, 0.0, ""};
    Recorder rec;
    SphereDim dim(3);
    // Bessel vs heat-integral route
    for (double s : {0.25, 0.5}) {
        for (int k = 0; k <= 6; ++k) {
            auto c = one_hot(dim, k);
            const auto eb = extension::extend(c, s, 0.7);
            const auto eh = extension::extend_via_heat(c, s, 0.7);
            std::ostringstream os;
            os << "route k=" << k << " s=" << s;
            rec.update(std::fabs(eb.a[k] - eh.a[k]), os.str());
        }
    }
    // Neumann trace at 1e-3
    {
        std::vector<double> ladder;
        for (int j = 0; j < 6; ++j) ladder.push_back(0.2 * std::pow(0.5, j));
        std::mt19937 rng(seed + 1);
        for (double s : {0.3, 0.5, 0.75}) {
            auto c1 = one_hot(dim, 1);
            auto rep1 = extension::neumann_trace(c1, s, ladder);
            std::ostringstream os;
            os << "trace one-hot s=" << s;
            rec.update(rep1.rel_error * 1e-8 / 1e-3, os.str());
            auto cr = random_bandlimited(dim, 6, rng);
            auto repr = extension::neumann_trace(cr, s, ladder);
            std::ostringstream os2;
            os2 << "trace random s=" << s;
            rec.update(repr.rel_error * 1e-8 / 1e-3, os2.str());
        }
    }
    // PDE residual at 1e-6 (s = 0.3) and near-exactness at s = 1/2
    {
        std::vector<double> taus = {-0.8, -0.3, 0.2, 0.6, 0.9};
        std::vector<double> ys = {0.05, 0.1, 0.2, 0.4, 0.8};
        auto rep = extension::pde_residual(one_hot(dim, 2), 0.3, taus, ys);
        rec.update(rep.max_residual * 1e-8 / 1e-6, "pde s=0.3");
        auto rep2 = extension::pde_residual(one_hot(dim, 1), 0.5, taus, ys);
        rec.update(rep2.max_residual * 1e-8 / 1e-6, "pde s=0.5");
    }
    // negative-power remark consistency
    {
        for (double s : {0.3, 0.5}) {
            auto f = one_hot(dim, 1);
            for (double y : {0.5, 1.0}) {
                const auto direct = extension::neumann_problem_negative(f, s, y);
                auto inv = fracops::spectral_frac(f, {s, fracops::FracOrder::Mode::negative});
                const auto via = extension::extend(inv, s, y);
                std::ostringstream os;
                os << "negative remark s=" << s << " y=" << y;
                rec.update(std::fabs(direct.a[1] - via.a[1]), os.str());
            }
        }
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

// ---- C9: special-function floor --------------------------------------------------

CriterionResult c9_specfun(double tol_scale) {
    CriterionResult r{"C9", "specfun", false, 0.0, 1e-12 * tol_scale, 0.0, ""};
    Recorder rec;
    // Gamma duplication and reflection on a grid
    for (double z : {0.1, 0.3, 0.45, 0.7, 1.3, 2.7, 4.9, 7.1, 11.3}) {
        const double dup = specfun::gamma(2.0 * z) * std::sqrt(PI) /
                           (std::pow(2.0, 2.0 * z - 1.0) * specfun::gamma(z) *
                            specfun::gamma(z + 0.5));
        std::ostringstream os;
        os << "duplication z=" << z;
        rec.update(std::fabs(dup - 1.0), os.str());
        if (z < 0.5) {
            const double refl = specfun::gamma(0.5 + z) * specfun::gamma(0.5 - z) *
                                specfun::cospi(z) / PI;
            std::ostringstream os2;
            os2 << "reflection z=" << z;
            rec.update(std::fabs(refl - 1.0), os2.str());
        }
    }
    // Hurwitz recurrence and classical values
    for (double sg : {0.3, 1.7}) {
        for (double x : {0.1, 0.5, 0.9}) {
            const double lhs = specfun::hurwitz_zeta(sg, x) - std::pow(x, -sg) -
                               specfun::hurwitz_zeta(sg, x + 1.0);
            std::ostringstream os;
            os << "recurrence sigma=" << sg << " x=" << x;
            rec.update(std::fabs(lhs), os.str());
        }
    }
    rec.update(std::fabs(specfun::hurwitz_zeta(2.0, 1.0) - PI * PI / 6.0), "zeta(2,1)");
    rec.update(std::fabs(specfun::hurwitz_zeta(2.0, 0.5) - PI * PI / 2.0), "zeta(2,1/2)");
    // Gegenbauer generating identities at 1e-10 (scaled into the 1e-12 frame)
    for (double nu : {0.5, 1.0, 1.5}) {
        for (double rr : {0.1, 0.5, 0.9}) {
            for (double tau : {-1.0, 0.0, 0.7}) {
                const int K = 40 + static_cast<int>(std::ceil(
                                       std::log(1e-13) / std::log(std::max(rr, 0.1))));
                const auto C = specfun::gegenbauer_all(K, nu, tau);
                double plain = 0.0, weighted = 0.0, rk = 1.0;
                for (int k = 0; k <= K; ++k) {
                    plain += C[k] * rk;
                    weighted += (k + nu) / nu * C[k] * rk;
                    rk *= rr;
                }
                const double gen = std::pow(1.0 - 2.0 * tau * rr + rr * rr, -nu);
                const double genw = (1.0 - rr * rr) /
                                    std::pow(1.0 - 2.0 * rr * tau + rr * rr, nu + 1.0);
                std::ostringstream os;
                os << "generating nu=" << nu << " r=" << rr << " tau=" << tau;
                rec.update(std::fabs(plain - gen) * 1e-12 / 1e-10, os.str());
                rec.update(std::fabs(weighted - genw) * 1e-12 / 1e-10, os.str() + " weighted");
            }
        }
    }
    // Bessel closed forms at 1e-10
    {
        const double i_half = specfun::bessel_i(0.5, 1.0);
        const double want = std::sqrt(2.0 / PI) * std::sinh(1.0);
        rec.update(std::fabs(i_half - want) * 1e-12 / 1e-10, "I_{1/2}(1)");
        const double k_half = specfun::bessel_k2(0.5, 2.0);
        const double wantk = std::sqrt(PI / 4.0) * std::exp(-2.0);
        rec.update(std::fabs(k_half - wantk) * 1e-12 / 1e-10, "K_{1/2}(2)");
    }
    r.worst = rec.worst;
    r.detail = "worst at " + rec.note;
    r.pass = rec.worst <= r.tolerance;
    return r;
}

} // namespace

std::vector<CriterionResult> run_all(double tol_scale, std::uint32_t seed,
                                     const std::vector<std::string>& only) {
    using Runner = std::function<CriterionResult()>;
    const std::vector<std::pair<std::string, Runner>> suites = {
        {"eigenfrac", [&] { return c1_eigenfrac(tol_scale); }},
        {"negpowers", [&] { return c2_negpowers(tol_scale); }},
        {"minak", [&] { return c3_minak(tol_scale); }},
        {"decomposition", [&] { return c4_decomposition(tol_scale, seed); }},
        {"estimates", [&] { return c5_estimates(tol_scale); }},
        {"circle", [&] { return c6_circle(tol_scale); }},
        {"heatpoisson", [&] { return c7_heatpoisson(tol_scale); }},
        {"extension", [&] { return c8_extension(tol_scale, seed); }},
        {"specfun", [&] { return c9_specfun(tol_scale); }},
    };
    std::vector<CriterionResult> out;
    int idx = 0;
    for (const auto& [name, runner] : suites) {
        ++idx;
        if (!only.empty()) {
            const std::string id = "C" + std::to_string(idx);
            bool wanted = false;
            for (const auto& o : only)
                if (o == name || o == id) wanted = true;
            if (!wanted) continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult res = runner();
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace spherefrac::verify
