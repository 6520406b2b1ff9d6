#include <doctest.h>

#include "spherefrac/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace spherefrac;

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
}

TEST_CASE("gamma: exact points and sign") {
    CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(PI)).epsilon(1e-14));
    CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    // reflection: Gamma(-1/2) = -2 sqrt(pi)
    CHECK(specfun::gamma(-0.5) == doctest::Approx(-3.5449077018110320546).epsilon(1e-13));
    CHECK(specfun::gamma(-1.5) == doctest::Approx(2.3632718012073547031).epsilon(1e-13));
    CHECK(specfun::gamma(-2.5) == doctest::Approx(-0.94530872048294188123).epsilon(1e-13));
    // mpmath: gamma(7.3), gamma(-7.3)
    CHECK(specfun::gamma(7.3) == doctest::Approx(1271.4236336639092731).epsilon(1e-13));
    CHECK(specfun::gamma(-7.3) == doctest::Approx(4.1838787301354769898e-4).epsilon(1e-12));
    CHECK_THROWS_AS((void)specfun::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS((void)specfun::gamma(-3.0), std::domain_error);
}

TEST_CASE("gamma: relative accuracy across |x| <= 30") {
    // duplication against factorials at integers and half-integers
    double fact = 1.0;
    for (int n = 1; n <= 25; ++n) {
        fact *= n;
        CHECK(specfun::gamma(n + 1.0) == doctest::Approx(fact).epsilon(1e-13));
    }
    // lgamma consistency
    for (double x : {0.2, 1.7, 9.4, 21.5, 29.9, -0.7, -12.3, -29.5}) {
        const double g = specfun::gamma(x);
        CHECK(std::log(std::fabs(g)) == doctest::Approx(specfun::lgamma_abs(x)).epsilon(1e-12));
    }
}

TEST_CASE("rgamma zeros at poles") {
    CHECK(specfun::rgamma(0.0) == 0.0);
    CHECK(specfun::rgamma(-4.0) == 0.0);
    CHECK(specfun::rgamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gamma_upper: series, continued fraction, negative order") {
    // Gamma(1, x) = e^{-x}
    CHECK(specfun::gamma_upper(1.0, 0.3) == doctest::Approx(std::exp(-0.3)).epsilon(1e-13));
    CHECK(specfun::gamma_upper(1.0, 7.0) == doctest::Approx(std::exp(-7.0)).epsilon(1e-13));
    // Gamma(1/2, x) = sqrt(pi) erfc(sqrt(x))
    for (double x : {0.1, 1.0, 9.0}) {
        CHECK(specfun::gamma_upper(0.5, x) ==
              doctest::Approx(std::sqrt(PI) * std::erfc(std::sqrt(x))).epsilon(1e-12));
    }
    // negative order via recurrence: Gamma(a+1,x) = a Gamma(a,x) + x^a e^{-x}
    for (double a : {-0.4, -1.3}) {
        for (double x : {0.2, 0.7, 3.0, 40.0}) {
            const double lhs = specfun::gamma_upper(a + 1.0, x);
            const double rhs =
                a * specfun::gamma_upper(a, x) + std::pow(x, a) * std::exp(-x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("gegenbauer: degree zero, Legendre value, value at 1") {
    const auto c0 = specfun::gegenbauer_all(0, 0.75, 0.3);
    CHECK(c0.size() == 1);
    CHECK(c0[0] == 1.0);
    // nu = 1/2 gives Legendre: P_2(0.5) = -0.125
    const auto c = specfun::gegenbauer_all(2, 0.5, 0.5);
    CHECK(c[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c[2] == doctest::Approx(-0.125).epsilon(1e-14));
    // tau = 1: C_k(1) = binom(k + 2nu - 1, k); nu=1/2, k=3 -> 1
    CHECK(specfun::gegenbauer_at_one(3, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    const auto cone = specfun::gegenbauer_all(6, 1.5, 1.0);
    for (int k = 0; k <= 6; ++k)
        CHECK(cone[k] == doctest::Approx(specfun::gegenbauer_at_one(k, 1.5)).epsilon(1e-13));
}

TEST_CASE("gegenbauer bound |C_k(tau)| <= C_k(1)") {
    for (double nu : {0.5, 1.0, 1.5}) {
        for (double tau : {-0.99, -0.5, 0.1, 0.77}) {
            const auto c = specfun::gegenbauer_all(60, nu, tau);
            for (int k = 0; k <= 60; ++k)
                CHECK(std::fabs(c[k]) <= specfun::gegenbauer_at_one(k, nu) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("bessel_i: closed forms and oracle values") {
    // I_{1/2}(1) = sqrt(2/pi) sinh(1)
    CHECK(specfun::bessel_i(0.5, 1.0) ==
          doctest::Approx(0.93767488824548764672).epsilon(1e-12));
    CHECK(specfun::bessel_i(0.0, 0.0) == 1.0);
    // mpmath series oracle
    CHECK(specfun::bessel_i(0.0, 1.0) ==
          doctest::Approx(1.2660658777520083356).epsilon(1e-13));
    CHECK(specfun::bessel_i(-0.9, 0.5) ==
          doctest::Approx(0.60135800596922520461).epsilon(1e-12));
    // large-argument branch vs mpmath
    CHECK(specfun::bessel_i(0.0, 200.0) ==
          doctest::Approx(2.0396871734097246195e85).epsilon(1e-11));
    CHECK(specfun::bessel_i(1.5, 30.0) ==
          doctest::Approx(752420533212.43152405).epsilon(1e-11));
    CHECK_THROWS_AS((void)specfun::bessel_i(0.3, 800.0), std::overflow_error);
    CHECK_THROWS_AS((void)specfun::bessel_i(-2.0, 1.0), std::domain_error);
}

TEST_CASE("bessel_i: branch agreement in the crossover window") {
    for (double rho : {-1.4, -0.3, 0.0, 0.5, 1.5}) {
        for (double z : {20.0, 23.0, 25.0, 27.0, 30.0}) {
            // series extended past the crossover vs the asymptotic branch
            double term = std::exp(-z + rho * std::log(0.5 * z)) * specfun::rgamma(rho + 1.0);
            double sum = term;
            for (int m = 0; m < 500; ++m) {
                term *= 0.25 * z * z / ((m + 1.0) * (m + 1.0 + rho));
                sum += term;
                if (std::fabs(term) < 1e-19 * std::fabs(sum)) break;
            }
            CHECK(specfun::bessel_i_scaled(rho, z) == doctest::Approx(sum).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_b: series from m=1") {
    CHECK(specfun::bessel_b(0.3, 0.0) == 0.0);
    CHECK(specfun::bessel_b(-1.3, 0.0) == 0.0);
    // rho = -1: leading Taylor coefficient vanishes (1/Gamma(0) = 0), so
    // B_{-1} = I_{-1} = I_1
    CHECK(specfun::bessel_b(-1.0, 0.3) ==
          doctest::Approx(0.15169384000359278033).epsilon(1e-12));
    // definitional consistency B + (z/2)^rho/Gamma(rho+1) = I
    for (double z : {0.5, 2.0, 10.0}) {
        const double lhs = specfun::bessel_b(-0.9, z) +
                           std::pow(0.5 * z, -0.9) * specfun::rgamma(0.1);
        CHECK(lhs == doctest::Approx(specfun::bessel_i(-0.9, z)).epsilon(1e-10));
    }
    // small-z envelope: B_{-s-1/2}(z) = O(z^{2-s-1/2})
    const double s = 0.4;
    for (double z : {1e-3, 1e-2, 1e-1}) {
        const double b = specfun::bessel_b(-s - 0.5, z);
        const double envelope = std::pow(0.5 * z, 2.0 - s - 0.5) / specfun::gamma(2.0 - s + 0.5);
        CHECK(std::fabs(b) <= 1.5 * envelope);
        CHECK(std::fabs(b) >= 0.5 * envelope);
    }
}

TEST_CASE("bessel_k2: closed form, asymptotics, oracle") {
    // K_{1/2}(2) = sqrt(pi/4) e^{-2}
    CHECK(specfun::bessel_k2(0.5, 2.0) ==
          doctest::Approx(0.11993777196806144737).epsilon(1e-12));
    // 60-digit series oracle (mpmath): K_{0.3}(1)
    CHECK(specfun::bessel_k2(0.3, 1.0) ==
          doctest::Approx(0.43507602420880202435).epsilon(1e-10));
    // mpmath: K_{0.7}(12) exercises the asymptotic branch
    CHECK(specfun::bessel_k2(0.7, 12.0) ==
          doctest::Approx(2.2444529055190678503e-6).epsilon(1e-9));
    CHECK(specfun::bessel_k2(0.25, 0.05) ==
          doctest::Approx(3.5877375452640272990).epsilon(1e-10));
    // z -> inf leading behavior
    CHECK(specfun::bessel_k2(0.3, 50.0) * std::exp(50.0) * std::sqrt(100.0 / PI) ==
          doctest::Approx(1.0).epsilon(1e-2));
    CHECK_THROWS_AS((void)specfun::bessel_k2(1e-5, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)specfun::bessel_k2(0.9999, 1.0), std::domain_error);
}

TEST_CASE("bessel_k2 branch agreement near the crossover") {
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double z : {7.5, 8.0, 8.49, 8.51, 9.0, 10.0}) {
            const double refl =
                0.5 * PI * (specfun::bessel_i(-s, z) - specfun::bessel_i(s, z)) /
                specfun::sinpi(s);
            CHECK(specfun::bessel_k2(s, z) == doctest::Approx(refl).epsilon(5e-9));
        }
    }
}

TEST_CASE("hurwitz zeta: classical values and recurrence") {
    CHECK(specfun::hurwitz_zeta(2.0, 1.0) == doctest::Approx(PI * PI / 6.0).epsilon(1e-14));
    CHECK(specfun::hurwitz_zeta(2.0, 0.5) == doctest::Approx(PI * PI / 2.0).epsilon(1e-14));
    // mpmath cross-checks
    CHECK(specfun::hurwitz_zeta(0.3, 0.5) ==
          doctest::Approx(-0.20908381885368533940).epsilon(1e-13));
    CHECK(specfun::hurwitz_zeta(1.7, 0.3) ==
          doctest::Approx(9.3161995804718503834).epsilon(1e-13));
    CHECK(specfun::hurwitz_zeta(-0.5, 0.25) ==
          doctest::Approx(0.090322258761246243874).epsilon(1e-12));
    CHECK(specfun::hurwitz_zeta(2.5, 0.75) ==
          doctest::Approx(2.4915423855119352245).epsilon(1e-13));
    for (double sg : {0.3, 1.7}) {
        for (double x : {0.1, 0.5, 0.9}) {
            const double gap = specfun::hurwitz_zeta(sg, x) - std::pow(x, -sg) -
                               specfun::hurwitz_zeta(sg, x + 1.0);
            CHECK(std::fabs(gap) <= 1e-12);
        }
    }
    CHECK_THROWS_AS((void)specfun::hurwitz_zeta(1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)specfun::hurwitz_zeta(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("surface area") {
    CHECK(specfun::surface_area(2) == doctest::Approx(2.0 * PI).epsilon(1e-14));
    CHECK(specfun::surface_area(3) == doctest::Approx(4.0 * PI).epsilon(1e-14));
    CHECK(specfun::surface_area(4) == doctest::Approx(2.0 * PI * PI).epsilon(1e-14));
}

TEST_CASE("gamma identities on a grid (duplication, reflection)") {
    for (double z = 0.05; z < 12.0; z += 0.6180339887) {
        const double lhs = specfun::gamma(2.0 * z) * std::sqrt(PI);
        const double rhs =
            std::pow(2.0, 2.0 * z - 1.0) * specfun::gamma(z) * specfun::gamma(z + 0.5);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    for (double z = 0.03; z < 0.5; z += 0.11) {
        const double lhs = specfun::gamma(0.5 + z) * specfun::gamma(0.5 - z) * specfun::cospi(z);
        CHECK(lhs == doctest::Approx(PI).epsilon(1e-12));
    }
}
