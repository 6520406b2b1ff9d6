#include <doctest.h>

#include "spherefrac/quadrature.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <stdexcept>

using namespace spherefrac;

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
}

TEST_CASE("gauss_legendre: classical rules") {
    const auto& r1 = quad::gauss_legendre(1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0));
    const auto& r2 = quad::gauss_legendre(2);
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)quad::gauss_legendre(0), std::invalid_argument);
    CHECK_THROWS_AS((void)quad::gauss_legendre(513), std::invalid_argument);
}

TEST_CASE("gauss_legendre: symmetry, positivity, weight sum") {
    for (int N : {3, 16, 64, 257, 512}) {
        const auto& r = quad::gauss_legendre(N);
        double sum = 0.0;
        for (int i = 0; i < N; ++i) {
            CHECK(r.weights[i] > 0.0);
            CHECK(r.nodes[i] == doctest::Approx(-r.nodes[N - 1 - i]).epsilon(1e-14));
            sum += r.weights[i];
        }
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("gauss_legendre: degree-5 exactness with N=3") {
    auto f = [](double x) { return x * x * x * x; };
    CHECK(quad::gl_integrate(f, -1.0, 1.0, 3) == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("tanh_sinh: endpoint singularity") {
    // \int_0^1 x^{-1/2} dx = 2
    auto res = quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(res.value == doctest::Approx(2.0).epsilon(1e-12));
    // \int_0^1 log(x) dx = -1
    auto res2 = quad::tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(res2.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("integrate_time: the three contract examples") {
    // Gamma(1) = 1
    auto r1 = quad::integrate_time([](double t) { return std::exp(-t); }, {0.0, 1.0});
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));
    // Gamma(1/2) = sqrt(pi)
    auto r2 = quad::integrate_time(
        [](double t) { return std::exp(-t) / std::sqrt(t); }, {-0.5, 1.0});
    CHECK(r2.value == doctest::Approx(std::sqrt(PI)).epsilon(1e-10));
    // lambda^s identity with s = 1/2: Gamma(-1/2)(sqrt(2)-1) = -2 sqrt(pi)(sqrt(2)-1)
    auto r3 = quad::integrate_time(
        [](double t) { return (std::exp(-2.0 * t) - std::exp(-t)) / std::pow(t, 1.5); },
        {-0.5, 1.0});
    const double want = -2.0 * std::sqrt(PI) * (std::sqrt(2.0) - 1.0);
    CHECK(r3.value == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::fabs(r3.value - want) <= r3.error_estimate + 1e-9);
}

TEST_CASE("integrate_time: linearity") {
    auto f = [](double t) { return std::exp(-t) * std::cos(t); };
    auto g = [](double t) { return std::exp(-2.0 * t) / std::sqrt(t + 1e-300); };
    auto rf = quad::integrate_time(f, {0.0, 1.0});
    auto rg = quad::integrate_time(g, {-0.5, 2.0});
    auto rc = quad::integrate_time(
        [&](double t) { return 3.0 * f(t) - 2.0 * g(t); }, {-0.5, 1.0});
    CHECK(rc.value == doctest::Approx(3.0 * rf.value - 2.0 * rg.value)
                          .epsilon(1e-9));
}

TEST_CASE("integrate_time: parameter validation") {
    CHECK_THROWS_AS(
        (void)quad::integrate_time([](double) { return 1.0; }, {-1.5, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)quad::integrate_time([](double t) { return std::exp(-t); }, {0.0, -1.0}),
        std::invalid_argument);
}

TEST_CASE("exp_tail matches analytic tails") {
    // \int_2^inf e^{-3t} dt
    auto r = quad::exp_tail([](double t) { return std::exp(-3.0 * t); }, 2.0, 3.0);
    CHECK(r.value == doctest::Approx(std::exp(-6.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("halving tolerances changes results within the reported estimate") {
    auto f = [](double t) { return std::exp(-1.3 * t) * std::pow(t, -0.3); };
    quad::QuadratureSpec loose;
    loose.abs_tol = 1e-8;
    loose.rel_tol = 1e-8;
    quad::QuadratureSpec tight;
    tight.abs_tol = 5e-12;
    tight.rel_tol = 5e-12;
    auto rl = quad::integrate_time(f, {-0.3, 1.3}, loose);
    auto rt = quad::integrate_time(f, {-0.3, 1.3}, tight);
    CHECK(std::fabs(rl.value - rt.value) <= rl.error_estimate + 1e-12);
}
