#include "spherefrac/quadrature.hpp"
#include "spherefrac/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spherefrac::quad {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
}

const GaussLegendreRule& gauss_legendre(int N) {
    if (N < 1) throw std::invalid_argument("gauss_legendre: N >= 1 required");
    if (N > 512) throw std::invalid_argument("gauss_legendre: size cap N <= 512 exceeded");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    GaussLegendreRule rule;
    rule.nodes.resize(N);
    rule.weights.resize(N);
    const int m = (N + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_N from the Chebyshev-like initial guess
        double x = std::cos(PI * (i + 0.75) / (N + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= N; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = N * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) {
                // one more polish step
                double q0 = 1.0, q1 = x;
                for (int k = 2; k <= N; ++k) {
                    const double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                pp = N * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / pp;
                break;
            }
        }
        rule.nodes[i] = -x;
        rule.nodes[N - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[N - 1 - i] = w;
    }
    if (N % 2 == 1) rule.nodes[N / 2] = 0.0;
    return cache.emplace(N, std::move(rule)).first->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int N) {
    const auto& r = gauss_legendre(N);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

namespace {

// One tanh-sinh node: abscissae stored as distance to the nearer endpoint.
struct TsNode {
    double offset; // in (0, 1], fraction of the half length, distance from endpoint
    double weight; // w * h absorbed later
    int side;      // -1: measured from a; +1: measured from b; 0: midpoint
};

// evaluate nodes at u = j*h for odd j only when refining (all j at first level)
void ts_collect(double h, bool odd_only, std::vector<TsNode>& out) {
    const double umax = 6.5;
    for (int j = 0;; ++j) {
        const double u = j * h;
        if (u > umax) break;
        if (odd_only && j % 2 == 0) continue;
        const double su = std::sinh(u);
        const double q = std::exp(-PI * su); // in (0,1]
        const double denom = 1.0 + q;
        const double offset = 2.0 * q / denom;              // 1 - tanh((pi/2) sinh u)
        const double w = PI * std::cosh(u) * 2.0 * q / (denom * denom);
        if (!(offset > 5e-290) || !(w > 5e-290)) break;
        if (j == 0) {
            out.push_back({1.0, w, 0}); // x = midpoint
        } else {
            out.push_back({offset, w, -1});
            out.push_back({offset, w, +1});
        }
    }
}

double ts_eval(const std::function<double(double)>& f, double a, double b,
               const std::vector<TsNode>& nodes, double h) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (const auto& nd : nodes) {
        double x;
        if (nd.side == 0) x = mid;
        else if (nd.side < 0) x = a + half * nd.offset;
        else x = b - half * nd.offset;
        const double fx = f(x);
        if (std::isfinite(fx)) s += nd.weight * fx;
    }
    return s * h * half;
}

} // namespace

IntegralResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, double rel_tol, int max_levels) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh: b > a required");
    if (max_levels > 14) max_levels = 14;
    double h = 1.0;
    std::vector<TsNode> nodes;
    ts_collect(h, false, nodes);
    double prev = ts_eval(f, a, b, nodes, h);
    double cur = prev, diff = std::fabs(prev);
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        std::vector<TsNode> extra;
        ts_collect(h, true, extra);
        const double newpart = ts_eval(f, a, b, extra, h);
        cur = 0.5 * prev + newpart;
        diff = std::fabs(cur - prev);
        if (level >= 3 && diff <= std::max(abs_tol, rel_tol * std::fabs(cur)))
            return {cur, diff + 1e-16 * std::fabs(cur)};
        prev = cur;
    }
    throw ToleranceNotMet("tanh_sinh: tolerance not met", cur, diff);
}

double tanh_sinh_fixed(const std::function<double(double)>& f, double a, double b, int level) {
    const double h = std::pow(0.5, level);
    std::vector<TsNode> nodes;
    ts_collect(h, false, nodes);
    return ts_eval(f, a, b, nodes, h);
}

IntegralResult exp_tail(const std::function<double(double)>& f, double T, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("exp_tail: beta > 0 required");
    // panels of width 4/beta until the bound alone is negligible
    IntegralResult res;
    double lo = T;
    const double width = 4.0 / beta;
    double last = 0.0;
    for (int p = 0; p < 24; ++p) {
        const double hi = lo + width;
        const double coarse = gl_integrate(f, lo, hi, 16);
        const double fine = gl_integrate(f, lo, hi, 32);
        res.value += fine;
        res.error_estimate += std::fabs(fine - coarse);
        last = std::fabs(fine);
        lo = hi;
        if (last < 1e-300) break;
        if (p >= 2 && last < 1e-16 * std::fabs(res.value)) break;
    }
    res.error_estimate += last; // remaining tail bound (decay at least e^{-4} per panel)
    return res;
}

IntegralResult integrate_time(const std::function<double(double)>& f, IntegrandMeta meta,
                              QuadratureSpec spec) {
    if (!(meta.singular_exponent_at_zero > -1.0))
        throw std::invalid_argument("integrate_time: singular exponent must exceed -1");
    if (!(meta.decay_rate > 0.0))
        throw std::invalid_argument("integrate_time: decay rate must be positive");
    if (!(spec.abs_tol > 0.0 && spec.abs_tol < 1.0 && spec.rel_tol > 0.0 && spec.rel_tol < 1.0))
        throw std::invalid_argument("integrate_time: tolerances must lie in (0,1)");
    if (spec.max_levels > 14) spec.max_levels = 14;

    const double split = spec.split_point;
    IntegralResult near = tanh_sinh(f, 0.0, split, 0.5 * spec.abs_tol, 0.5 * spec.rel_tol,
                                    spec.max_levels);
    IntegralResult res = near;

    const double scale = std::max({1.0, std::fabs(near.value), std::fabs(f(split)) / meta.decay_rate});
    const double T = std::max(split, (1.0 / meta.decay_rate) * std::log(scale / spec.abs_tol));
    double lo = split;
    int panel = 0;
    while (lo < T && panel < 60) {
        const double hi = std::min(2.0 * lo, T);
        const double coarse = gl_integrate(f, lo, hi, 24);
        const double fine = gl_integrate(f, lo, hi, 48);
        res.value += fine;
        res.error_estimate += std::fabs(fine - coarse);
        lo = hi;
        ++panel;
    }
    res.error_estimate += std::fabs(f(T)) / meta.decay_rate; // tail bound
    if (res.error_estimate > std::max(spec.abs_tol, spec.rel_tol * std::fabs(res.value)) * 20.0)
        throw ToleranceNotMet("integrate_time: tolerance not met", res.value, res.error_estimate);
    return res;
}

} // namespace spherefrac::quad
