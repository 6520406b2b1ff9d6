// spherefrac command-line front end: kernels, operator application,
// verification suites, extension fields and circle kernels as CSV/JSON.
#include <CLI11.hpp>
#include <json.hpp>

#include "spherefrac/circle.hpp"
#include "spherefrac/errors.hpp"
#include "spherefrac/extension.hpp"
#include "spherefrac/fracops.hpp"
#include "spherefrac/semigroups.hpp"
#include "spherefrac/verify.hpp"
#include "spherefrac/zonal.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

using namespace spherefrac;

namespace {

int thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPHEREFRAC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(hw);
}

// deterministic parallel map: results land by index regardless of scheduling
std::vector<double> parallel_map(int count, const std::function<double(int)>& f) {
    std::vector<double> out(count);
    const int nt = std::min(thread_cap(), count);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = f(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string path; // empty: stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::invalid_argument("cannot open output file: " + path);
            f << text;
        }
    }
};

ZonalCoeffs load_coeffs(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return zonal::from_json(ss.str());
}

struct Config {
    std::string command;
    int n = 3;
    double s = 0.5;
    double t = 0.2;  // Heat kernel time
    double r = 0.5;  // Poisson kernel radius
    std::string kernel = "Kpos";
    std::string route = "spectral";
    std::string mode = "pos";
    double d_min = 1e-2, d_max = 1.0;
    double x_min = 0.01, x_max = 0.99;
    int points = 64;
    std::string input, output, format = "csv";
    double tol = 1.0;
    unsigned seed = 12345;
    std::vector<std::string> suite;
};

int cmd_kernel(const Config& cfg) {
    SphereDim dim(cfg.n);
    std::function<double(double)> eval;
    if (cfg.kernel == "Kpos")
        eval = [&](double tau) { return fracops::kernel_Ks(dim, cfg.s, tau); };
    else if (cfg.kernel == "Kneg-zeta")
        eval = [&](double tau) { return fracops::kernel_Kneg_zeta(dim, cfg.s, tau); };
    else if (cfg.kernel == "Kneg-heat")
        eval = [&](double tau) { return fracops::kernel_Kneg_heat(dim, cfg.s, tau); };
    else if (cfg.kernel == "L2s")
        eval = [&](double tau) { return fracops::kernel_L2s(dim, 2.0 * cfg.s, tau); };
    else if (cfg.kernel == "Ss")
        eval = [&](double tau) { return fracops::kernel_Ss(dim, cfg.s, tau); };
    else if (cfg.kernel == "Heat")
        eval = [&](double tau) { return semigroups::heat_kernel({cfg.t, dim}, tau); };
    else if (cfg.kernel == "Poisson")
        eval = [&](double tau) { return semigroups::poisson_kernel({cfg.r, dim}, tau); };
    else
        throw std::invalid_argument("unknown kernel label: " + cfg.kernel);

    std::vector<double> ds(cfg.points);
    for (int i = 0; i < cfg.points; ++i)
        ds[i] = cfg.d_min *
                std::pow(cfg.d_max / cfg.d_min, i / std::max(1.0, cfg.points - 1.0));
    const auto vals = parallel_map(cfg.points, [&](int i) { return eval(std::cos(ds[i])); });

    std::ostringstream os;
    os << "# spherefrac kernel=" << cfg.kernel << " n=" << cfg.n << " s=" << fmt(cfg.s)
       << " t=" << fmt(cfg.t) << " r=" << fmt(cfg.r) << " d-min=" << fmt(cfg.d_min)
       << " d-max=" << fmt(cfg.d_max) << " points=" << cfg.points << " seed=" << cfg.seed
       << "\n";
    os << "d,tau,value\n";
    for (int i = 0; i < cfg.points; ++i)
        os << fmt(ds[i]) << "," << fmt(std::cos(ds[i])) << "," << fmt(vals[i]) << "\n";
    Output{cfg.output}.write(os.str());
    return 0;
}

int cmd_apply(const Config& cfg) {
    if (cfg.input.empty()) throw std::invalid_argument("apply: --input required");
    auto c = load_coeffs(cfg.input);
    nlohmann::json j;
    j["command"] = "apply";
    j["route"] = cfg.route;
    j["mode"] = cfg.mode;
    j["s"] = cfg.s;
    j["n"] = c.dim.n;
    j["seed"] = cfg.seed;
    double pole = 0.0;
    if (cfg.route == "spectral") {
        fracops::FracOrder::Mode m;
        if (cfg.mode == "pos") m = fracops::FracOrder::Mode::positive;
        else if (cfg.mode == "neg") m = fracops::FracOrder::Mode::negative;
        else if (cfg.mode == "dtn") m = fracops::FracOrder::Mode::dtn;
        else throw std::invalid_argument("apply: mode must be pos|neg|dtn");
        const auto out = fracops::spectral_frac(c, {cfg.s, m});
        pole = zonal::synthesize(out, 1.0);
        j["coeffs"] = out.a;
    } else if (cfg.route == "kernel") {
        if (cfg.mode == "pos") pole = fracops::apply_frac_at_pole(c, cfg.s);
        else if (cfg.mode == "neg") pole = fracops::apply_neg_at_pole(c, cfg.s);
        else if (cfg.mode == "dtn") pole = fracops::apply_L2s_at_pole(c, 2.0 * cfg.s);
        else throw std::invalid_argument("apply: mode must be pos|neg|dtn");
    } else {
        throw std::invalid_argument("apply: route must be spectral|kernel");
    }
    j["pole_value"] = pole;
    Output{cfg.output}.write(j.dump(2) + "\n");
    return 0;
}

int cmd_extend(const Config& cfg) {
    if (cfg.input.empty()) throw std::invalid_argument("extend: --input required");
    auto c = load_coeffs(cfg.input);
    std::vector<double> ys(cfg.points), taus;
    for (int i = 0; i < cfg.points; ++i)
        ys[i] = cfg.x_min + (cfg.x_max - cfg.x_min) * i / std::max(1.0, cfg.points - 1.0);
    const int ntau = 33;
    for (int i = 0; i < ntau; ++i) taus.push_back(-1.0 + 1.999 * i / (ntau - 1.0));

    std::ostringstream os;
    os << "# spherefrac extend n=" << c.dim.n << " s=" << fmt(cfg.s) << " y-min="
       << fmt(cfg.x_min) << " y-max=" << fmt(cfg.x_max) << " points=" << cfg.points
       << " seed=" << cfg.seed << "\n";
    os << "tau,y,U\n";
    for (double y : ys) {
        const auto e = extension::extend(c, cfg.s, y);
        for (double tau : taus)
            os << fmt(tau) << "," << fmt(y) << "," << fmt(zonal::synthesize(e, tau)) << "\n";
    }
    Output{cfg.output}.write(os.str());
    return 0;
}

int cmd_circle(const Config& cfg) {
    std::vector<double> xs(cfg.points);
    for (int i = 0; i < cfg.points; ++i)
        xs[i] = cfg.x_min + (cfg.x_max - cfg.x_min) * i / std::max(1.0, cfg.points - 1.0);
    const bool neg = cfg.kernel != "pos";
    const auto vals = parallel_map(cfg.points, [&](int i) {
        return neg ? circle::kernel_neg({cfg.s, xs[i]}) : circle::kernel_pos({cfg.s, xs[i]});
    });
    std::ostringstream os;
    os << "# spherefrac circle kernel=" << (neg ? "neg" : "pos") << " sigma=" << fmt(cfg.s)
       << " x-min=" << fmt(cfg.x_min) << " x-max=" << fmt(cfg.x_max)
       << " points=" << cfg.points << "\n";
    os << "x,value\n";
    for (int i = 0; i < cfg.points; ++i) os << fmt(xs[i]) << "," << fmt(vals[i]) << "\n";
    Output{cfg.output}.write(os.str());
    return 0;
}

int cmd_verify(const Config& cfg) {
    const auto results = verify::run_all(cfg.tol, cfg.seed, cfg.suite);
    nlohmann::json j;
    j["command"] = "verify";
    j["tol_scale"] = cfg.tol;
    j["seed"] = cfg.seed;
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["worst"] = r.worst;
        e["tolerance"] = r.tolerance;
        e["seconds"] = r.seconds;
        e["detail"] = r.detail;
        j["criteria"].push_back(e);
        all = all && r.pass;
    }
    j["pass"] = all;
    Output{cfg.output}.write(j.dump(2) + "\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Laplacians on the sphere: kernels, operators, verification"};
    Config cfg;
    app.add_option("--command", cfg.command, "kernel|apply|verify|extend|circle")->required();
    app.add_option("--n", cfg.n, "sphere dimension parameter (S^{n-1}), n >= 3");
    app.add_option("--s", cfg.s, "fractional exponent (sigma for circle kernels)");
    app.add_option("--t", cfg.t, "heat kernel time (kernel=Heat)");
    app.add_option("--r", cfg.r, "Poisson kernel radius (kernel=Poisson)");
    app.add_option("--kernel", cfg.kernel,
                   "Kpos|Kneg-zeta|Kneg-heat|L2s|Ss|Heat|Poisson (circle: neg|pos)");
    app.add_option("--route", cfg.route, "apply: spectral|kernel");
    app.add_option("--mode", cfg.mode, "apply: pos|neg|dtn");
    app.add_option("--d-min", cfg.d_min, "smallest geodesic distance");
    app.add_option("--d-max", cfg.d_max, "largest geodesic distance");
    app.add_option("--x-min", cfg.x_min, "left end of the x (or height) grid");
    app.add_option("--x-max", cfg.x_max, "right end of the x (or height) grid");
    app.add_option("--points", cfg.points, "grid size");
    app.add_option("--input", cfg.input, "coefficient JSON file");
    app.add_option("--output", cfg.output, "output path (default stdout)");
    app.add_option("--format", cfg.format, "csv|json (fixed per command)");
    app.add_option("--tol", cfg.tol, "verify: tolerance scale (0.1 tightens 10x)");
    app.add_option("--seed", cfg.seed, "seed for random band-limited test inputs");
    app.add_option("--suite", cfg.suite, "verify: run only the named suites");

    try {
        app.parse(argc, argv);
        if (cfg.command == "kernel") return cmd_kernel(cfg);
        if (cfg.command == "apply") return cmd_apply(cfg);
        if (cfg.command == "extend") return cmd_extend(cfg);
        if (cfg.command == "circle") return cmd_circle(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        throw std::invalid_argument("unknown command: " + cfg.command);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ToleranceNotMet& e) {
        std::cerr << "tolerance failure: " << e.what()
                  << " (best=" << e.best_estimate << ", err=" << e.error_estimate << ")\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
