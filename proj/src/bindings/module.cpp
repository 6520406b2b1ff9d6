#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spherefrac/circle.hpp"
#include "spherefrac/extension.hpp"
#include "spherefrac/fracops.hpp"
#include "spherefrac/semigroups.hpp"
#include "spherefrac/specfun.hpp"
#include "spherefrac/verify.hpp"
#include "spherefrac/zonal.hpp"

namespace py = pybind11;
using namespace spherefrac;

namespace {
ZonalCoeffs make_coeffs(int n, const std::vector<double>& a) {
    return {SphereDim(n), a};
}
} // namespace

PYBIND11_MODULE(_spherefrac, m) {
    m.doc() = "Fractional Laplacians on the sphere: spectral and kernel routes, "
              "semigroups, extension problem, circle kernels.";

    auto sf = m.def_submodule("specfun");
    sf.def("gamma", &specfun::gamma);
    sf.def("hurwitz_zeta", &specfun::hurwitz_zeta);
    sf.def("gegenbauer_all", &specfun::gegenbauer_all);
    sf.def("bessel_i", &specfun::bessel_i);
    sf.def("bessel_b", &specfun::bessel_b);
    sf.def("bessel_k2", &specfun::bessel_k2);
    sf.def("surface_area", &specfun::surface_area);

    m.def("eigenvalue", [](int n, int k) { return zonal::eigenvalue(SphereDim(n), k); });
    m.def("dim_sh", [](int n, int k) { return zonal::dim_sh(SphereDim(n), k); });
    m.def("zonal_harmonic",
          [](int n, int k, double tau) { return zonal::zonal_harmonic(SphereDim(n), k, tau); });
    m.def("synthesize", [](int n, const std::vector<double>& a, double tau) {
        return zonal::synthesize(make_coeffs(n, a), tau);
    });
    m.def("project", [](int n, const std::function<double(double)>& g, int K) {
        return zonal::project(g, SphereDim(n), K).a;
    });

    m.def("poisson_kernel", [](int n, double r, double tau) {
        return semigroups::poisson_kernel({r, SphereDim(n)}, tau);
    });
    m.def("heat_kernel", [](int n, double t, double tau) {
        return semigroups::heat_kernel({t, SphereDim(n)}, tau);
    });

    m.def("spectral_frac",
          [](int n, const std::vector<double>& a, double s, const std::string& mode) {
              fracops::FracOrder::Mode mm = fracops::FracOrder::Mode::positive;
              if (mode == "neg") mm = fracops::FracOrder::Mode::negative;
              else if (mode == "dtn") mm = fracops::FracOrder::Mode::dtn;
              return fracops::spectral_frac(make_coeffs(n, a), {s, mm}).a;
          });
    m.def("minak_identity_rhs", [](int k, double nu, double s) {
        return fracops::minak_identity_rhs(k, nu, s);
    });
    m.def("kernel_value", [](const std::string& label, int n, double s, double tau) {
        SphereDim dim(n);
        if (label == "Kpos") return fracops::kernel_Ks(dim, s, tau);
        if (label == "Kneg-zeta") return fracops::kernel_Kneg_zeta(dim, s, tau);
        if (label == "Kneg-heat") return fracops::kernel_Kneg_heat(dim, s, tau);
        if (label == "L2s") return fracops::kernel_L2s(dim, 2.0 * s, tau);
        if (label == "Ss") return fracops::kernel_Ss(dim, s, tau);
        throw std::invalid_argument("unknown kernel label: " + label);
    });
    m.def("apply_frac_at_pole", [](int n, const std::vector<double>& a, double s) {
        return fracops::apply_frac_at_pole(make_coeffs(n, a), s);
    });
    m.def("apply_neg_at_pole", [](int n, const std::vector<double>& a, double s) {
        return fracops::apply_neg_at_pole(make_coeffs(n, a), s);
    });
    m.def("decompose", [](int n, const std::vector<double>& a, double s) {
        const auto rep = fracops::decompose(make_coeffs(n, a), s);
        return py::make_tuple(rep.lhs, rep.dtn_part, rep.smoothing_part, rep.residual);
    });

    m.def("extend", [](int n, const std::vector<double>& a, double s, double y) {
        return extension::extend(make_coeffs(n, a), s, y).a;
    });
    m.def("extension_multiplier", &extension::multiplier);
    m.def("neumann_trace",
          [](int n, const std::vector<double>& a, double s, const std::vector<double>& ladder) {
              const auto rep = extension::neumann_trace(make_coeffs(n, a), s, ladder);
              return py::make_tuple(rep.neumann_estimate, rep.target, rep.rel_error);
          });

    auto circ = m.def_submodule("circle");
    circ.def("kernel_neg", [](double sigma, double x) { return circle::kernel_neg({sigma, x}); });
    circ.def("kernel_pos", [](double sigma, double x) { return circle::kernel_pos({sigma, x}); });
    circ.def("theta_heat_kernel", &circle::theta_heat_kernel);
    circ.def("fine_H", [](double x, double w) { return circle::fine_H(x, w); });

    m.def("verify", [](double tol_scale, unsigned seed, const std::vector<std::string>& only) {
        py::list out;
        for (const auto& r : verify::run_all(tol_scale, seed, only)) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["worst"] = r.worst;
            d["tolerance"] = r.tolerance;
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("tol_scale") = 1.0, py::arg("seed") = 12345,
       py::arg("only") = std::vector<std::string>{});
}
