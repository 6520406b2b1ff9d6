#pragma once

#include "spherefrac/zonal.hpp"

namespace spherefrac::extension {

/// Per-mode multiplier m_k(y) = 2^{1-s}/Gamma(s) (y sqrt(lambda_k))^s K_s(y sqrt(lambda_k)),
/// with m_0(y) = 1 (the lambda -> 0 limit).
double multiplier(double s, double lambda, double y);

/// The extension U(., y): a_k -> m_k(y) a_k.
ZonalCoeffs extend(const ZonalCoeffs& c, double s, double y);

/// Same through the heat-subordination integral
/// (y^{2s}/(4^s Gamma(s))) \int_0^inf e^{-y^2/(4t)} e^{-t lambda_k} dt / t^{1+s}.
ZonalCoeffs extend_via_heat(const ZonalCoeffs& c, double s, double y,
                            const quad::QuadratureSpec& spec = {});

/// The extension over a ladder of heights, multipliers tabulated per (k, y).
struct ExtensionField {
    ZonalCoeffs base;
    double s;
    std::vector<double> heights;
    std::vector<std::vector<double>> multipliers; // [height][k]
};

ExtensionField make_field(const ZonalCoeffs& c, double s, std::vector<double> heights);

/// Weighted Neumann derivative at the boundary versus its spectral target
/// Gamma(1-s)/(4^{s-1/2} Gamma(s)) (-Delta)^s u(pole).
struct TraceReport {
    double neumann_estimate = 0.0;
    double target = 0.0;
    double rel_error = 0.0;
    bool monotone = true; // extrapolation differences decreased along the ladder
};

/// Centered differences on a decreasing ladder of heights plus Richardson
/// extrapolation in the exponents {2-2s, 2}.
TraceReport neumann_trace(const ZonalCoeffs& c, double s, const std::vector<double>& y_ladder);

struct PdeReport {
    double max_residual = 0.0;
    bool grid_warning = false;
};

/// Residual of Delta_S U + (1-2s)/y dU/dy + d2U/dy2 over a (tau, y) grid;
/// the sphere part is spectral, the y-derivatives are 4th-order differences.
PdeReport pde_residual(const ZonalCoeffs& c, double s, const std::vector<double>& tau_grid,
                       const std::vector<double>& y_grid);

/// Extension built from Neumann data f (mean zero): the boundary value is
/// (-Delta)^{-s} f. Coefficients lambda_k^{-s} m_k(y) a_k via the heat route.
ZonalCoeffs neumann_problem_negative(const ZonalCoeffs& f, double s, double y,
                                     const quad::QuadratureSpec& spec = {});

} // namespace spherefrac::extension
