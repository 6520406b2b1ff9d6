#pragma once

#include <stdexcept>
#include <string>

namespace spherefrac {

/// Thrown when an adaptive integration cannot reach the requested tolerance.
/// Carries the best value obtained and the estimated error of that value.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, double best, double err_est)
        : std::runtime_error(what), best_estimate(best), error_estimate(err_est) {}

    double best_estimate;
    double error_estimate;
};

} // namespace spherefrac
