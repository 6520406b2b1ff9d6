#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spherefrac::verify {

struct CriterionResult {
    std::string id;      // C1 .. C9
    std::string name;    // suite name usable with --suite
    bool pass = false;
    double worst = 0.0;  // worst residual/deviation observed
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail;
};

/// Run the acceptance criteria. `only` filters by suite name or id (empty:
/// all); `tol_scale` < 1 tightens every tolerance (e.g. 0.1 for a 10x
/// tightened run); `seed` drives the random band-limited inputs.
std::vector<CriterionResult> run_all(double tol_scale = 1.0, std::uint32_t seed = 12345,
                                     const std::vector<std::string>& only = {});

} // namespace spherefrac::verify
