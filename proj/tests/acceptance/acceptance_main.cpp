// Acceptance suite: runs every criterion and prints one pass/fail line each.
#include "spherefrac/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    double tol_scale = 1.0;
    std::vector<std::string> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--tol-scale") == 0 && i + 1 < argc)
            tol_scale = std::atof(argv[++i]);
        else
            only.push_back(argv[i]);
    }
    const auto results = spherefrac::verify::run_all(tol_scale, 12345, only);
    bool all_pass = true;
    double total = 0.0;
    for (const auto& r : results) {
        std::printf("%s %s %-14s worst=%.3e tol=%.3e (%.1fs) %s\n",
                    r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(), r.worst,
                    r.tolerance, r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
        total += r.seconds;
    }
    std::printf("%s: %zu criteria in %.1fs\n", all_pass ? "ALL PASS" : "FAILURES", results.size(),
                total);
    return all_pass ? 0 : 1;
}
