#pragma once
// Verification harness: runs named groups of checks over the kernel, the
// example surfaces, and the moving-frame case, and renders the results as
// deterministic text or JSON.

#include <string>
#include <vector>

namespace nksl2 {

struct SuiteConfig {
    double tol = 1e-8;        // residual tolerance for sampled float checks
    double curv_tol = 1e-4;   // curvature tolerance; overrides per-surface
    bool curv_tol_set = false;
    double step = 1e-3;       // finite-difference step
    int grid = 5;             // surfaces are sampled on a grid x grid lattice
    unsigned long long seed = 42;
    int samples = 200;        // random tangents for the sampled identities
    std::string format = "text";
};

struct CheckRecord {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool informational = false;  // catalogued-discrepancy notes, never failing
    std::string witness;
};

struct SuiteResult {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    bool pass = true;
    double elapsed_ms = 0.0;
};

SuiteResult run_structure_suite(const SuiteConfig& cfg);
SuiteResult run_surface_suite(const std::string& name, const SuiteConfig& cfg);
SuiteResult run_frame_case_suite(const SuiteConfig& cfg);
SuiteResult run_all_suites(const SuiteConfig& cfg);

// shortest decimal string that round-trips to the same double
std::string format_double(double v);

std::string render_text(const SuiteResult& r);
std::string render_json(const SuiteResult& r);
std::string render(const SuiteResult& r);  // dispatches on config.format

} // namespace nksl2
