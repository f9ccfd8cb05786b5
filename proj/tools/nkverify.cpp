#include "nksl2/report.hpp"
#include "nksl2/surfaces.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"verification harness for the nearly Kahler product-group kernel"};
    app.require_subcommand(0, 1);

    nksl2::SuiteConfig cfg;
    app.add_option("--tol", cfg.tol, "residual tolerance for sampled float checks");
    auto* ct = app.add_option("--curv-tol", cfg.curv_tol,
                              "curvature tolerance (overrides per-surface defaults)");
    app.add_option("--step", cfg.step, "finite-difference step");
    app.add_option("--grid", cfg.grid, "surface sample grid size");
    app.add_option("--seed", cfg.seed, "seed for the sampled identities");
    app.add_option("--samples", cfg.samples, "random tangents per sampled check");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* structure =
        app.add_subcommand("structure", "left-invariant frame and tensor identities");
    auto* surface = app.add_subcommand("surface", "checks for one catalogued surface");
    std::string surf_name;
    surface->add_option("name", surf_name, "registered surface name")->required();
    auto* frame = app.add_subcommand("frame-case", "moving-frame polynomial analysis");
    auto* all = app.add_subcommand("all", "run every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.curv_tol_set = ct->count() > 0;

    try {
        nksl2::SuiteResult res;
        if (structure->parsed()) {
            res = nksl2::run_structure_suite(cfg);
        } else if (surface->parsed()) {
            res = nksl2::run_surface_suite(surf_name, cfg);
        } else if (frame->parsed()) {
            res = nksl2::run_frame_case_suite(cfg);
        } else if (all->parsed()) {
            res = nksl2::run_all_suites(cfg);
        } else {
            std::cerr << app.help();
            return 2;
        }
        std::cout << nksl2::render(res);
        return res.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "registered surfaces:";
        for (const auto& n : nksl2::surface_registry()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
