// Command line front end: identifies customer topological paths in a
// low-voltage distribution network from static GIS data.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "tpi/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Customer topological path identification for LV distribution networks"};
    app.set_config("--config", "", "Flat key = value file mirroring the flags; flags win");

    tpi::RunConfig cfg;
    std::string network, out_solution, out_geojson, out_svg, out_model, out_diagnostics;
    double time_limit = 0.0;
    std::uint64_t node_limit = 0;

    app.add_option("--network", network, "Input network (.geojson, .json or .csv)")->required();
    app.add_option("--max-paths", cfg.search.max_paths, "Candidate paths per customer (N)")
        ->capture_default_str();
    app.add_option("--max-distance", cfg.search.max_connection_distance,
                   "Maximum connection distance in meters (D)")
        ->required();
    app.add_option("--max-length", cfg.search.max_path_length, "Maximum path length in meters (L)")
        ->required();
    app.add_option("--alpha", cfg.search.alpha, "Weight scaling factor applied to completed paths")
        ->capture_default_str();
    app.add_option("--lambda", cfg.lambda,
                   "Assignment penalty: a rational like 1, 0.04 or 1/25, or 'auto' for 1/(|R|*|T|+1)")
        ->capture_default_str();
    app.add_option("--k-nearest", cfg.k_nearest, "Neighbors consulted for junction suggestions")
        ->capture_default_str();
    app.add_flag("--lonlat", cfg.lonlat, "Treat input coordinates as lon/lat degrees");
    app.add_option("--node-limit", node_limit, "Abort the solve after this many search nodes");
    app.add_option("--time-limit", time_limit, "Abort the solve after this many seconds");
    app.add_option("--out", out_solution, "Write the solution JSON here");
    app.add_option("--geojson-out", out_geojson, "Write the colored GeoJSON copy here");
    app.add_option("--svg-out", out_svg, "Write an SVG rendering here");
    app.add_option("--lp-out", out_model, "Write the model here (.mps selects MPS, otherwise LP text)");
    app.add_option("--diagnostics-out", out_diagnostics, "Write the diagnostic report JSON here");

    CLI11_PARSE(app, argc, argv);

    cfg.network_path = network;
    cfg.out_solution = out_solution;
    cfg.out_geojson = out_geojson;
    cfg.out_svg = out_svg;
    cfg.out_model = out_model;
    cfg.out_diagnostics = out_diagnostics;
    if (node_limit > 0) cfg.limits.max_nodes = node_limit;
    if (time_limit > 0) cfg.limits.max_seconds = time_limit;

    return tpi::run_pipeline(cfg, std::cout, std::cerr);
}
