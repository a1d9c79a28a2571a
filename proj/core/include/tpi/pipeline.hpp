#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tpi/io.hpp"
#include "tpi/path_generation.hpp"

namespace tpi {

/// Parses "1", "0.04" or "1/25" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

struct RunConfig {
    std::filesystem::path network_path;
    SearchConfig search;
    /// "auto" resolves to 1 / (|R| * |T| + 1) once the network is known.
    std::string lambda = "auto";
    SolveLimits limits;
    int k_nearest = 3;
    bool lonlat = false;

    // output targets; empty paths are skipped
    std::filesystem::path out_solution;
    std::filesystem::path out_geojson;
    std::filesystem::path out_svg;
    std::filesystem::path out_model;  // .mps writes MPS, anything else LP text
    std::filesystem::path out_diagnostics;
};

/// load -> generate -> matrices -> problem -> solve -> diagnose -> emit.
/// Returns 0 for an optimal solve with an empty diagnostic report, 2 for an
/// optimal solve with issues, 1 for any error (stage-labelled on err).
int run_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tpi
