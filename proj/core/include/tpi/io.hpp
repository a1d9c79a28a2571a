#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "tpi/diagnostics.hpp"
#include "tpi/solver.hpp"

namespace tpi {

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadOptions {
    /// Input coordinates are lon/lat degrees; convert them to meters with an
    /// equirectangular projection around the data's mean latitude.
    bool lonlat_to_meters = false;
};

/// Loads a network from GeoJSON (.geojson/.json) or CSV (.csv), picking the
/// parser from the file extension. Errors carry the offending feature or
/// line.
Network load_network(const std::filesystem::path& path, const LoadOptions& options = {});

/// GeoJSON FeatureCollection: Point or LineString geometry per feature;
/// properties: id, type, junction (customers), junctions (transformers:
/// the feeder terminal junctions the transformer serves).
Network load_network_geojson(std::istream& in, const std::string& source,
                             const LoadOptions& options = {});

/// CSV columns: id,type,x,y[,x2,y2][,junction]. Lines carry both endpoints;
/// a transformer's junction cell lists its junctions separated by ';'.
Network load_network_csv(std::istream& in, const std::string& source,
                         const LoadOptions& options = {});

/// The 20-color cycle used for feeder coloring, keyed by terminal id order.
const std::vector<std::string>& color_palette();

/// Element id -> terminal id for everything a solution pins down: customers
/// and terminals of selected paths, assigned remaining elements, junctions
/// themselves.
std::map<ElementId, ElementId, NaturalLess> feeder_assignment(const Solution& sol,
                                                              const PathMatrices& m);

/// Selected paths, assignments and objective as stable JSON.
nlohmann::json solution_to_json(const Solution& sol, const PathMatrices& m);

/// GeoJSON copy of the network. With a solution, features gain feeder_id and
/// color properties (black / "unassigned" for uncovered elements, and
/// uncovered customers are additionally marked).
nlohmann::json network_to_geojson(const Network& net, const Solution* sol = nullptr,
                                  const PathMatrices* m = nullptr);

/// SVG rendering of the colored network; selected paths are drawn as dashed
/// connection segments.
void write_svg(const Network& net, const Solution* sol, const PathMatrices* m, std::ostream& os);

}  // namespace tpi
