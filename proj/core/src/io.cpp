#include "tpi/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace tpi {

namespace {

constexpr double kEarthRadiusMeters = 6371000.0;

void project_lonlat(std::vector<Element>& elements) {
    double lat_sum = 0.0;
    std::size_t n = 0;
    for (const Element& e : elements) {
        lat_sum += e.coor.y;
        ++n;
    }
    if (n == 0) return;
    const double lat0 = lat_sum / static_cast<double>(n) * std::numbers::pi / 180.0;
    const double kx = kEarthRadiusMeters * std::cos(lat0) * std::numbers::pi / 180.0;
    const double ky = kEarthRadiusMeters * std::numbers::pi / 180.0;
    auto convert = [&](Coord& c) { c = Coord{c.x * kx, c.y * ky}; };
    for (Element& e : elements) {
        convert(e.coor);
        if (e.endpoints) {
            convert((*e.endpoints)[0]);
            convert((*e.endpoints)[1]);
        }
    }
}

ElementType parse_type(const std::string& name, const std::string& locus) {
    for (const ElementType& t : {kCustomer, kLine, kJunction, kTransformer})
        if (t.name == name) return t;
    throw LoadError(locus + ": unknown type label '" + name + "'");
}

std::string id_from_json(const nlohmann::json& v, const std::string& locus) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw LoadError(locus + ": id must be a string or an integer");
}

Network finalize(std::vector<Element> elements,
                 std::map<ElementId, ElementId, NaturalLess> junction_to_transformer,
                 const LoadOptions& options, const std::string& source) {
    // loader-level checks so messages carry the source, then Network's own
    // invariants take over
    std::map<ElementId, int, NaturalLess> seen;
    for (const Element& e : elements) {
        if (!seen.emplace(e.id, 1).second)
            throw LoadError(source + ": duplicate id '" + e.id + "'");
        if (!std::isfinite(e.coor.x) || !std::isfinite(e.coor.y))
            throw LoadError(source + ": non-finite coordinate on element '" + e.id + "'");
        if (e.type == kCustomer && !e.junction)
            throw LoadError(source + ": customer '" + e.id + "' is missing its junction attribute");
    }
    if (options.lonlat_to_meters) project_lonlat(elements);
    try {
        return Network(std::move(elements), std::move(junction_to_transformer));
    } catch (const std::invalid_argument& ex) {
        throw LoadError(source + ": " + ex.what());
    }
}

}  // namespace

Network load_network(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path.string() + "'");
    const auto ext = path.extension().string();
    if (ext == ".csv") return load_network_csv(in, path.string(), options);
    if (ext == ".geojson" || ext == ".json") return load_network_geojson(in, path.string(), options);
    throw LoadError("unsupported input format '" + ext + "' (expected .geojson, .json or .csv)");
}

namespace {

Element parse_feature(const nlohmann::json& feature, const std::string& locus,
                      std::map<ElementId, ElementId, NaturalLess>& junction_to_transformer) {
    if (feature.value("type", "") != "Feature")
        throw LoadError(locus + ": expected a Feature object");
    const auto& props = feature.at("properties");
    if (!props.contains("id")) throw LoadError(locus + ": missing property 'id'");
    Element e;
    e.id = id_from_json(props["id"], locus);
    if (!props.contains("type")) throw LoadError(locus + ": missing property 'type'");
    e.type = parse_type(props["type"].get<std::string>(), locus);
    if (props.contains("junction") && !props["junction"].is_null())
        e.junction = id_from_json(props["junction"], locus);

    const auto& geometry = feature.at("geometry");
    const std::string gtype = geometry.value("type", "");
    const auto& coords = geometry.at("coordinates");
    auto as_coord = [&locus](const nlohmann::json& c) {
        if (!c.is_array() || c.size() < 2) throw LoadError(locus + ": malformed position");
        return Coord{c[0].get<double>(), c[1].get<double>()};
    };
    if (gtype == "Point") {
        e.coor = as_coord(coords);
    } else if (gtype == "LineString") {
        if (!coords.is_array() || coords.size() < 2)
            throw LoadError(locus + ": LineString needs at least two positions");
        const Coord a = as_coord(coords.front());
        const Coord b = as_coord(coords.back());
        e.endpoints = {a, b};
        e.coor = Coord{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    } else {
        throw LoadError(locus + ": unsupported geometry '" + gtype + "'");
    }

    if (e.type == kTransformer && props.contains("junctions")) {
        for (const auto& j : props["junctions"])
            junction_to_transformer[id_from_json(j, locus)] = e.id;
    }
    return e;
}

}  // namespace

Network load_network_geojson(std::istream& in, const std::string& source, const LoadOptions& options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& ex) {
        throw LoadError(source + ": " + ex.what());
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features"))
        throw LoadError(source + ": expected a GeoJSON FeatureCollection");

    std::vector<Element> elements;
    std::map<ElementId, ElementId, NaturalLess> junction_to_transformer;

    std::size_t index = 0;
    for (const auto& feature : doc["features"]) {
        const std::string locus = source + ": feature " + std::to_string(index++);
        try {
            elements.push_back(parse_feature(feature, locus, junction_to_transformer));
        } catch (const nlohmann::json::exception& ex) {
            throw LoadError(locus + ": " + ex.what());
        }
    }
    return finalize(std::move(elements), std::move(junction_to_transformer), options, source);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        std::size_t b = 0;
        while (b < cell.size() && cell[b] == ' ') ++b;
        cells.push_back(cell.substr(b));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_double(const std::string& text, const std::string& locus) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw LoadError(locus + ": malformed number '" + text + "'");
    }
}

}  // namespace

Network load_network_csv(std::istream& in, const std::string& source, const LoadOptions& options) {
    std::string line;
    if (!std::getline(in, line)) throw LoadError(source + ": empty file");
    const auto header = split_csv_line(line);
    std::map<std::string, int> column;
    for (int i = 0; i < static_cast<int>(header.size()); ++i) column[header[i]] = i;
    for (const char* required : {"id", "type", "x", "y"})
        if (!column.count(required))
            throw LoadError(source + ": header is missing column '" + std::string(required) + "'");

    auto cell = [&](const std::vector<std::string>& cells, const char* name) -> std::string {
        auto it = column.find(name);
        if (it == column.end() || it->second >= static_cast<int>(cells.size())) return "";
        return cells[it->second];
    };

    std::vector<Element> elements;
    std::map<ElementId, ElementId, NaturalLess> junction_to_transformer;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::string locus = source + ": line " + std::to_string(line_no);
        const auto cells = split_csv_line(line);
        Element e;
        e.id = cell(cells, "id");
        if (e.id.empty()) throw LoadError(locus + ": empty id");
        e.type = parse_type(cell(cells, "type"), locus);
        const double x = parse_double(cell(cells, "x"), locus);
        const double y = parse_double(cell(cells, "y"), locus);
        const std::string x2 = cell(cells, "x2"), y2 = cell(cells, "y2");
        if (!x2.empty() || !y2.empty()) {
            if (x2.empty() || y2.empty()) throw LoadError(locus + ": x2 and y2 must come together");
            const Coord a{x, y};
            const Coord b{parse_double(x2, locus), parse_double(y2, locus)};
            e.endpoints = {a, b};
            e.coor = Coord{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        } else {
            e.coor = Coord{x, y};
        }
        const std::string junction = cell(cells, "junction");
        if (!junction.empty()) {
            if (e.type == kTransformer) {
                std::istringstream js(junction);
                std::string one;
                while (std::getline(js, one, ';'))
                    if (!one.empty()) junction_to_transformer[one] = e.id;
            } else {
                e.junction = junction;
            }
        }
        elements.push_back(std::move(e));
    }
    return finalize(std::move(elements), std::move(junction_to_transformer), options, source);
}

const std::vector<std::string>& color_palette() {
    static const std::vector<std::string> palette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
        "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a", "#ff9896",
        "#c5b0d5", "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5",
    };
    return palette;
}

std::map<ElementId, ElementId, NaturalLess> feeder_assignment(const Solution& sol,
                                                              const PathMatrices& m) {
    std::map<ElementId, ElementId, NaturalLess> assignment;
    for (std::size_t k = 0; k < m.path_count(); ++k) {
        if (!sol.p_hat.selected[k]) continue;
        const Path& p = m.paths[k];
        assignment[p.customer()] = p.terminal();
        assignment[p.terminal()] = p.terminal();  // a used terminal is its own feeder
    }
    for (int t = 0; t < sol.t_r.terminals; ++t)
        for (int r = 0; r < sol.t_r.remaining; ++r)
            if (sol.t_r.at(t, r)) {
                assignment[m.remaining[r]] = m.terminals[t];
                assignment[m.terminals[t]] = m.terminals[t];
            }
    return assignment;
}

nlohmann::json solution_to_json(const Solution& sol, const PathMatrices& m) {
    nlohmann::json paths = nlohmann::json::array();
    for (std::size_t k = 0; k < m.path_count(); ++k) {
        if (!sol.p_hat.selected[k]) continue;
        const Path& p = m.paths[k];
        paths.push_back(nlohmann::json{{"customer", p.customer()},
                                       {"terminal", p.terminal()},
                                       {"elements", p.elements},
                                       {"length", p.length}});
    }
    nlohmann::json assignments = nlohmann::json::array();
    for (int r = 0; r < sol.t_r.remaining; ++r)
        for (int t = 0; t < sol.t_r.terminals; ++t)
            if (sol.t_r.at(t, r))
                assignments.push_back(
                    nlohmann::json{{"element", m.remaining[r]}, {"terminal", m.terminals[t]}});
    return nlohmann::json{
        {"status", to_string(sol.status)},
        {"objective", to_double(sol.objective)},
        {"selected", sol.selected_count},
        {"assignments", std::move(assignments)},
        {"paths", std::move(paths)},
    };
}

namespace {

struct Coloring {
    std::map<ElementId, ElementId, NaturalLess> feeder;
    std::map<ElementId, std::string, NaturalLess> color_by_terminal;

    Coloring(const Solution& sol, const PathMatrices& m) {
        feeder = feeder_assignment(sol, m);
        const auto& palette = color_palette();
        for (std::size_t t = 0; t < m.terminals.size(); ++t)
            color_by_terminal[m.terminals[t]] = palette[t % palette.size()];
    }

    std::string color_of(const ElementId& id) const {
        auto it = feeder.find(id);
        if (it == feeder.end()) return "#000000";
        auto ct = color_by_terminal.find(it->second);
        return ct == color_by_terminal.end() ? "#000000" : ct->second;
    }

    std::string feeder_of(const ElementId& id) const {
        auto it = feeder.find(id);
        return it == feeder.end() ? "unassigned" : it->second;
    }
};

}  // namespace

nlohmann::json network_to_geojson(const Network& net, const Solution* sol, const PathMatrices* m) {
    std::optional<Coloring> coloring;
    if (sol != nullptr && m != nullptr) coloring.emplace(*sol, *m);

    nlohmann::json features = nlohmann::json::array();
    for (const Element& e : net.elements()) {
        nlohmann::json geometry;
        if (e.endpoints) {
            geometry = {{"type", "LineString"},
                        {"coordinates", nlohmann::json::array({
                                            nlohmann::json::array({(*e.endpoints)[0].x, (*e.endpoints)[0].y}),
                                            nlohmann::json::array({(*e.endpoints)[1].x, (*e.endpoints)[1].y}),
                                        })}};
        } else {
            geometry = {{"type", "Point"}, {"coordinates", nlohmann::json::array({e.coor.x, e.coor.y})}};
        }
        nlohmann::json props{{"id", e.id}, {"type", e.type.name}};
        if (e.junction) props["junction"] = *e.junction;
        if (e.type == kTransformer) {
            nlohmann::json junctions = nlohmann::json::array();
            for (const auto& [j, t] : net.junction_to_transformer())
                if (t == e.id) junctions.push_back(j);
            if (!junctions.empty()) props["junctions"] = std::move(junctions);
        }
        if (coloring) {
            props["feeder_id"] = coloring->feeder_of(e.id);
            props["color"] = coloring->color_of(e.id);
            if (e.type == kCustomer && coloring->feeder_of(e.id) == "unassigned")
                props["uncovered"] = true;
        }
        features.push_back(nlohmann::json{
            {"type", "Feature"}, {"geometry", std::move(geometry)}, {"properties", std::move(props)}});
    }
    return nlohmann::json{{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

namespace {

std::string svg_num(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    return os.str();
}

}  // namespace

void write_svg(const Network& net, const Solution* sol, const PathMatrices* m, std::ostream& os) {
    std::optional<Coloring> coloring;
    if (sol != nullptr && m != nullptr) coloring.emplace(*sol, *m);

    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    auto stretch = [&](const Coord& c) {
        if (first) {
            min_x = max_x = c.x;
            min_y = max_y = c.y;
            first = false;
        } else {
            min_x = std::min(min_x, c.x);
            max_x = std::max(max_x, c.x);
            min_y = std::min(min_y, c.y);
            max_y = std::max(max_y, c.y);
        }
    };
    for (const Element& e : net.elements()) {
        stretch(e.coor);
        if (e.endpoints) {
            stretch((*e.endpoints)[0]);
            stretch((*e.endpoints)[1]);
        }
    }
    const double margin = 4.0;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;

    // flip y so north stays up
    auto sy = [&](double y) { return max_y + min_y - y; };
    auto color = [&](const ElementId& id) { return coloring ? coloring->color_of(id) : std::string("#000000"); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(min_x) << ' ' << svg_num(min_y)
       << ' ' << svg_num(max_x - min_x) << ' ' << svg_num(max_y - min_y) << "\">\n";

    // dashed connection segments of the selected paths, under the elements
    if (coloring && m != nullptr && sol != nullptr) {
        for (std::size_t k = 0; k < m->path_count(); ++k) {
            if (!sol->p_hat.selected[k]) continue;
            const Path& p = m->paths[k];
            for (std::size_t i = 0; i + 1 < p.elements.size(); ++i) {
                const Element& a = net.at(p.elements[i]);
                const Element& b = net.at(p.elements[i + 1]);
                os << "  <line x1=\"" << svg_num(a.coor.x) << "\" y1=\"" << svg_num(sy(a.coor.y))
                   << "\" x2=\"" << svg_num(b.coor.x) << "\" y2=\"" << svg_num(sy(b.coor.y))
                   << "\" stroke=\"" << color(p.customer())
                   << "\" stroke-width=\"0.3\" stroke-dasharray=\"1,1\"/>\n";
            }
        }
    }

    for (const Element& e : net.elements()) {
        const std::string c = color(e.id);
        if (e.endpoints) {
            os << "  <line x1=\"" << svg_num((*e.endpoints)[0].x) << "\" y1=\""
               << svg_num(sy((*e.endpoints)[0].y)) << "\" x2=\"" << svg_num((*e.endpoints)[1].x)
               << "\" y2=\"" << svg_num(sy((*e.endpoints)[1].y)) << "\" stroke=\"" << c
               << "\" stroke-width=\"0.8\"/>\n";
        } else if (e.type == kCustomer) {
            const bool uncovered = coloring && coloring->feeder_of(e.id) == "unassigned";
            os << "  <circle cx=\"" << svg_num(e.coor.x) << "\" cy=\"" << svg_num(sy(e.coor.y))
               << "\" r=\"1.2\" fill=\"" << c << "\"";
            if (uncovered) os << " stroke=\"#7b2cbf\" stroke-width=\"0.6\"";
            os << "/>\n";
        } else if (e.type == kJunction) {
            os << "  <rect x=\"" << svg_num(e.coor.x - 1.0) << "\" y=\"" << svg_num(sy(e.coor.y) - 1.0)
               << "\" width=\"2\" height=\"2\" fill=\"" << c << "\"/>\n";
        } else {
            os << "  <rect x=\"" << svg_num(e.coor.x - 1.4) << "\" y=\"" << svg_num(sy(e.coor.y) - 1.4)
               << "\" width=\"2.8\" height=\"2.8\" fill=\"none\" stroke=\"" << c
               << "\" stroke-width=\"0.5\"/>\n";
        }
        os << "  <text x=\"" << svg_num(e.coor.x + 1.5) << "\" y=\"" << svg_num(sy(e.coor.y) - 1.0)
           << "\" font-size=\"2\" fill=\"#444444\">" << e.id << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace tpi
