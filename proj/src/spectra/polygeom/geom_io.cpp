#include "spectra/polygeom/geom_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace spectra::polygeom {
namespace {
using nlohmann::json;
}

Polygon read_polygon_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("polygon file: invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::runtime_error("polygon file: top level must be an array");
    std::vector<Point> v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& pt = j[i];
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number())
            throw std::runtime_error("polygon file: element " + std::to_string(i) +
                                     " is not an [x, y] number pair");
        v.push_back({pt[0].get<double>(), pt[1].get<double>()});
    }
    return Polygon::from_vertices(std::move(v));
}

std::string write_polygon_json(const Polygon& p) {
    json j = json::array();
    for (const Point& pt : p.vertices()) j.push_back(json::array({pt[0], pt[1]}));
    return j.dump();
}

CellComplex read_cell_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("cell complex file: invalid JSON: ") + e.what());
    }
    CellComplex c;
    for (const char* key : {"V", "E", "F"})
        if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
            throw std::runtime_error(std::string("cell complex file: field \"") + key +
                                     "\" missing or not an integer");
    c.v = j["V"].get<long long>();
    c.e = j["E"].get<long long>();
    c.f = j["F"].get<long long>();
    return c;
}

std::string write_cell_complex_json(const CellComplex& c) {
    json j;
    j["V"] = c.v;
    j["E"] = c.e;
    j["F"] = c.f;
    return j.dump();
}

}  // namespace spectra::polygeom
