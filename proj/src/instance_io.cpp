#include "lstn/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lstn/error.hpp"

namespace lstn {

namespace {

using nlohmann::json;

double number_at(const json& value, const std::string& where) {
    if (!value.is_number()) throw parse_error(where + ": expected a number");
    return value.get<double>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
    if (!doc.is_object()) throw parse_error("top level: expected an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw parse_error("top level: missing integer field 'dim'");
    }
    if (!doc.contains("regions") || !doc["regions"].is_array()) {
        throw parse_error("top level: missing array field 'regions'");
    }
    const auto dim_raw = doc["dim"].get<long long>();
    if (dim_raw < 0) throw parse_error("dim: must be non-negative");

    Instance inst;
    inst.dim = static_cast<std::size_t>(dim_raw);
    const auto& regions = doc["regions"];
    inst.regions.reserve(regions.size());
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const std::string where = "regions[" + std::to_string(r) + "]";
        const auto& jr = regions[r];
        if (!jr.is_object()) throw parse_error(where + ": expected an object");
        Neighborhood region;
        region.id = r;
        if (jr.contains("label")) {
            if (!jr["label"].is_string()) throw parse_error(where + ".label: expected a string");
            region.label = jr["label"].get<std::string>();
        }
        if (!jr.contains("vertices") || !jr["vertices"].is_array()) {
            throw parse_error(where + ": missing array field 'vertices'");
        }
        const auto& verts = jr["vertices"];
        region.vertices.reserve(verts.size());
        for (std::size_t v = 0; v < verts.size(); ++v) {
            const std::string vwhere = where + ".vertices[" + std::to_string(v) + "]";
            if (!verts[v].is_array()) throw parse_error(vwhere + ": expected an array");
            Point pt;
            pt.reserve(verts[v].size());
            for (std::size_t c = 0; c < verts[v].size(); ++c) {
                pt.push_back(number_at(verts[v][c], vwhere + "[" + std::to_string(c) + "]"));
            }
            region.vertices.push_back(std::move(pt));
        }
        inst.regions.push_back(std::move(region));
    }
    require_valid(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    // Hand-rolled layout (one region per line, vertices inline); numbers and labels
    // still go through the json dumper, so coordinates round-trip bit-exactly.
    std::string out = "{\n  \"dim\": " + std::to_string(inst.dim) + ",\n  \"regions\": [\n";
    for (std::size_t r = 0; r < inst.regions.size(); ++r) {
        const auto& region = inst.regions[r];
        out += "    {\"label\": " + json(region.label).dump() + ", \"vertices\": [";
        for (std::size_t v = 0; v < region.vertices.size(); ++v) {
            if (v > 0) out += ", ";
            out += "[";
            for (std::size_t c = 0; c < region.vertices[v].size(); ++c) {
                if (c > 0) out += ", ";
                out += json(region.vertices[v][c]).dump();
            }
            out += "]";
        }
        out += "]}";
        if (r + 1 < inst.regions.size()) out += ",";
        out += "\n";
    }
    out += "  ]\n}\n";
    return out;
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open instance file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance(buffer.str());
    } catch (parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << serialize_instance(inst);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace lstn
