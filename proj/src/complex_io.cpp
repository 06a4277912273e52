#include "wshom/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wshom/error.hpp"

namespace wshom {

using nlohmann::json;

namespace {

WeightedComplex from_json(const json& doc, std::optional<Field> field_override) {
    if (!doc.is_object()) fail(errc::parse_error, "complex document must be a JSON object");
    if (!doc.contains("field") || !doc["field"].is_string())
        fail(errc::parse_error, "complex document needs a string \"field\"");
    Field f = field_override ? *field_override : Field::parse(doc["field"].get<std::string>());

    bool auto_close = false;
    if (doc.contains("auto_close")) {
        if (!doc["auto_close"].is_boolean()) fail(errc::parse_error, "\"auto_close\" must be a boolean");
        auto_close = doc["auto_close"].get<bool>();
    }

    std::vector<std::string> names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array()) fail(errc::parse_error, "\"names\" must be an array of strings");
        for (const auto& n : doc["names"]) {
            if (!n.is_string()) fail(errc::parse_error, "\"names\" must be an array of strings");
            names.push_back(n.get<std::string>());
        }
    }

    if (!doc.contains("simplices") || !doc["simplices"].is_array())
        fail(errc::parse_error, "complex document needs a \"simplices\" array");
    std::vector<SimplexEntry> entries;
    for (const auto& item : doc["simplices"]) {
        if (!item.is_object() || !item.contains("v") || !item["v"].is_array())
            fail(errc::parse_error, "each simplex needs a vertex array \"v\"");
        SimplexEntry e;
        for (const auto& v : item["v"]) {
            if (!v.is_number_integer()) fail(errc::parse_error, "vertex ids must be integers");
            e.simplex.verts.push_back(v.get<int>());
        }
        if (!item.contains("w") || !item["w"].is_number_integer())
            fail(errc::parse_error, "simplex " + e.simplex.label(names) + " needs an integer weight \"w\"");
        e.weight = item["w"].get<int>();
        entries.push_back(std::move(e));
    }
    return WeightedComplex::build(f, entries, std::move(names), auto_close);
}

} // namespace

WeightedComplex load_complex(const std::string& json_text, std::optional<Field> field_override) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(errc::parse_error, std::string("bad JSON: ") + e.what());
    }
    return from_json(doc, field_override);
}

WeightedComplex load_complex_file(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_complex(buf.str(), field_override);
}

std::string save_complex(const WeightedComplex& x) {
    json doc;
    doc["field"] = x.field().to_string();
    doc["auto_close"] = false;
    if (!x.names().empty()) doc["names"] = x.names();
    json simplices = json::array();
    for (const auto& e : x.entries()) {
        json item;
        item["v"] = e.simplex.verts;
        item["w"] = e.weight;
        simplices.push_back(std::move(item));
    }
    doc["simplices"] = std::move(simplices);
    return doc.dump(2) + "\n";
}

} // namespace wshom
