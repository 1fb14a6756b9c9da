#pragma once

// Tower-set documents ({"t":2,"r":2,"m":5,"n":5,"towers":[[1,2],...]}).

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bdom/grid.hpp"

namespace bdom {

struct TowerSetDocument {
    BroadcastParams params;
    GridDims dims;
    TowerSet towers;
};

[[nodiscard]] inline nlohmann::json towers_to_json(const TowerSet& towers) {
    auto arr = nlohmann::json::array();
    for (const auto& v : towers) arr.push_back({v.row, v.col});
    return arr;
}

[[nodiscard]] inline TowerSet towers_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw invalid_input("towers must be a list of [row, col] pairs");
    std::vector<Vertex> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw invalid_input("tower entries must be [row, col] integer pairs");
        out.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return TowerSet(std::move(out));
}

[[nodiscard]] inline nlohmann::json to_json(const TowerSetDocument& doc) {
    nlohmann::json j;
    j["t"] = doc.params.t;
    j["r"] = doc.params.r;
    j["m"] = doc.dims.rows;
    j["n"] = doc.dims.cols;
    j["towers"] = towers_to_json(doc.towers);
    return j;
}

/// Parses and validates a document; towers must lie in the grid.
[[nodiscard]] inline TowerSetDocument document_from_json(const nlohmann::json& j) {
    for (const char* key : {"t", "r", "m", "n"})
        if (!j.contains(key) || !j[key].is_number_integer())
            throw invalid_input(std::string("document needs integer field \"") + key + "\"");
    if (!j.contains("towers")) throw invalid_input("document needs a \"towers\" list");
    TowerSetDocument doc{BroadcastParams(j["t"].get<int>(), j["r"].get<int>()),
                         GridDims(j["m"].get<int>(), j["n"].get<int>()), towers_from_json(j["towers"])};
    require_resident(doc.dims, doc.towers);
    return doc;
}

[[nodiscard]] inline TowerSetDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

[[nodiscard]] inline TowerSetDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

/// "row,col" lines under a header.
[[nodiscard]] inline std::string towers_csv(const TowerSet& towers) {
    std::string out = "row,col\n";
    for (const auto& v : towers) out += std::to_string(v.row) + "," + std::to_string(v.col) + "\n";
    return out;
}

}  // namespace bdom
