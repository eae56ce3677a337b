#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "laura/wsn/model.hpp"

namespace laura::wsn {

inline nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json doc;
    doc["data_center"] = {{"x", s.data_center.x}, {"y", s.data_center.y}};
    doc["uav"] = {{"altitude_m", s.uav_altitude_m}, {"speed_mps", s.uav_speed_mps}};
    doc["radio"] = {{"tx_power_w", s.radio.tx_power_w},
                    {"bandwidth_hz", s.radio.bandwidth_hz},
                    {"noise_power_w", s.radio.noise_power_w}};
    doc["nodes"] = nlohmann::json::array();
    for (const SensorNode& node : s.nodes) {
        doc["nodes"].push_back({{"id", node.id},
                                {"x", node.position.x},
                                {"y", node.position.y},
                                {"data_bits", node.data_bits},
                                {"ref_gain_linear", node.ref_gain_linear}});
    }
    return doc;
}

/// Parses and validates a scenario document. Nodes may appear in any order in
/// the file; they are normalized to id order. Invariant violations throw.
inline Scenario scenario_from_json(const nlohmann::json& doc) {
    Scenario s;
    try {
        s.data_center = {doc.at("data_center").at("x").get<double>(),
                         doc.at("data_center").at("y").get<double>()};
        s.uav_altitude_m = doc.at("uav").at("altitude_m").get<double>();
        s.uav_speed_mps = doc.at("uav").at("speed_mps").get<double>();
        s.radio.tx_power_w = doc.at("radio").at("tx_power_w").get<double>();
        s.radio.bandwidth_hz = doc.at("radio").at("bandwidth_hz").get<double>();
        s.radio.noise_power_w = doc.at("radio").at("noise_power_w").get<double>();
        for (const nlohmann::json& entry : doc.at("nodes")) {
            SensorNode node;
            node.id = entry.at("id").get<NodeId>();
            node.position = {entry.at("x").get<double>(), entry.at("y").get<double>()};
            node.data_bits = entry.at("data_bits").get<double>();
            node.ref_gain_linear = entry.at("ref_gain_linear").get<double>();
            s.nodes.push_back(node);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("scenario: malformed document: ") + e.what());
    }
    std::sort(s.nodes.begin(), s.nodes.end(),
              [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
    validate_scenario(s);
    return s;
}

inline Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scenario: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("scenario: " + path + " is not valid JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

inline void save_scenario_file(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("scenario: cannot write " + path);
    out << scenario_to_json(s).dump(2) << "\n";
}

} // namespace laura::wsn
