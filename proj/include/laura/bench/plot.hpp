#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "laura/wsn/model.hpp"

namespace laura::bench {

namespace plot_detail {

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace plot_detail

/// Renders the scenario and route as a standalone SVG: circles for the
/// data center (square-ish accent) and sensor nodes, arrowed lines for each
/// leg in visiting order, and a title carrying the maximum AoI. Purely a
/// function of its inputs, so identical calls give identical bytes.
inline std::string render_route_svg(const wsn::Scenario& scenario, const wsn::Route& route) {
    wsn::validate_scenario(scenario);
    if (!wsn::is_valid_route(route, scenario.node_count())) {
        throw std::invalid_argument("render_route_svg: route is not a valid depot-to-depot tour");
    }
    const wsn::AoiProfile profile = wsn::evaluate_route(scenario, route);

    double min_x = scenario.data_center.x;
    double max_x = scenario.data_center.x;
    double min_y = scenario.data_center.y;
    double max_y = scenario.data_center.y;
    for (const wsn::SensorNode& node : scenario.nodes) {
        min_x = std::min(min_x, node.position.x);
        max_x = std::max(max_x, node.position.x);
        min_y = std::min(min_y, node.position.y);
        max_y = std::max(max_y, node.position.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double canvas = 800.0;
    const double margin = 50.0;
    const double scale = (canvas - 2.0 * margin) / span;
    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return canvas - margin - (y - min_y) * scale; };
    auto pos = [&](wsn::NodeId id) { return scenario.position(id); };

    char omega_text[64];
    std::snprintf(omega_text, sizeof(omega_text), "%.6f", profile.max_aoi);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "  <title>route with max AoI " + std::string(omega_text) + " s</title>\n";
    svg += "  <defs>\n"
           "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
           "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#607080\"/>\n"
           "    </marker>\n"
           "  </defs>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    svg += "  <text x=\"" + plot_detail::num(margin) + "\" y=\"30\" font-family=\"sans-serif\" "
           "font-size=\"16\">max AoI " + std::string(omega_text) + " s</text>\n";

    for (std::size_t i = 0; i + 1 < route.sequence.size(); ++i) {
        const wsn::Point a = pos(route.sequence[i]);
        const wsn::Point b = pos(route.sequence[i + 1]);
        svg += "  <line x1=\"" + plot_detail::num(sx(a.x)) + "\" y1=\"" +
               plot_detail::num(sy(a.y)) + "\" x2=\"" + plot_detail::num(sx(b.x)) + "\" y2=\"" +
               plot_detail::num(sy(b.y)) +
               "\" stroke=\"#607080\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    }

    svg += "  <circle cx=\"" + plot_detail::num(sx(scenario.data_center.x)) + "\" cy=\"" +
           plot_detail::num(sy(scenario.data_center.y)) +
           "\" r=\"9\" fill=\"#c0392b\" stroke=\"#7a241a\" stroke-width=\"2\"/>\n";
    for (const wsn::SensorNode& node : scenario.nodes) {
        svg += "  <circle cx=\"" + plot_detail::num(sx(node.position.x)) + "\" cy=\"" +
               plot_detail::num(sy(node.position.y)) +
               "\" r=\"6\" fill=\"#2d6fa3\" stroke=\"#1b4261\" stroke-width=\"1.5\"/>\n";
        svg += "  <text x=\"" + plot_detail::num(sx(node.position.x) + 8.0) + "\" y=\"" +
               plot_detail::num(sy(node.position.y) - 8.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(node.id) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

/// Writes the SVG to `path`, failing loudly on I/O trouble.
inline void plot_route(const wsn::Scenario& scenario, const wsn::Route& route,
                       const std::string& path) {
    const std::string svg = render_route_svg(scenario, route);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("plot_route: cannot open for writing: " + path);
    out << svg;
    if (!out) throw std::runtime_error("plot_route: write failed: " + path);
}

} // namespace laura::bench
