#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "laura/util/rng.hpp"
#include "laura/wsn/generate.hpp"
#include "laura/wsn/model.hpp"
#include "laura/wsn/scenario_io.hpp"
#include "test_support.hpp"

using namespace laura;
using test_support::triangle_scenario;

namespace {

constexpr double kRateAt30m = 18346610.396681648;
constexpr double kRateAt60m = 16346623.380839635;
constexpr double kTau500kb = 0.027252990562792734;

} // namespace

TEST(FlightTime, HandCheckedDistances) {
    EXPECT_DOUBLE_EQ(wsn::flight_time({0, 0}, {0, 30}, 10.0), 3.0);
    EXPECT_DOUBLE_EQ(wsn::flight_time({0, 30}, {40, 30}, 10.0), 4.0);
    EXPECT_DOUBLE_EQ(wsn::flight_time({40, 30}, {0, 0}, 10.0), 5.0);
    EXPECT_DOUBLE_EQ(wsn::flight_time({3, 7}, {3, 7}, 2.5), 0.0);
    EXPECT_DOUBLE_EQ(wsn::flight_time({0, 0}, {3000, 0}, 10.0), 300.0);
}

TEST(FlightTime, RejectsBadInputs) {
    EXPECT_THROW(wsn::flight_time({0, 0}, {1, 1}, 0.0), std::invalid_argument);
    EXPECT_THROW(wsn::flight_time({0, 0}, {1, 1}, -3.0), std::invalid_argument);
    const double nan = std::nan("");
    EXPECT_THROW(wsn::flight_time({nan, 0}, {1, 1}, 10.0), std::invalid_argument);
    EXPECT_THROW(wsn::flight_time({0, 0}, {1, nan}, 10.0), std::invalid_argument);
}

TEST(FlightTime, SymmetricAndTriangleInequality) {
    util::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const wsn::Point a{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
        const wsn::Point b{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
        const wsn::Point c{rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
        const double v = rng.uniform(0.5, 50.0);
        EXPECT_DOUBLE_EQ(wsn::flight_time(a, b, v), wsn::flight_time(b, a, v));
        EXPECT_LE(wsn::flight_time(a, c, v),
                  wsn::flight_time(a, b, v) + wsn::flight_time(b, c, v) + 1e-9);
    }
}

TEST(DataRate, ReferenceConfiguration) {
    const wsn::RadioParams radio;
    const double rate = wsn::data_rate(radio, 1e-5, 30.0);
    EXPECT_NEAR(rate, 1.83465e7, 1.83465e7 * 1e-4);
    EXPECT_DOUBLE_EQ(rate, kRateAt30m);
    EXPECT_DOUBLE_EQ(wsn::data_rate(radio, 1e-5, 60.0), kRateAt60m);
}

TEST(DataRate, UnitSnrGivesBandwidth) {
    wsn::RadioParams radio;
    radio.tx_power_w = 1.0;
    radio.bandwidth_hz = 1e6;
    radio.noise_power_w = 1.0;
    EXPECT_DOUBLE_EQ(wsn::data_rate(radio, 1.0, 1.0), 1e6);
}

TEST(DataRate, RejectsNonPositiveInputs) {
    wsn::RadioParams radio;
    EXPECT_THROW(wsn::data_rate(radio, 0.0, 30.0), std::invalid_argument);
    EXPECT_THROW(wsn::data_rate(radio, 1e-5, 0.0), std::invalid_argument);
    radio.bandwidth_hz = 0.0;
    EXPECT_THROW(wsn::data_rate(radio, 1e-5, 30.0), std::invalid_argument);
    radio = {};
    radio.tx_power_w = -1.0;
    EXPECT_THROW(wsn::data_rate(radio, 1e-5, 30.0), std::invalid_argument);
    radio = {};
    radio.noise_power_w = 0.0;
    EXPECT_THROW(wsn::data_rate(radio, 1e-5, 30.0), std::invalid_argument);
}

TEST(UploadDuration, ReferenceConfiguration) {
    EXPECT_DOUBLE_EQ(wsn::upload_duration(5e5, kRateAt30m), kTau500kb);
    EXPECT_NEAR(wsn::upload_duration(5e5, kRateAt30m), 0.027253, 0.027253 * 1e-4);
    EXPECT_DOUBLE_EQ(wsn::upload_duration(0.0, kRateAt30m), 0.0);
    EXPECT_DOUBLE_EQ(wsn::upload_duration(1e6, 1e6), 1.0);
}

TEST(UploadDuration, RejectsBadInputs) {
    EXPECT_THROW(wsn::upload_duration(5e5, 0.0), std::invalid_argument);
    EXPECT_THROW(wsn::upload_duration(5e5, -1.0), std::invalid_argument);
    EXPECT_THROW(wsn::upload_duration(-1.0, 1e6), std::invalid_argument);
}

TEST(AoiAt, RampSemantics) {
    EXPECT_DOUBLE_EQ(wsn::aoi_at(10.0, 4.0), 6.0);
    EXPECT_DOUBLE_EQ(wsn::aoi_at(4.0, 10.0), 0.0);
    EXPECT_DOUBLE_EQ(wsn::aoi_at(7.5, 7.5), 0.0);
}

TEST(EvaluateRoute, TriangleByHand) {
    const wsn::Scenario s = triangle_scenario();

    const wsn::Route forward{{0, 1, 2, 0}};
    const wsn::AoiProfile pf = wsn::evaluate_route(s, forward);
    ASSERT_EQ(pf.per_node_aoi.size(), 2u);
    EXPECT_DOUBLE_EQ(pf.per_node_aoi[0], 11.0);
    EXPECT_DOUBLE_EQ(pf.per_node_aoi[1], 6.0);
    EXPECT_DOUBLE_EQ(pf.max_aoi, 11.0);
    EXPECT_DOUBLE_EQ(pf.mission_time, 14.0);
    EXPECT_DOUBLE_EQ(pf.tau_sum, 2.0);
    EXPECT_DOUBLE_EQ(pf.travel_objective, 9.0);

    const wsn::Route reverse{{0, 2, 1, 0}};
    const wsn::AoiProfile pr = wsn::evaluate_route(s, reverse);
    EXPECT_DOUBLE_EQ(pr.per_node_aoi[0], 9.0);
    EXPECT_DOUBLE_EQ(pr.per_node_aoi[1], 4.0);
    EXPECT_DOUBLE_EQ(pr.max_aoi, 9.0);
    EXPECT_DOUBLE_EQ(pr.mission_time, 14.0);
    EXPECT_DOUBLE_EQ(pr.travel_objective, 7.0);
}

TEST(EvaluateRoute, SingleNode) {
    wsn::Scenario s = triangle_scenario();
    s.nodes.pop_back();
    const wsn::AoiProfile p = wsn::evaluate_route(s, wsn::Route{{0, 1, 0}});
    ASSERT_EQ(p.per_node_aoi.size(), 1u);
    EXPECT_DOUBLE_EQ(p.per_node_aoi[0], 4.0);
    EXPECT_DOUBLE_EQ(p.max_aoi, 4.0);
    EXPECT_DOUBLE_EQ(p.mission_time, 7.0);
    EXPECT_DOUBLE_EQ(p.travel_objective, 3.0);
}

TEST(EvaluateRoute, RejectsInvalidRoutes) {
    const wsn::Scenario s = triangle_scenario();
    EXPECT_THROW(wsn::evaluate_route(s, wsn::Route{{0, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(wsn::evaluate_route(s, wsn::Route{{0, 1, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(wsn::evaluate_route(s, wsn::Route{{0, 1, 3, 0}}), std::invalid_argument);
    EXPECT_THROW(wsn::evaluate_route(s, wsn::Route{{1, 2, 0}}), std::invalid_argument);
    EXPECT_THROW(wsn::evaluate_route(s, wsn::Route{{0, 1, 0}}), std::invalid_argument);
}

TEST(RouteObjective, MatchesTravelTail) {
    const wsn::Scenario s = triangle_scenario();
    EXPECT_DOUBLE_EQ(wsn::route_objective(s, wsn::Route{{0, 1, 2, 0}}), 9.0);
    EXPECT_DOUBLE_EQ(wsn::route_objective(s, wsn::Route{{0, 2, 1, 0}}), 7.0);
}

TEST(RouteEvaluator, CachesMatchDirectComputation) {
    const wsn::Scenario s = test_support::random_scenario(12, 77);
    const wsn::RouteEvaluator eval(s);
    double tau_sum = 0.0;
    for (const wsn::SensorNode& node : s.nodes) {
        const double rate = wsn::data_rate(s.radio, node.ref_gain_linear, s.uav_altitude_m);
        const double tau = wsn::upload_duration(node.data_bits, rate);
        EXPECT_DOUBLE_EQ(eval.tau(node.id), tau);
        tau_sum += tau;
    }
    EXPECT_NEAR(eval.tau_sum(), tau_sum, 1e-12 * tau_sum);
    for (wsn::NodeId a = 0; a <= 12; ++a) {
        for (wsn::NodeId b = 0; b <= 12; ++b) {
            EXPECT_DOUBLE_EQ(eval.leg_time(a, b),
                             wsn::flight_time(s.position(a), s.position(b), s.uav_speed_mps));
        }
    }
}

TEST(RouteEvaluator, AgreesWithNaiveDefinition) {
    util::Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(14));
        const wsn::Scenario s = test_support::random_scenario(n, 9000 + trial);
        const wsn::Route route = test_support::random_valid_route(n, rng);
        const wsn::AoiProfile profile = wsn::evaluate_route(s, route);
        const std::vector<double> naive = test_support::naive_per_node_aoi(s, route);
        ASSERT_EQ(profile.per_node_aoi.size(), naive.size());
        for (std::size_t i = 0; i < naive.size(); ++i) {
            EXPECT_TRUE(test_support::close(profile.per_node_aoi[i], naive[i]))
                << "n=" << n << " i=" << i;
        }
        EXPECT_TRUE(test_support::close(profile.max_aoi, naive.front()));
    }
}

TEST(AoiProfile, StructuralInvariants) {
    util::Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(20));
        const wsn::Scenario s = test_support::random_scenario(n, 400 + trial);
        const wsn::Route route = test_support::random_valid_route(n, rng);
        const wsn::AoiProfile p = wsn::evaluate_route(s, route);
        EXPECT_DOUBLE_EQ(p.max_aoi, p.per_node_aoi.front());
        EXPECT_NEAR(p.max_aoi, p.tau_sum + p.travel_objective, 1e-9 * std::max(p.max_aoi, 1.0));
        EXPECT_GE(p.mission_time, p.max_aoi);
        EXPECT_TRUE(std::is_sorted(p.per_node_aoi.rbegin(), p.per_node_aoi.rend()));
    }
}

TEST(AoiProfile, EarlierVisitsAgeStrictlyMore) {
    util::Rng rng(555);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(39));
        const wsn::Scenario s = test_support::random_scenario(n, 7000 + trial);
        const wsn::Route route = test_support::random_valid_route(n, rng);
        const wsn::AoiProfile p = wsn::evaluate_route(s, route);
        for (std::size_t i = 0; i + 1 < p.per_node_aoi.size(); ++i) {
            EXPECT_GT(p.per_node_aoi[i], p.per_node_aoi[i + 1]);
            ++checked;
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(AoiProfile, TelescopesToVisitTimeline) {
    const wsn::Scenario s = test_support::random_scenario(9, 808);
    util::Rng rng(9);
    const wsn::Route route = test_support::random_valid_route(9, rng);
    const wsn::RouteEvaluator eval(s);
    const wsn::AoiProfile p = eval.evaluate(route);

    double t = eval.leg_time(0, route.sequence[1]);
    for (std::size_t i = 1; i + 1 < route.sequence.size(); ++i) {
        t += eval.tau(route.sequence[i]);
        const double aoi_from_timeline = p.mission_time - t;
        EXPECT_NEAR(p.per_node_aoi[i - 1] - eval.tau(route.sequence[i]), aoi_from_timeline, 1e-9);
        t += eval.leg_time(route.sequence[i], route.sequence[i + 1]);
    }
    EXPECT_NEAR(t, p.mission_time, 1e-9);
}

TEST(IsValidRoute, AcceptsAndRejects) {
    EXPECT_TRUE(wsn::is_valid_route(wsn::Route{{0, 1, 2, 0}}, 2));
    EXPECT_TRUE(wsn::is_valid_route(wsn::Route{{0, 1, 0}}, 1));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{0, 1, 2, 0}}, 3));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{0, 2, 2, 0}}, 2));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{1, 2, 0}}, 2));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{0, 1, 2}}, 2));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{0}}, 0));
    EXPECT_FALSE(wsn::is_valid_route(wsn::Route{{0, -1, 1, 0}}, 2));
}

TEST(GenerateScenario, DeterministicAndInsideDisk) {
    const wsn::Scenario a = wsn::generate_scenario(25, 3000.0, 99);
    const wsn::Scenario b = wsn::generate_scenario(25, 3000.0, 99);
    ASSERT_EQ(a.nodes.size(), 25u);
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        EXPECT_EQ(a.nodes[i].id, static_cast<wsn::NodeId>(i) + 1);
        EXPECT_DOUBLE_EQ(a.nodes[i].position.x, b.nodes[i].position.x);
        EXPECT_DOUBLE_EQ(a.nodes[i].position.y, b.nodes[i].position.y);
        EXPECT_LE(wsn::distance(a.data_center, a.nodes[i].position), 3000.0 + 1e-9);
    }
    const wsn::Scenario c = wsn::generate_scenario(25, 3000.0, 100);
    bool any_different = false;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        any_different = any_different || c.nodes[i].position.x != a.nodes[i].position.x;
    }
    EXPECT_TRUE(any_different);
    EXPECT_NO_THROW(wsn::validate_scenario(a));
}

TEST(GenerateScenario, AreaUniformOverDisk) {
    const wsn::Scenario s = wsn::generate_scenario(10000, 1.0, 7);
    int inside_half_radius = 0;
    for (const wsn::SensorNode& node : s.nodes) {
        if (wsn::distance(s.data_center, node.position) <= 0.5) ++inside_half_radius;
    }
    const double fraction = inside_half_radius / 10000.0;
    EXPECT_NEAR(fraction, 0.25, 0.02);
}

TEST(GenerateScenario, AppliesDefaults) {
    wsn::ScenarioDefaults defaults;
    defaults.uav_altitude_m = 60.0;
    defaults.data_bits = 1e6;
    const wsn::Scenario s = wsn::generate_scenario(3, 500.0, 1, defaults);
    EXPECT_DOUBLE_EQ(s.uav_altitude_m, 60.0);
    for (const wsn::SensorNode& node : s.nodes) {
        EXPECT_DOUBLE_EQ(node.data_bits, 1e6);
        EXPECT_DOUBLE_EQ(node.ref_gain_linear, 1e-5);
    }
}

TEST(GenerateScenario, RejectsBadArguments) {
    EXPECT_THROW(wsn::generate_scenario(0, 3000.0, 1), std::invalid_argument);
    EXPECT_THROW(wsn::generate_scenario(-5, 3000.0, 1), std::invalid_argument);
    EXPECT_THROW(wsn::generate_scenario(5, 0.0, 1), std::invalid_argument);
}

TEST(ValidateScenario, RejectsInvariantViolations) {
    wsn::Scenario s = triangle_scenario();
    s.uav_speed_mps = 0.0;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.uav_altitude_m = -1.0;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.nodes.clear();
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.nodes[1].id = 5;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.nodes[0].data_bits = -1.0;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.nodes[0].ref_gain_linear = 0.0;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);

    s = triangle_scenario();
    s.radio.noise_power_w = 0.0;
    EXPECT_THROW(wsn::validate_scenario(s), std::invalid_argument);
}

TEST(ValidateScenario, WarnsOnCoincidentPositions) {
    wsn::Scenario s = triangle_scenario();
    EXPECT_TRUE(wsn::validate_scenario(s).empty());
    s.nodes[1].position = s.nodes[0].position;
    const std::vector<std::string> warnings = wsn::validate_scenario(s);
    ASSERT_FALSE(warnings.empty());
}

TEST(ScenarioIo, RoundTripsThroughJson) {
    const wsn::Scenario s = test_support::random_scenario(8, 4242);
    const nlohmann::json doc = wsn::scenario_to_json(s);
    const wsn::Scenario back = wsn::scenario_from_json(doc);
    EXPECT_DOUBLE_EQ(back.data_center.x, s.data_center.x);
    EXPECT_DOUBLE_EQ(back.data_center.y, s.data_center.y);
    EXPECT_DOUBLE_EQ(back.uav_altitude_m, s.uav_altitude_m);
    EXPECT_DOUBLE_EQ(back.uav_speed_mps, s.uav_speed_mps);
    EXPECT_DOUBLE_EQ(back.radio.tx_power_w, s.radio.tx_power_w);
    EXPECT_DOUBLE_EQ(back.radio.bandwidth_hz, s.radio.bandwidth_hz);
    EXPECT_DOUBLE_EQ(back.radio.noise_power_w, s.radio.noise_power_w);
    ASSERT_EQ(back.nodes.size(), s.nodes.size());
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        EXPECT_EQ(back.nodes[i].id, s.nodes[i].id);
        EXPECT_DOUBLE_EQ(back.nodes[i].position.x, s.nodes[i].position.x);
        EXPECT_DOUBLE_EQ(back.nodes[i].position.y, s.nodes[i].position.y);
        EXPECT_DOUBLE_EQ(back.nodes[i].data_bits, s.nodes[i].data_bits);
        EXPECT_DOUBLE_EQ(back.nodes[i].ref_gain_linear, s.nodes[i].ref_gain_linear);
    }
}

TEST(ScenarioIo, SchemaFieldNamesAreStable) {
    const nlohmann::json doc = wsn::scenario_to_json(triangle_scenario());
    ASSERT_TRUE(doc.contains("data_center"));
    EXPECT_TRUE(doc["data_center"].contains("x"));
    EXPECT_TRUE(doc["data_center"].contains("y"));
    ASSERT_TRUE(doc.contains("uav"));
    EXPECT_TRUE(doc["uav"].contains("altitude_m"));
    EXPECT_TRUE(doc["uav"].contains("speed_mps"));
    ASSERT_TRUE(doc.contains("radio"));
    EXPECT_TRUE(doc["radio"].contains("tx_power_w"));
    EXPECT_TRUE(doc["radio"].contains("bandwidth_hz"));
    EXPECT_TRUE(doc["radio"].contains("noise_power_w"));
    ASSERT_TRUE(doc.contains("nodes"));
    ASSERT_FALSE(doc["nodes"].empty());
    const nlohmann::json& node = doc["nodes"][0];
    EXPECT_TRUE(node.contains("id"));
    EXPECT_TRUE(node.contains("x"));
    EXPECT_TRUE(node.contains("y"));
    EXPECT_TRUE(node.contains("data_bits"));
    EXPECT_TRUE(node.contains("ref_gain_linear"));
}

TEST(ScenarioIo, AcceptsHandWrittenDocument) {
    const char* text = R"({
        "data_center": {"x": 0.0, "y": 0.0},
        "uav": {"altitude_m": 30.0, "speed_mps": 10.0},
        "radio": {"tx_power_w": 0.3, "bandwidth_hz": 1e6, "noise_power_w": 1e-14},
        "nodes": [
            {"id": 2, "x": 40.0, "y": 30.0, "data_bits": 5e5, "ref_gain_linear": 1e-5},
            {"id": 1, "x": 0.0, "y": 30.0, "data_bits": 5e5, "ref_gain_linear": 1e-5}
        ]
    })";
    const wsn::Scenario s = wsn::scenario_from_json(nlohmann::json::parse(text));
    ASSERT_EQ(s.nodes.size(), 2u);
    EXPECT_EQ(s.nodes[0].id, 1);
    EXPECT_DOUBLE_EQ(s.nodes[0].position.y, 30.0);
    EXPECT_EQ(s.nodes[1].id, 2);
    EXPECT_DOUBLE_EQ(s.nodes[1].position.x, 40.0);
}

TEST(ScenarioIo, RejectsMalformedDocuments) {
    EXPECT_THROW(wsn::scenario_from_json(nlohmann::json::parse(R"({"nodes": []})")),
                 std::invalid_argument);
    const char* missing_field = R"({
        "data_center": {"x": 0.0, "y": 0.0},
        "uav": {"altitude_m": 30.0, "speed_mps": 10.0},
        "radio": {"tx_power_w": 0.3, "bandwidth_hz": 1e6, "noise_power_w": 1e-14},
        "nodes": [{"id": 1, "x": 0.0, "y": 30.0, "data_bits": 5e5}]
    })";
    EXPECT_THROW(wsn::scenario_from_json(nlohmann::json::parse(missing_field)),
                 std::invalid_argument);
}

TEST(ScenarioIo, FileRoundTrip) {
    const std::string path = ::testing::TempDir() + "scenario_roundtrip.json";
    const wsn::Scenario s = test_support::random_scenario(5, 17);
    wsn::save_scenario_file(s, path);
    const wsn::Scenario back = wsn::load_scenario_file(path);
    ASSERT_EQ(back.nodes.size(), s.nodes.size());
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        EXPECT_DOUBLE_EQ(back.nodes[i].position.x, s.nodes[i].position.x);
        EXPECT_DOUBLE_EQ(back.nodes[i].position.y, s.nodes[i].position.y);
    }
    EXPECT_THROW(wsn::load_scenario_file("/nonexistent/path/scenario.json"), std::runtime_error);
}
