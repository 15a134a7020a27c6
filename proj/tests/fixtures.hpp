#pragma once

// Shared test networks. karate/kite/football data are the standard public
// fixtures; expected values were cross-checked against the published
// tables before being frozen here.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlsna/graph.hpp"
#include "mlsna/rng.hpp"

namespace fixtures {

inline const std::vector<std::pair<int, int>>& karate_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {2, 1},   {3, 1},   {3, 2},   {4, 1},   {4, 2},   {4, 3},   {5, 1},   {6, 1},
        {7, 1},   {7, 5},   {7, 6},   {8, 1},   {8, 2},   {8, 3},   {8, 4},   {9, 1},
        {9, 3},   {10, 3},  {11, 1},  {11, 5},  {11, 6},  {12, 1},  {13, 1},  {13, 4},
        {14, 1},  {14, 2},  {14, 3},  {14, 4},  {17, 6},  {17, 7},  {18, 1},  {18, 2},
        {20, 1},  {20, 2},  {22, 1},  {22, 2},  {26, 24}, {26, 25}, {28, 3},  {28, 24},
        {28, 25}, {29, 3},  {30, 24}, {30, 27}, {31, 2},  {31, 9},  {32, 1},  {32, 25},
        {32, 26}, {32, 29}, {33, 3},  {33, 9},  {33, 15}, {33, 16}, {33, 19}, {33, 21},
        {33, 23}, {33, 24}, {33, 30}, {33, 31}, {33, 32}, {34, 9},  {34, 10}, {34, 14},
        {34, 15}, {34, 16}, {34, 19}, {34, 20}, {34, 21}, {34, 23}, {34, 24}, {34, 27},
        {34, 28}, {34, 29}, {34, 30}, {34, 31}, {34, 32}, {34, 33}};
    return edges;
}

inline std::string kn(int v) {
    // zero-padded so lexicographic node order matches numeric order
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d", v);
    return buf;
}

inline mlsna::Msn karate() {
    std::vector<mlsna::EdgeRecord> recs;
    for (auto [a, b] : karate_edges()) {
        recs.push_back({kn(a), kn(b), "l1", 1.0});
        recs.push_back({kn(b), kn(a), "l1", 1.0});
    }
    return mlsna::load_msn(recs);
}

// Published per-pair measure values for the first three divisive
// iterations; -1 marks a pair already removed.
struct KaratePairValues {
    int a, b;
    double it1, it2, it3;
};

inline const std::vector<KaratePairValues>& karate_iteration_values() {
    static const std::vector<KaratePairValues> t = {
        {2, 1, 0.4118, 0.5000, 0.5385},   {3, 1, 0.2500, 0.3333, 0.2857},
        {3, 2, 0.2857, 0.4000, 0.4444},   {4, 1, 0.3125, 0.3571, 0.3846},
        {4, 2, 0.4000, 0.4444, 0.4444},   {4, 3, 0.3636, 0.5000, 0.5714},
        {5, 1, 0.1250, 0.1429, 0.1538},   {6, 1, 0.1176, 0.1333, 0.1429},
        {7, 1, 0.1176, 0.1333, 0.1429},   {7, 5, 0.2000, 0.2000, 0.2000},
        {7, 6, 0.4000, 0.4000, 0.4000},   {8, 1, 0.1875, 0.2143, 0.2308},
        {8, 2, 0.3333, 0.3750, 0.3750},   {8, 3, 0.3000, 0.4286, 0.5000},
        {8, 4, 0.5000, 0.5000, 0.5000},   {9, 1, 0.0526, 0.0588, -1},
        {9, 3, 0.1667, 0.2222, 0.0000},   {10, 3, 0.0000, -1, -1},
        {11, 1, 0.1250, 0.1429, 0.1538},  {11, 5, 0.2500, 0.2500, 0.2500},
        {11, 6, 0.2000, 0.2000, 0.2000},  {12, 1, 0.0000, -1, -1},
        {13, 1, 0.0625, 0.0714, 0.0769},  {13, 4, 0.1667, 0.1667, 0.1667},
        {14, 1, 0.1765, 0.2143, 0.2308},  {14, 2, 0.3000, 0.3750, 0.3750},
        {14, 3, 0.2727, 0.4286, 0.5000},  {14, 4, 0.4286, 0.5000, 0.5000},
        {17, 6, 0.2500, 0.2500, 0.2500},  {17, 7, 0.2500, 0.2500, 0.2500},
        {18, 1, 0.0625, 0.0714, 0.0769},  {18, 2, 0.1111, 0.1250, 0.1250},
        {20, 1, 0.0588, 0.0714, 0.0769},  {20, 2, 0.1000, 0.1250, 0.1250},
        {22, 1, 0.0625, 0.0714, 0.0769},  {22, 2, 0.1111, 0.1250, 0.1250},
        {26, 24, 0.0000, -1, -1},         {26, 25, 0.2500, 0.5000, 0.5000},
        {28, 3, 0.0000, -1, -1},          {28, 24, 0.1429, 0.2500, 0.2500},
        {28, 25, 0.0000, -1, -1},         {29, 3, 0.0000, -1, -1},
        {30, 24, 0.3333, 0.4000, 0.4000}, {30, 27, 0.2500, 0.2500, 0.2500},
        {31, 2, 0.0000, -1, -1},          {31, 9, 0.3333, 0.4000, 0.5000},
        {32, 1, 0.0000, -1, -1},          {32, 25, 0.1429, 0.2000, 0.2000},
        {32, 26, 0.1429, 0.2000, 0.2000}, {32, 29, 0.1429, 0.2000, 0.2000},
        {33, 3, 0.0500, 0.0588, -1},      {33, 9, 0.2308, 0.2308, 0.1667},
        {33, 15, 0.0833, 0.0833, 0.0909}, {33, 16, 0.0833, 0.0833, 0.0909},
        {33, 19, 0.0833, 0.0833, 0.0909}, {33, 21, 0.0833, 0.0833, 0.0909},
        {33, 23, 0.0833, 0.0833, 0.0909}, {33, 24, 0.1429, 0.1538, 0.1667},
        {33, 30, 0.1538, 0.1538, 0.1667}, {33, 31, 0.1538, 0.1667, 0.1818},
        {33, 32, 0.0625, 0.0667, 0.0714}, {34, 9, 0.1053, 0.1250, 0.1333},
        {34, 10, 0.0000, -1, -1},         {34, 14, 0.0000, -1, -1},
        {34, 15, 0.0588, 0.0714, 0.0714}, {34, 16, 0.0588, 0.0714, 0.0714},
        {34, 19, 0.0588, 0.0714, 0.0714}, {34, 20, 0.0000, -1, -1},
        {34, 21, 0.0588, 0.0714, 0.0714}, {34, 23, 0.0588, 0.0714, 0.0714},
        {34, 24, 0.1667, 0.2143, 0.2143}, {34, 27, 0.0588, 0.0714, 0.0714},
        {34, 28, 0.0526, 0.0714, 0.0714}, {34, 29, 0.0556, 0.0714, 0.0714},
        {34, 30, 0.1765, 0.2143, 0.2143}, {34, 31, 0.1111, 0.1429, 0.1429},
        {34, 32, 0.1000, 0.1250, 0.1250}, {34, 33, 0.5556, 0.6667, 0.7143}};
    return t;
}

inline const std::vector<std::pair<int, int>>& karate_first_removals() {
    static const std::vector<std::pair<int, int>> r = {{10, 3},  {12, 1},  {26, 24}, {28, 3},
                                                       {28, 25}, {29, 3},  {31, 2},  {32, 1},
                                                       {34, 10}, {34, 14}, {34, 20}};
    return r;
}

// Final extraction result: two groups, nodes 10 and 12 left out.
inline const std::vector<int>& karate_group_hi() {
    static const std::vector<int> g = {1, 2, 3, 4, 5, 6, 7, 8, 11, 13, 14, 17, 18, 20, 22};
    return g;
}
inline const std::vector<int>& karate_group_john() {
    static const std::vector<int> g = {9, 15, 16, 19, 21, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34};
    return g;
}

// Two-faction split of the club (member 9 stayed with the instructor).
inline const std::vector<int>& karate_faction_hi() {
    static const std::vector<int> g = {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22};
    return g;
}

// Krebs' ten-node kite network.
inline mlsna::Msn kite() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"andre", "beverly"},  {"andre", "carol"},    {"andre", "diane"},   {"andre", "fernando"},
        {"beverly", "diane"},  {"beverly", "ed"},     {"beverly", "garth"}, {"carol", "diane"},
        {"carol", "fernando"}, {"diane", "ed"},       {"diane", "fernando"}, {"diane", "garth"},
        {"ed", "garth"},       {"fernando", "garth"}, {"fernando", "heather"}, {"garth", "heather"},
        {"heather", "ike"},    {"ike", "jane"}};
    std::vector<mlsna::EdgeRecord> recs;
    for (const auto& [a, b] : edges) {
        recs.push_back({a, b, "l1", 1.0});
        recs.push_back({b, a, "l1", 1.0});
    }
    return mlsna::load_msn(recs);
}

// Three-layer, six-node example network; one record per undirected pair.
inline mlsna::Msn three_layer_example() {
    static const std::vector<std::tuple<std::string, std::string, std::string>> tuples = {
        {"x", "u", "l1"}, {"x", "y", "l1"}, {"x", "z", "l1"}, {"y", "z", "l1"},
        {"z", "t", "l1"}, {"z", "u", "l1"}, {"u", "v", "l1"}, {"t", "v", "l1"},
        {"x", "u", "l2"}, {"x", "v", "l2"}, {"x", "y", "l2"}, {"x", "z", "l2"},
        {"y", "v", "l2"}, {"u", "v", "l2"},
        {"x", "u", "l3"}, {"x", "v", "l3"}, {"x", "y", "l3"}, {"x", "z", "l3"},
        {"y", "v", "l3"}, {"y", "z", "l3"}, {"z", "t", "l3"}, {"t", "v", "l3"}};
    std::vector<mlsna::EdgeRecord> recs;
    for (const auto& [a, b, l] : tuples) recs.push_back({a, b, l, 1.0});
    return mlsna::load_msn(recs);
}

// Single-layer graph where the central edge <x,y> has 3 common and 8
// total other neighbours in its joined neighbourhood.
inline mlsna::Msn clecc_edge_example() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"x", "y"}, {"x", "b"}, {"x", "f"}, {"x", "g"}, {"x", "h"},
        {"y", "b"}, {"y", "c"}, {"y", "d"}, {"y", "e"}, {"y", "f"}, {"y", "g"}};
    std::vector<mlsna::EdgeRecord> recs;
    for (const auto& [a, b] : edges) {
        recs.push_back({a, b, "l1", 1.0});
        recs.push_back({b, a, "l1", 1.0});
    }
    return mlsna::load_msn(recs);
}

// Single-layer graph whose edge <x,y> carries two of five possible triangles.
inline mlsna::Msn ecc_edge_example() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"x", "y"}, {"x", "a"}, {"x", "b"}, {"x", "f"}, {"x", "g"}, {"x", "h"},
        {"y", "b"}, {"y", "c"}, {"y", "d"}, {"y", "e"}, {"y", "f"}};
    std::vector<mlsna::EdgeRecord> recs;
    for (const auto& [a, b] : edges) {
        recs.push_back({a, b, "l1", 1.0});
        recs.push_back({b, a, "l1", 1.0});
    }
    return mlsna::load_msn(recs);
}

// (conference, extracted group id) per team, in the published order.
inline std::vector<std::pair<std::string, int>> football_reference() {
    using R = std::pair<std::string, int>;
    std::vector<R> rows;
    auto add = [&](const std::string& division, std::initializer_list<int> groups) {
        for (int g : groups) rows.push_back({division, g});
    };
    add("AtlanticCoast", {3, 3, 3, 3, 3, 3, 3, 3, 3});
    add("BigEast", {7, 7, 7, 7, 7, 7, 7, 7});
    add("BigTen", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4});
    add("BigTwelve", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4});
    add("ConferenceUSA", {5, 7, 7, 7, 7, 7, 7, 7, 7, 7});
    add("Independents", {6, 7, 7, 7, 7});
    add("MidAmerican", {7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7});
    add("MountainWest", {5, 5, 5, 5, 5, 5, 5, 5});
    add("PacificTen", {6, 6, 6, 6, 6, 6, 6, 6, 6, 6});
    add("Southeastern", {8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8});
    add("SunBelt", {6, 6, 6, 6, 7, 7, 7});
    add("WesternAthletic", {5, 5, 5, 5, 5, 5, 5, 5, 6, 7});
    return rows;
}

// Random multi-layer network over n nodes and nl layers; directed tuples,
// weights in (0,1].
inline mlsna::Msn random_msn(mlsna::Rng& rng, int n, int nl, double density,
                             bool undirected = false, bool unit_weights = false) {
    std::vector<mlsna::EdgeRecord> recs;
    std::vector<std::string> nodes, layers;
    for (int v = 0; v < n; ++v) nodes.push_back("v" + std::to_string(v));
    for (int l = 0; l < nl; ++l) layers.push_back("l" + std::to_string(l));
    for (int l = 0; l < nl; ++l)
        for (int a = 0; a < n; ++a)
            for (int b = undirected ? a + 1 : 0; b < n; ++b) {
                if (a == b) continue;
                if (rng.uniform() >= density) continue;
                double w = unit_weights ? 1.0 : 0.05 + 0.95 * rng.uniform();
                recs.push_back({nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)],
                                layers[static_cast<std::size_t>(l)], w});
                if (undirected)
                    recs.push_back({nodes[static_cast<std::size_t>(b)], nodes[static_cast<std::size_t>(a)],
                                    layers[static_cast<std::size_t>(l)], w});
            }
    return mlsna::Msn::from_records(recs, nodes, layers);
}

} // namespace fixtures
