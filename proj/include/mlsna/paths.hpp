#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlsna/graph.hpp"
#include "mlsna/measures.hpp"

namespace mlsna {

enum class MultiEdgeMode { ByLayers, ByDistance, Both };

struct MultiEdge {
    std::string source;
    std::string target;
    double distance = 0.0; // strangeness of the ordered pair
    int layer_count = 0;   // layers carrying <source,target,l>
};

/// d(x,y) = 1 - sum_l w(x,y,l) / |L|; pass invert=false for networks whose
/// weights already encode distance. All weights must lie in [0,1].
double strangeness(const Msn& msn, const std::string& x, const std::string& y, bool invert = true);

/// Directed multi-layered edges satisfying the mode's predicate:
/// ByLayers keeps pairs with >= alpha directed edges, ByDistance pairs
/// with strangeness <= beta, Both requires both.
std::vector<MultiEdge> multi_edges(const Msn& msn, MultiEdgeMode mode, int alpha, double beta,
                                   bool invert = true);

struct PathResult {
    std::string source;
    std::map<std::string, double> lengths;            // reachable nodes only; source maps to 0
    std::map<std::string, std::string> predecessors;  // absent for the source itself
};

/// Dijkstra with a precomputed multi-layered edge graph ME(alpha, beta).
PathResult shortest_paths_dap(const Msn& msn, const std::string& source, int alpha, double beta,
                              bool invert = true);

/// Dijkstra expanding MN^Out(v, alpha) on the fly; equivalent to DAP with
/// beta = 1.
PathResult shortest_paths_mda(const Msn& msn, const std::string& source, int alpha,
                              bool invert = true);

/// The ME(alpha,beta) graph in dense form, for closeness/betweenness over
/// multi-layered distances.
WeightedDigraph me_graph(const Msn& msn, int alpha, double beta, bool invert = true);

} // namespace mlsna
